use crate::arith::Rational;

use super::monomial::{FreePoly, Generator, Monomial};
use super::RingError;

/// Oriented rewrite rule `lhs -> rhs`; `rhs` must be homogeneous of the
/// degree of `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs: FreePoly,
}

/// Unvalidated description of a finitely presented graded ring concentrated
/// in even degrees. Turned into a [`super::Ring`] by [`super::make_ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub name: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub top_degree: u32,
    /// Integral lattice generators as `(degree, element)`. Degrees with no
    /// entry use the normal-form basis monomials.
    pub lattice: Vec<(u32, FreePoly)>,
    /// Pairing of top-degree basis monomials with the fundamental class in
    /// the reference orientation. `None` for rings with no fundamental class
    /// (universal coefficient rings).
    pub fundamental: Option<Vec<(Monomial, Rational)>>,
}

impl RingPresentation {
    pub fn new(name: impl Into<String>, top_degree: u32) -> Self {
        RingPresentation {
            name: name.into(),
            generators: Vec::new(),
            relations: Vec::new(),
            top_degree,
            lattice: Vec::new(),
            fundamental: Some(Vec::new()),
        }
    }

    pub fn with_generator(mut self, symbol: &str, degree: u32) -> Self {
        self.generators.push(Generator::new(symbol, degree));
        self
    }

    /// Adds `lhs -> sum c_i m_i`; monomials are written like `x*y^2`.
    pub fn with_relation(mut self, lhs: &str, rhs: &[(i64, i64, &str)]) -> Result<Self, RingError> {
        let lhs = self.monomial(lhs)?;
        let rhs = self.poly(rhs)?;
        self.relations.push(Relation { lhs, rhs });
        Ok(self)
    }

    /// Lattice generator `(n/d) * m` in the degree of `m`.
    pub fn with_lattice(mut self, n: i64, d: i64, mono: &str) -> Result<Self, RingError> {
        let m = self.monomial(mono)?;
        let deg = m.degree(&self.generators);
        let c = Rational::new(n, d).map_err(|_| RingError::ZeroLatticeGenerator { degree: deg })?;
        self.lattice.push((deg, FreePoly::term(m, c)));
        Ok(self)
    }

    pub fn with_fundamental(mut self, mono: &str, value: i64) -> Result<Self, RingError> {
        let m = self.monomial(mono)?;
        self.fundamental
            .get_or_insert_with(Vec::new)
            .push((m, Rational::from(value)));
        Ok(self)
    }

    pub fn without_fundamental(mut self) -> Self {
        self.fundamental = None;
        self
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.symbol == symbol)
    }

    /// Parses a product of generator powers such as `x*y^2` or `1`.
    pub fn monomial(&self, text: &str) -> Result<Monomial, RingError> {
        let mut exps = vec![0u32; self.generators.len()];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::from_exponents(exps));
        }
        for factor in text.split('*') {
            let (sym, e) = match factor.trim().split_once('^') {
                Some((s, e)) => (
                    s.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| RingError::UnknownSymbol(factor.to_string()))?,
                ),
                None => (factor.trim(), 1),
            };
            let idx = self
                .generator_index(sym)
                .ok_or_else(|| RingError::UnknownSymbol(sym.to_string()))?;
            exps[idx] += e;
        }
        Ok(Monomial::from_exponents(exps))
    }

    fn poly(&self, terms: &[(i64, i64, &str)]) -> Result<FreePoly, RingError> {
        let mut p = FreePoly::zero();
        for &(n, d, m) in terms {
            let c = Rational::new(n, d).map_err(|_| RingError::UnknownSymbol(format!("{n}/{d}")))?;
            p.add_term(self.monomial(m)?, c);
        }
        Ok(p)
    }
}
