use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Rational;

/// A ring generator: a symbol of even positive cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub symbol: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(symbol: impl Into<String>, degree: u32) -> Self {
        Generator {
            symbol: symbol.into(),
            degree,
        }
    }
}

/// Exponent vector over the generators of a presentation, in generator order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn generator(ngens: usize, index: usize) -> Self {
        let mut e = vec![0; ngens];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, gens: &[Generator]) -> u32 {
        self.0.iter().zip(gens).map(|(e, g)| e * g.degree).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn cofactor_in(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// Same exponents padded with trailing zeros for extra generators.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat_n(0, extra));
        Monomial(e)
    }

    /// Renders as `x*y^2` (or `1`).
    pub fn render(&self, gens: &[Generator]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(gens)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| {
                if *e == 1 {
                    g.symbol.clone()
                } else {
                    format!("{}^{}", g.symbol, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0)
    }
}

/// Every monomial in `gens` whose degree lies in `lo..=hi`.
pub(crate) fn monomials_in_degree_range(gens: &[Generator], lo: u32, hi: u32) -> Vec<Monomial> {
    fn rec(gens: &[Generator], idx: usize, cur: &mut Vec<u32>, deg: u32, lo: u32, hi: u32, out: &mut Vec<Monomial>) {
        if idx == gens.len() {
            if deg >= lo {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let d = gens[idx].degree;
        let mut e = 0;
        while deg + e * d <= hi {
            cur.push(e);
            rec(gens, idx + 1, cur, deg + e * d, lo, hi, out);
            cur.pop();
            if d == 0 {
                break;
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, &mut Vec::new(), 0, lo, hi, &mut out);
    out
}

/// A polynomial in the free commutative algebra on the generators, before any
/// relation is applied. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn constant(ngens: usize, c: Rational) -> Self {
        FreePoly::term(Monomial::one(ngens), c)
    }

    pub fn monomial(m: Monomial) -> Self {
        FreePoly::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> FreePoly {
        let mut out = FreePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32, ngens: usize) -> FreePoly {
        (0..k).fold(FreePoly::constant(ngens, Rational::one()), |acc, _| acc.mul(self))
    }

    /// The single degree of all terms, `Ok(None)` for zero, `Err(())` when
    /// terms of different degrees are mixed.
    pub fn homogeneous_degree(&self, gens: &[Generator]) -> Result<Option<u32>, ()> {
        let mut degs = self.terms.keys().map(|m| m.degree(gens));
        let Some(first) = degs.next() else {
            return Ok(None);
        };
        if degs.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(())
        }
    }

    /// The value when this is a constant (degree-zero) polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }
}
