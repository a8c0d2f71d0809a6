use std::sync::Arc;

use crate::arith::Rational;

use super::element::RingElement;
use super::graded::{make_ring, Ring, RingHandle};
use super::monomial::{monomials_in_degree_range, FreePoly, Generator, Monomial};
use super::presentation::{Relation, RingPresentation};
use super::{Orientation, RingError};

/// Cohomology of the projectivization of a rank-`r` bundle over `base`,
/// together with the pullback from the base.
#[derive(Clone, Debug)]
pub struct ProjectiveBundle {
    pub base: Arc<Ring>,
    pub ring: Arc<Ring>,
    /// The hyperplane class of the fibres.
    pub hyperplane: RingElement,
    pub rank: usize,
}

/// Options for [`projectivize`]: ring name, the hyperplane symbol, and
/// optional renames of the base generators in the new ring.
#[derive(Clone, Debug)]
pub struct ProjectivizeOptions {
    pub name: String,
    pub symbol: String,
    pub renames: Vec<(String, String)>,
}

impl ProjectivizeOptions {
    pub fn new(name: &str, symbol: &str) -> Self {
        ProjectivizeOptions {
            name: name.to_string(),
            symbol: symbol.to_string(),
            renames: Vec::new(),
        }
    }

    pub fn rename(mut self, from: &str, to: &str) -> Self {
        self.renames.push((from.to_string(), to.to_string()));
        self
    }
}

/// Builds `H*(P(E))` over `H*(B)` for a bundle `E` of rank `rank` with total
/// Chern class `chern`: the base presentation plus the Grothendieck relation
/// `y^r = -sum_{i>=1} c_i(E) y^{r-i}`. Base monomials that vanish for degree
/// reasons in the base get explicit rules so they stay zero in the bigger
/// ring. The fundamental class pairs `b_top * y^{r-1}` with `<b_top>`.
pub fn projectivize(
    base: &Arc<Ring>,
    rank: usize,
    chern: &RingElement,
    opts: &ProjectivizeOptions,
) -> Result<ProjectiveBundle, RingError> {
    if rank == 0 {
        return Err(RingError::RankZero);
    }
    if !Ring::same(base, chern.ring()) {
        return Err(RingError::RingMismatch {
            left: base.name().to_string(),
            right: chern.ring().name().to_string(),
        });
    }
    if !chern.constant_term().is_one() {
        return Err(RingError::NotATotalClass);
    }
    if chern.support().iter().any(|&k| k > rank) {
        return Err(RingError::BundleRankViolation { rank });
    }
    let base_fund = base
        .fundamental_values()
        .ok_or_else(|| RingError::NoFundamentalClass(base.name().to_string()))?;

    let base_pres = base.presentation();
    let nb = base_pres.generators.len();
    let ngens = nb + 1;
    let base_top = base.top_degree();
    let top = base_top + 2 * (rank as u32 - 1);

    let mut generators: Vec<Generator> = base_pres
        .generators
        .iter()
        .map(|g| {
            let symbol = opts
                .renames
                .iter()
                .find(|(from, _)| *from == g.symbol)
                .map_or(g.symbol.clone(), |(_, to)| to.clone());
            Generator::new(symbol, g.degree)
        })
        .collect();
    generators.push(Generator::new(opts.symbol.clone(), 2));

    let lift = |m: &Monomial| m.extend(1);
    let lift_poly = |p: &FreePoly| {
        let mut out = FreePoly::zero();
        for (m, c) in p.terms() {
            out.add_term(lift(m), c.clone());
        }
        out
    };

    let mut relations: Vec<Relation> = base_pres
        .relations
        .iter()
        .map(|r| Relation {
            lhs: lift(&r.lhs),
            rhs: lift_poly(&r.rhs),
        })
        .collect();

    // base monomials killed only by truncation in the base
    let mut vanishing: Vec<Monomial> = Vec::new();
    for m in monomials_in_degree_range(&base_pres.generators, base_top + 1, top) {
        let reducible =
            base_pres.relations.iter().any(|r| r.lhs.divides(&m)) || vanishing.iter().any(|v| v.divides(&m));
        if !reducible {
            vanishing.push(m);
        }
    }
    vanishing.sort_by_key(|m| m.degree(&base_pres.generators));
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in vanishing {
        if !minimal.iter().any(|v| v.divides(&m)) {
            minimal.push(m);
        }
    }
    relations.extend(minimal.iter().map(|m| Relation {
        lhs: lift(m),
        rhs: FreePoly::zero(),
    }));

    // Grothendieck relation
    let y = Monomial::generator(ngens, nb);
    let mut rhs = FreePoly::zero();
    for i in 1..=rank {
        for (idx, c) in chern.part(i).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = lift(&base.basis(i)[idx]).mul(&y.pow((rank - i) as u32));
            rhs.add_term(m, -c.clone());
        }
    }
    relations.push(Relation {
        lhs: y.pow(rank as u32),
        rhs,
    });

    let n_base = base.top_index();
    let fundamental: Vec<(Monomial, Rational)> = base
        .basis(n_base)
        .iter()
        .zip(base_fund)
        .map(|(b, v)| (lift(b).mul(&y.pow(rank as u32 - 1)), v.clone()))
        .collect();

    let presentation = RingPresentation {
        name: opts.name.clone(),
        generators,
        relations,
        top_degree: top,
        lattice: Vec::new(),
        fundamental: Some(fundamental),
    };
    let ring = make_ring(presentation)?;
    let hyperplane = ring.monomial_element(&y);
    Ok(ProjectiveBundle {
        base: base.clone(),
        ring,
        hyperplane,
        rank,
    })
}

impl ProjectiveBundle {
    /// Pullback of a base class along the projection.
    pub fn pullback(&self, e: &RingElement) -> Result<RingElement, RingError> {
        if !Ring::same(&self.base, e.ring()) {
            return Err(RingError::RingMismatch {
                left: self.base.name().to_string(),
                right: e.ring().name().to_string(),
            });
        }
        let mut poly = FreePoly::zero();
        for k in 0..=self.base.top_index() {
            for (c, m) in e.part(k).iter().zip(self.base.basis(k)) {
                poly.add_term(m.extend(1), c.clone());
            }
        }
        Ok(self.ring.from_free(&poly))
    }

    /// Orientation of the total space induced from base and fibre.
    pub fn orientation(&self) -> Orientation {
        Orientation::Positive
    }
}
