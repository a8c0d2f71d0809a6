use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::arith::Rational;

use super::element::RingElement;
use super::linalg::{self, Matrix};
use super::monomial::{monomials_in_degree_range, FreePoly, Generator, Monomial};
use super::presentation::RingPresentation;
use super::{Orientation, RingError};

/// Integral lattice in one degree: generator vectors (rows) over the
/// normal-form basis, and the inverse used to read off lattice coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    pub(crate) generators: Matrix,
    inverse: Matrix,
}

/// A validated graded ring. Elements live in `RingElement`; the ring itself
/// only stores its normal-form tables.
pub struct Ring {
    presentation: RingPresentation,
    /// `basis[k]` spans degree `2k`.
    basis: Vec<Vec<Monomial>>,
    /// Normal form of every monomial of degree at most the top degree.
    normal_forms: HashMap<Monomial, Vec<Rational>>,
    lattice: Vec<Lattice>,
    fundamental: Option<Vec<Rational>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring").field("name", &self.presentation.name).finish()
    }
}

/// Validates a presentation and builds its normal-form tables.
pub fn make_ring(presentation: RingPresentation) -> Result<Arc<Ring>, RingError> {
    Ring::build(presentation).map(Arc::new)
}

impl Ring {
    fn build(p: RingPresentation) -> Result<Ring, RingError> {
        let gens = p.generators.clone();
        let mut seen = HashSet::new();
        for g in &gens {
            if !seen.insert(g.symbol.as_str()) {
                return Err(RingError::DuplicateGenerator(g.symbol.clone()));
            }
            if g.degree == 0 || g.degree % 2 != 0 {
                return Err(RingError::OddGeneratorDegree {
                    symbol: g.symbol.clone(),
                    degree: g.degree,
                });
            }
        }
        if !p.top_degree.is_multiple_of(2) {
            return Err(RingError::OddTopDegree(p.top_degree));
        }
        for rel in &p.relations {
            if rel.lhs.exponents().len() != gens.len()
                || rel.rhs.terms().any(|(m, _)| m.exponents().len() != gens.len())
            {
                return Err(RingError::MalformedMonomial);
            }
            if rel.lhs.is_one() {
                return Err(RingError::TrivialRelation);
            }
            let d = rel.lhs.degree(&gens);
            if rel.rhs.terms().any(|(m, _)| m.degree(&gens) != d) {
                return Err(RingError::InhomogeneousRelation {
                    lhs: rel.lhs.render(&gens),
                });
            }
        }

        let n = (p.top_degree / 2) as usize;
        let all = monomials_in_degree_range(&gens, 0, p.top_degree);
        let mut basis: Vec<Vec<Monomial>> = vec![Vec::new(); n + 1];
        for m in &all {
            if !p.relations.iter().any(|r| r.lhs.divides(m)) {
                basis[(m.degree(&gens) / 2) as usize].push(m.clone());
            }
        }
        for b in &mut basis {
            b.sort_by(|a, b| b.cmp(a));
        }

        let mut ring = Ring {
            presentation: p,
            basis,
            normal_forms: HashMap::new(),
            lattice: Vec::new(),
            fundamental: None,
        };

        let mut visiting = HashSet::new();
        for m in &all {
            ring.normal_form_with(m, None, &mut visiting)?;
        }
        ring.check_confluence(&all)?;
        ring.fundamental = ring.build_fundamental()?;
        ring.lattice = ring.build_lattice()?;
        Ok(ring)
    }

    fn unit_vector(&self, k: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.basis[k].len()];
        v[i] = Rational::one();
        v
    }

    /// Normal form of `m` rewriting first with `first_rule` (when applicable)
    /// and with the first applicable rule everywhere else.
    fn normal_form_with(
        &mut self,
        m: &Monomial,
        first_rule: Option<usize>,
        visiting: &mut HashSet<Monomial>,
    ) -> Result<Vec<Rational>, RingError> {
        if first_rule.is_none() {
            if let Some(v) = self.normal_forms.get(m) {
                return Ok(v.clone());
            }
        }
        let gens = &self.presentation.generators;
        let k = (m.degree(gens) / 2) as usize;
        if let Some(i) = self.basis[k].iter().position(|b| b == m) {
            let v = self.unit_vector(k, i);
            self.normal_forms.insert(m.clone(), v.clone());
            return Ok(v);
        }
        if !visiting.insert(m.clone()) {
            return Err(RingError::NonTerminating {
                monomial: m.render(gens),
            });
        }
        let rule_idx = match first_rule {
            Some(r) => r,
            None => self
                .presentation
                .relations
                .iter()
                .position(|r| r.lhs.divides(m))
                .expect("non-basis monomial always has an applicable rule"),
        };
        let rule = self.presentation.relations[rule_idx].clone();
        let rest = rule.lhs.cofactor_in(m);
        let mut acc = vec![Rational::zero(); self.basis[k].len()];
        for (mono, c) in rule.rhs.terms() {
            let v = self.normal_form_with(&mono.mul(&rest), None, visiting)?;
            for (a, x) in acc.iter_mut().zip(v) {
                *a += c * &x;
            }
        }
        visiting.remove(m);
        if first_rule.is_none() {
            self.normal_forms.insert(m.clone(), acc.clone());
        }
        Ok(acc)
    }

    /// Every monomial must reach the same normal form whichever applicable
    /// rule is used first; with termination this gives confluence.
    fn check_confluence(&mut self, all: &[Monomial]) -> Result<(), RingError> {
        let nrel = self.presentation.relations.len();
        for m in all {
            let applicable: Vec<usize> = (0..nrel)
                .filter(|&r| self.presentation.relations[r].lhs.divides(m))
                .collect();
            if applicable.len() < 2 {
                continue;
            }
            let reference = self.normal_forms[m].clone();
            for &r in &applicable {
                let v = self.normal_form_with(m, Some(r), &mut HashSet::new())?;
                if v != reference {
                    return Err(RingError::NonConfluent {
                        monomial: m.render(&self.presentation.generators),
                    });
                }
            }
        }
        Ok(())
    }

    fn build_fundamental(&self) -> Result<Option<Vec<Rational>>, RingError> {
        let Some(entries) = &self.presentation.fundamental else {
            return Ok(None);
        };
        let gens = &self.presentation.generators;
        let n = self.top_index();
        if self.basis[n].is_empty() {
            return Err(RingError::EmptyTopDegree);
        }
        let mut values: Vec<Option<Rational>> = vec![None; self.basis[n].len()];
        for (m, v) in entries {
            let idx = self.basis[n]
                .iter()
                .position(|b| b == m)
                .ok_or_else(|| RingError::NotATopBasisMonomial(m.render(gens)))?;
            values[idx] = Some(v.clone());
        }
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| RingError::MissingFundamental(self.basis[n][i].render(gens))))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    fn build_lattice(&self) -> Result<Vec<Lattice>, RingError> {
        let gens = &self.presentation.generators;
        let mut declared: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); self.top_index() + 1];
        for (deg, poly) in &self.presentation.lattice {
            let Some(k) = (deg % 2 == 0)
                .then_some((deg / 2) as usize)
                .filter(|&k| k < declared.len())
            else {
                return Err(RingError::LatticeDegree { degree: *deg });
            };
            match poly.homogeneous_degree(gens) {
                Ok(Some(d)) if d == *deg => {}
                Ok(None) => return Err(RingError::ZeroLatticeGenerator { degree: *deg }),
                _ => return Err(RingError::LatticeDegree { degree: *deg }),
            }
            declared[k].push(self.reduce(poly)[k].clone());
        }
        declared
            .into_iter()
            .enumerate()
            .map(|(k, rows)| {
                let rows = if rows.is_empty() {
                    (0..self.basis[k].len()).map(|i| self.unit_vector(k, i)).collect()
                } else {
                    rows
                };
                if rows.len() != self.basis[k].len() {
                    return Err(RingError::LatticeRank {
                        degree: 2 * k as u32,
                        expected: self.basis[k].len(),
                        got: rows.len(),
                    });
                }
                let inverse = linalg::invert(&rows).ok_or(RingError::LatticeSingular { degree: 2 * k as u32 })?;
                Ok(Lattice {
                    generators: rows,
                    inverse,
                })
            })
            .collect()
    }

    /// Normal form of a free polynomial as per-degree coefficient vectors.
    fn reduce(&self, poly: &FreePoly) -> Vec<Vec<Rational>> {
        let mut parts: Vec<Vec<Rational>> = self.basis.iter().map(|b| vec![Rational::zero(); b.len()]).collect();
        let gens = &self.presentation.generators;
        for (m, c) in poly.terms() {
            let deg = m.degree(gens);
            if deg > self.presentation.top_degree {
                continue;
            }
            let k = (deg / 2) as usize;
            for (a, x) in parts[k].iter_mut().zip(&self.normal_forms[m]) {
                *a += c * x;
            }
        }
        parts
    }

    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[Generator] {
        &self.presentation.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.presentation.top_degree
    }

    /// Complex dimension: top degree over two.
    pub fn top_index(&self) -> usize {
        (self.presentation.top_degree / 2) as usize
    }

    /// Normal-form basis of degree `2k`.
    pub fn basis(&self, k: usize) -> &[Monomial] {
        &self.basis[k]
    }

    pub fn dimension(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn has_fundamental_class(&self) -> bool {
        self.fundamental.is_some()
    }

    pub(crate) fn fundamental_values(&self) -> Option<&[Rational]> {
        self.fundamental.as_deref()
    }

    pub(crate) fn lattice(&self, k: usize) -> &Lattice {
        &self.lattice[k]
    }

    pub(crate) fn normal_form(&self, m: &Monomial) -> Option<&Vec<Rational>> {
        self.normal_forms.get(m)
    }

    /// Rings are interchangeable when they are the same allocation or carry
    /// identical presentations.
    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a.presentation == b.presentation
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.presentation.generator_index(symbol)
    }
}

impl Lattice {
    /// Coordinates of `v` in the lattice basis.
    pub(crate) fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        linalg::vec_mul(v, &self.inverse)
    }
}

/// Constructors of elements; these need the `Arc` handle.
pub trait RingHandle {
    fn zero(&self) -> RingElement;
    fn one(&self) -> RingElement;
    fn scalar(&self, c: Rational) -> RingElement;
    fn generator(&self, symbol: &str) -> Result<RingElement, RingError>;
    fn monomial_element(&self, m: &Monomial) -> RingElement;
    fn from_free(&self, poly: &FreePoly) -> RingElement;
    /// `c * basis(k)[i]`
    fn basis_element(&self, k: usize, i: usize) -> RingElement;
    /// The `i`-th lattice generator of degree `2k`.
    fn lattice_generator(&self, k: usize, i: usize) -> RingElement;
    /// Determinant of the intersection pairing between the integral lattices
    /// in degrees `2k` and `2(n-k)`; unimodular rings give `+-1`.
    fn duality_determinant(&self, k: usize) -> Result<Rational, RingError>;
}

impl RingHandle for Arc<Ring> {
    fn zero(&self) -> RingElement {
        RingElement::from_parts(
            self.clone(),
            self.basis.iter().map(|b| vec![Rational::zero(); b.len()]).collect(),
        )
    }

    fn one(&self) -> RingElement {
        self.scalar(Rational::one())
    }

    fn scalar(&self, c: Rational) -> RingElement {
        let mut z = self.zero();
        z.parts_mut()[0][0] = c;
        z
    }

    fn generator(&self, symbol: &str) -> Result<RingElement, RingError> {
        let idx = self
            .generator_index(symbol)
            .ok_or_else(|| RingError::UnknownSymbol(symbol.to_string()))?;
        Ok(self.monomial_element(&Monomial::generator(self.generators().len(), idx)))
    }

    fn monomial_element(&self, m: &Monomial) -> RingElement {
        self.from_free(&FreePoly::monomial(m.clone()))
    }

    fn from_free(&self, poly: &FreePoly) -> RingElement {
        RingElement::from_parts(self.clone(), self.reduce(poly))
    }

    fn basis_element(&self, k: usize, i: usize) -> RingElement {
        self.monomial_element(&self.basis[k][i].clone())
    }

    fn lattice_generator(&self, k: usize, i: usize) -> RingElement {
        let mut z = self.zero();
        z.parts_mut()[k] = self.lattice[k].generators[i].clone();
        z
    }

    fn duality_determinant(&self, k: usize) -> Result<Rational, RingError> {
        let n = self.top_index();
        let mut m: Matrix = Vec::new();
        for i in 0..self.dimension(k) {
            let a = self.lattice_generator(k, i);
            let row = (0..self.dimension(n - k))
                .map(|j| (&a * &self.lattice_generator(n - k, j)).evaluate_top(Orientation::Positive))
                .collect::<Result<Vec<_>, _>>()?;
            m.push(row);
        }
        if m.iter().any(|r| r.len() != m.len()) {
            return Ok(Rational::zero());
        }
        Ok(linalg::determinant(&m))
    }
}
