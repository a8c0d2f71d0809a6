//! Case elimination for the Fano index `d` of a Fano five-fold with the
//! cohomology ring, Pontryagin classes and `c1c4` of `Z`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::Rational;
use crate::catalogue::{z_ring, CatalogueError};
use crate::charclass::{todd_polynomial, universal_chern_ring, ClassError, Space, TotalClass};
use crate::ring::{Orientation, Ring, RingElement, RingError, RingHandle};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Catalogue(#[from] CatalogueError),
    #[error("invalid topological input: {0}")]
    InvalidInput(String),
    #[error("{0} is not a candidate index")]
    NotACandidate(i64),
}

/// Homeomorphism-invariant data plus the facts used to prune indices.
#[derive(Clone, Debug)]
pub struct TopologicalInput {
    pub ring: Arc<Ring>,
    pub p1: RingElement,
    pub p2: RingElement,
    pub c1c4_value: i64,
    pub euler_characteristic: i64,
    pub todd_genus: i64,
    pub spin: bool,
    /// Positive index at most `dim + 1`.
    pub kobayashi_ochiai: bool,
    /// Index `dim` forces the quadric, whose ring differs.
    pub quadric_ring_excluded: bool,
    /// Index `dim + 1` forces projective space, whose ring differs.
    pub cp5_ring_excluded: bool,
}

impl TopologicalInput {
    /// The data of `Z`: `p1 = L^2/3`, `p2 = L^4/9`, `c1c4 = 90`, non-spin.
    pub fn standard() -> Result<Self, RigidityError> {
        let ring = z_ring()?;
        let p1 = ring.lattice_generator(2, 0);
        let p2 = ring.lattice_generator(4, 0).scale(&Rational::from(2));
        Ok(TopologicalInput {
            ring,
            p1,
            p2,
            c1c4_value: 90,
            euler_characteristic: 6,
            todd_genus: 1,
            spin: false,
            kobayashi_ochiai: true,
            quadric_ring_excluded: true,
            cp5_ring_excluded: true,
        })
    }

    fn dim(&self) -> i64 {
        self.ring.top_index() as i64
    }

    pub fn validate(&self) -> Result<(), RigidityError> {
        let r = &self.ring;
        if r.top_index() != 5 || (0..=5).any(|k| r.dimension(k) != 1) {
            return Err(RigidityError::InvalidInput(
                "ring must have rank one in every even degree up to 10".into(),
            ));
        }
        if r.generators().iter().filter(|g| g.degree == 2).count() != 1 {
            return Err(RigidityError::InvalidInput("ring needs one degree-2 generator".into()));
        }
        if !self.p1.is_homogeneous_of(2) || !self.p2.is_homogeneous_of(4) {
            return Err(RigidityError::InvalidInput("p1, p2 must have degrees 4 and 8".into()));
        }
        if !self.p1.is_integral() || !self.p2.is_integral() {
            return Err(RigidityError::InvalidInput("p1, p2 must be integral".into()));
        }
        if self.c1c4_value == 0 {
            return Err(RigidityError::InvalidInput("c1c4 must be nonzero".into()));
        }
        Ok(())
    }

    fn line(&self) -> RingElement {
        self.ring.lattice_generator(1, 0)
    }

    /// Why a divisor is pruned before any computation, if it is.
    fn pruned_by(&self, d: i64) -> Option<&'static str> {
        let n = self.dim();
        if !self.spin && d % 2 == 0 {
            return Some("c1 has odd divisibility (non-spin)");
        }
        if d > 0 && self.kobayashi_ochiai && d > n + 1 {
            return Some("Kobayashi-Ochiai bound d <= dim + 1");
        }
        if d == n + 1 && self.cp5_ring_excluded {
            return Some("index dim + 1 forces CP5, whose ring differs");
        }
        if d == n && self.quadric_ring_excluded {
            return Some("index dim forces the quadric, whose ring differs");
        }
        None
    }
}

/// Display order: positive indices ascending, then negative ones by size.
fn canonical_order(v: &mut [i64]) {
    v.sort_by_key(|&d| (d < 0, d.abs()));
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut out: Vec<i64> = (1..=n).filter(|k| n % k == 0).flat_map(|k| [k, -k]).collect();
    canonical_order(&mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub candidates: Vec<i64>,
    /// Divisors removed by the input facts, with the fact used.
    pub pruned: Vec<(i64, &'static str)>,
}

pub fn candidate_set(t: &TopologicalInput) -> CandidateSet {
    let mut candidates = Vec::new();
    let mut pruned = Vec::new();
    for d in divisors(t.c1c4_value) {
        match t.pruned_by(d) {
            None => candidates.push(d),
            Some(why) => pruned.push((d, why)),
        }
    }
    CandidateSet { candidates, pruned }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailReason {
    IndexBoundExcluded,
    Mod27Obstruction,
    IntegralityFailure,
    ToddVsPontryaginMismatch,
}

impl FailReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailReason::IndexBoundExcluded => "index_bound_excluded",
            FailReason::Mod27Obstruction => "mod27_obstruction",
            FailReason::IntegralityFailure => "integrality_failure",
            FailReason::ToddVsPontryaginMismatch => "todd_vs_pontryagin_mismatch",
        }
    }
}

impl fmt::Display for FailReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub d: i64,
    pub c1: RingElement,
    pub c2: RingElement,
    pub c4: RingElement,
    pub c1c3: RingElement,
    /// `c1c3 / c1`; integral only when the case survives.
    pub c3: RingElement,
    /// `<c1^2 c3>` solved from the degree-5 Todd polynomial.
    pub todd_rhs: Rational,
    /// `<c1^2 c3>` from the `p2` relation.
    pub pontryagin_lhs: Rational,
    /// `(1440 td + c1c4) mod 27`, computed when `9 | d`.
    pub mod27_residue: Option<i64>,
    pub verdict: Verdict,
    /// Every failed check, in precedence order.
    pub failures: Vec<FailReason>,
    /// Input facts that prune this index, if any.
    pub assumptions: Vec<&'static str>,
}

impl CaseReport {
    pub fn fail_reason(&self) -> Option<FailReason> {
        self.failures.first().copied()
    }
}

/// Solves the degree-5 Todd identity `<td_5> = todd_genus` for `<c1^2 c3>`,
/// given the other Chern numbers it involves.
fn todd_solve_c1sq_c3(
    todd_genus: &Rational,
    c: &[RingElement],
    orientation: Orientation,
) -> Result<Rational, RigidityError> {
    let u = universal_chern_ring(5);
    let td5 = todd_polynomial(5, 5);
    let mut target_coeff = Rational::zero();
    let mut rest = Rational::zero();
    for (coeff, m) in td5.part(5).iter().zip(u.ring.basis(5)) {
        if coeff.is_zero() {
            continue;
        }
        let e = m.exponents();
        if e == [2, 0, 1, 0, 0] {
            target_coeff = coeff.clone();
            continue;
        }
        if e[2] != 0 || e[4] != 0 {
            return Err(RigidityError::InvalidInput(format!(
                "Todd polynomial involves {} beyond c1^2c3",
                m.render(u.ring.generators())
            )));
        }
        let value = e
            .iter()
            .enumerate()
            .fold(c[0].ring().one(), |acc, (i, &p)| &acc * &c[i + 1].pow(p))
            .evaluate_top(orientation)?;
        rest += coeff * &value;
    }
    Ok((todd_genus - &rest)
        .checked_div(&target_coeff)
        .expect("c1^2c3 appears in td5"))
}

fn compute(d: i64, t: &TopologicalInput) -> Result<CaseReport, RigidityError> {
    let ring = &t.ring;
    let half = Rational::new(1, 2).unwrap();
    let o = Orientation::Positive;
    let c1 = t.line().scale(&Rational::from(d));
    let c2 = (&(&c1 * &c1) - &t.p1).scale(&half);
    let e4 = ring.lattice_generator(4, 0);
    let unit = (&c1 * &e4).evaluate_top(o)?;
    let c4 = e4.scale(&Rational::from(t.c1c4_value).checked_div(&unit).expect("d is nonzero"));
    let c1c3 = (&(&(&c2 * &c2) + &c4.scale(&Rational::from(2))) - &t.p2).scale(&half);
    let c3 = c1c3.divide_by_line_class(&c1, 4)?;

    let pontryagin_lhs = (&c1 * &c1c3).evaluate_top(o)?;
    let zero = ring.zero();
    let classes = [ring.one(), c1.clone(), c2.clone(), zero.clone(), c4.clone(), zero];
    let todd_rhs = todd_solve_c1sq_c3(&Rational::from(t.todd_genus), &classes, o)?;

    let mut failures = Vec::new();
    let mut mod27_residue = None;
    if d % 9 == 0 {
        let r = (1440 * t.todd_genus + t.c1c4_value).rem_euclid(27);
        mod27_residue = Some(r);
        if r != 0 {
            failures.push(FailReason::Mod27Obstruction);
        }
    }
    let c1c3_coeff = &c1c3.lattice_coordinates(4)[0];
    let divisible = c1c3_coeff.is_integer_multiple_of(&num_bigint::BigInt::from(d));
    if !c2.is_integral() || !c4.is_integral() || !divisible {
        failures.push(FailReason::IntegralityFailure);
    }
    if todd_rhs != pontryagin_lhs {
        failures.push(FailReason::ToddVsPontryaginMismatch);
    }
    if !c3.is_integral() && !failures.contains(&FailReason::IntegralityFailure) {
        failures.push(FailReason::IntegralityFailure);
    }

    Ok(CaseReport {
        d,
        c1,
        c2,
        c4,
        c1c3,
        c3,
        todd_rhs,
        pontryagin_lhs,
        mod27_residue,
        verdict: if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        failures,
        assumptions: Vec::new(),
    })
}

/// Runs every check for index `d`. Divisors pruned only by the index bounds
/// are still computed and reported as `index_bound_excluded`.
pub fn case_check(d: i64, t: &TopologicalInput) -> Result<CaseReport, RigidityError> {
    t.validate()?;
    if d == 0 || t.c1c4_value % d != 0 || (!t.spin && d % 2 == 0) {
        return Err(RigidityError::NotACandidate(d));
    }
    let mut report = compute(d, t)?;
    if let Some(why) = t.pruned_by(d) {
        report.failures.insert(0, FailReason::IndexBoundExcluded);
        report.verdict = Verdict::Fail;
        report.assumptions.push(why);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub candidates: CandidateSet,
    pub cases: Vec<CaseReport>,
    pub survivors: Vec<i64>,
}

pub fn scan(t: &TopologicalInput) -> Result<ScanReport, RigidityError> {
    let candidates = candidate_set(t);
    scan_candidates(t, &candidates.candidates).map(|(cases, survivors)| ScanReport {
        candidates,
        cases,
        survivors,
    })
}

/// Checks the given indices; output is ordered canonically regardless of
/// input order.
pub fn scan_candidates(t: &TopologicalInput, ds: &[i64]) -> Result<(Vec<CaseReport>, Vec<i64>), RigidityError> {
    let mut ds = ds.to_vec();
    canonical_order(&mut ds);
    ds.dedup();
    let cases = ds.iter().map(|&d| case_check(d, t)).collect::<Result<Vec<_>, _>>()?;
    let survivors = cases
        .iter()
        .filter(|c| c.verdict == Verdict::Pass)
        .map(|c| c.d)
        .collect();
    Ok((cases, survivors))
}

/// The space determined by a surviving case, with `c5` fixed by the Euler
/// characteristic.
pub fn reconstruct(case: &CaseReport, t: &TopologicalInput) -> Result<Space, RigidityError> {
    let e5 = t.ring.lattice_generator(5, 0);
    let unit = e5.evaluate_top(Orientation::Positive)?;
    let c5 = e5.scale(&Rational::from(t.euler_characteristic).checked_div(&unit).unwrap());
    let tangent = TotalClass::from_components(
        &t.ring,
        &[case.c1.clone(), case.c2.clone(), case.c3.clone(), case.c4.clone(), c5],
        5,
    )?;
    Ok(Space::new(
        "Z",
        tangent,
        Orientation::Positive,
        &format!("reconstructed from the rigidity case d = {}", case.d),
    ))
}

/// Intermediate values for some cases as printed in the published case
/// analysis. They are compared, never used as oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublishedFigures {
    pub lhs: &'static str,
    pub rhs: &'static str,
}

pub fn published_figures(d: i64) -> Option<PublishedFigures> {
    match d {
        1 | -1 => Some(PublishedFigures {
            lhs: "90",
            rhs: "1530\u{b1}4",
        }),
        -3 => Some(PublishedFigures {
            lhs: "-411",
            rhs: "2286",
        }),
        _ => None,
    }
}

/// One line per case where the exact values differ from the printed ones.
pub fn published_differences(cases: &[CaseReport]) -> Vec<String> {
    cases
        .iter()
        .filter_map(|c| {
            let p = published_figures(c.d)?;
            let (lhs, rhs) = (c.pontryagin_lhs.to_string(), c.todd_rhs.to_string());
            (lhs != p.lhs || rhs != p.rhs).then(|| {
                format!(
                    "d = {}: exact values {lhs} and {rhs}; published figures {} and {}",
                    c.d, p.lhs, p.rhs
                )
            })
        })
        .collect()
}

/// `(3d^2 - 1)/2`, the coefficient of `c2` on `L^2/3`.
pub fn c2_coefficient(d: i64) -> Rational {
    Rational::new(3 * d * d - 1, 2).unwrap()
}
