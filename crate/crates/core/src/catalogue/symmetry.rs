use std::fmt;
use std::sync::Arc;

use crate::arith::Rational;
use crate::charclass::Space;
use crate::ring::{Ring, RingElement, RingHandle};

use super::CatalogueError;

/// Outcome of comparing two structures up to `g -> eps*g` and global
/// conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub source: String,
    pub target: String,
    pub generator_sign: i64,
    pub globally_conjugated: bool,
    pub orientation_agrees: bool,
    pub matched: bool,
}

impl fmt::Display for MatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matched {
            write!(
                f,
                "{} ~ {} (eps = {:+}, conjugated: {}, orientation agrees: {})",
                self.source,
                self.target,
                self.generator_sign,
                if self.globally_conjugated { "yes" } else { "no" },
                if self.orientation_agrees { "yes" } else { "no" }
            )
        } else {
            write!(f, "{} !~ {}", self.source, self.target)
        }
    }
}

/// Rings generated rationally by one degree-2 class `g`: returns `sigma_k`
/// with `g^k = sigma_k * basis(k)[0]` for every `k`.
fn line_powers(ring: &Arc<Ring>) -> Result<(RingElement, Vec<Rational>), CatalogueError> {
    let deg2: Vec<_> = ring.generators().iter().filter(|g| g.degree == 2).collect();
    if deg2.len() != 1 {
        return Err(CatalogueError::Incomparable(format!(
            "{} needs exactly one degree-2 generator",
            ring.name()
        )));
    }
    let g = ring.generator(&deg2[0].symbol)?;
    let mut sigma = Vec::new();
    for k in 0..=ring.top_index() {
        if ring.dimension(k) != 1 {
            return Err(CatalogueError::Incomparable(format!(
                "{} has dimension {} in degree {}",
                ring.name(),
                ring.dimension(k),
                2 * k
            )));
        }
        let s = g.pow(k as u32).part(k)[0].clone();
        if s.is_zero() {
            return Err(CatalogueError::Incomparable(format!(
                "{} is not generated by {} in degree {}",
                ring.name(),
                deg2[0].symbol,
                2 * k
            )));
        }
        sigma.push(s);
    }
    Ok((g, sigma))
}

/// Transports the tangent class of `a` into the ring of `b` along
/// `g_a -> eps * g_b`, optionally conjugating first, and compares.
pub fn match_up_to_symmetry(a: &Space, b: &Space) -> Result<MatchReport, CatalogueError> {
    let (ra, rb) = (a.ring(), b.ring());
    if ra.top_index() != rb.top_index() {
        return Err(CatalogueError::Incomparable(format!(
            "{} and {} have different dimensions",
            ra.name(),
            rb.name()
        )));
    }
    let n = ra.top_index();
    let (ga, sigma) = line_powers(ra)?;
    let (gb, tau) = line_powers(rb)?;
    let ta = a.tangent().total();

    let fund_a = ga.pow(n as u32).evaluate_top(a.orientation())?;
    let fund_b = gb.pow(n as u32).evaluate_top(b.orientation())?;

    let mut best: Option<MatchReport> = None;
    for conj in [false, true] {
        for eps in [1i64, -1] {
            let mut image = rb.zero();
            for k in 0..=n {
                let mut c = &ta.part(k)[0] * &Rational::from(eps).pow(k as u32);
                if conj {
                    c *= Rational::sign_power(k);
                }
                let c = (c * &tau[k]).checked_div(&sigma[k]).expect("sigma is nonzero");
                image = &image + &rb.basis_element(k, 0).scale(&c);
            }
            let matched = &image == b.tangent().total();
            let mut lhs = fund_a.clone();
            if conj {
                lhs *= Rational::sign_power(n);
            }
            let rhs = &fund_b * &Rational::from(eps).pow(n as u32);
            let report = MatchReport {
                source: a.name().to_string(),
                target: b.name().to_string(),
                generator_sign: eps,
                globally_conjugated: conj,
                orientation_agrees: lhs == rhs,
                matched,
            };
            let score = |r: &MatchReport| (r.matched as u8) * 2 + (r.matched && r.orientation_agrees) as u8;
            if best.as_ref().is_none_or(|b| score(&report) > score(b)) {
                best = Some(report);
            }
        }
    }
    Ok(best.expect("four cases tried"))
}
