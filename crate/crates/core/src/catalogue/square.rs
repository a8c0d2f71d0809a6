use crate::arith::Rational;
use crate::charclass::{flip, Space, TotalClass};
use crate::ring::{RingElement, RingHandle};

use super::{match_up_to_symmetry, q_fiber_over_s6, Catalogue, CatalogueError, MatchReport};

/// The catalogued space a corner of the square is identified with.
#[derive(Clone, Debug)]
pub struct CornerMatch {
    pub corner: &'static str,
    pub space: Space,
    pub matches: Vec<MatchReport>,
}

/// The four flips of `Q` along the fibres over `S6` and over the vertical
/// direction with class `1 + t`, in both orders.
#[derive(Clone, Debug)]
pub struct SquareReport {
    pub t: RingElement,
    pub a: Space,
    pub b: Space,
    pub c: Space,
    pub d: Space,
    pub corners: Vec<CornerMatch>,
}

impl SquareReport {
    pub fn commutes(&self) -> bool {
        self.c.tangent() == self.d.tangent() && self.c.orientation() == self.d.orientation()
    }

    /// True when every corner matches some catalogued space with agreeing
    /// orientation.
    pub fn all_corners_matched(&self) -> bool {
        self.corners
            .iter()
            .all(|c| c.matches.iter().any(|m| m.matched && m.orientation_agrees))
    }
}

fn identify(cat: &Catalogue, corner: &'static str, space: &Space) -> Result<CornerMatch, CatalogueError> {
    let mut matches = Vec::new();
    for target in cat.five_folds() {
        let m = match_up_to_symmetry(space, target)?;
        if m.matched && m.orientation_agrees {
            matches.push(MatchReport {
                source: corner.to_string(),
                ..m
            });
        }
    }
    Ok(CornerMatch {
        corner,
        space: space.clone(),
        matches,
    })
}

/// `A = flip(Q, F)`, `B = flip(Q, 1+t)`, `C = flip(A, 1+t)`, `D = flip(B, F)`
/// with `F = 1+3h+3h^2`. The two fibre directions are distinct summands, so
/// `F` is carried to `B` unchanged.
pub fn flip_square(cat: &Catalogue, t: &RingElement) -> Result<SquareReport, CatalogueError> {
    let q = cat.get("Q").expect("Q is catalogued");
    let f_s6 = q_fiber_over_s6(q)?;
    let f_m = TotalClass::new(&q.ring().one() + t, 1)?;
    if !t.is_homogeneous_of(1) {
        return Err(CatalogueError::Verification("vertical class must have degree 2".into()));
    }
    let a = flip(q, &f_s6)?.renamed("A", "Q flipped over S6");
    let b = flip(q, &f_m)?.renamed("B", "Q flipped over M");
    let c = flip(&a, &f_m)?.renamed("C", "A flipped over M");
    let d = flip(&b, &f_s6)?.renamed("D", "B flipped over S6");
    let mut report = SquareReport {
        t: t.clone(),
        a,
        b,
        c,
        d,
        corners: Vec::new(),
    };
    if !report.commutes() {
        return Err(CatalogueError::SquareNotCommuting {
            left: format!("{} ({})", report.c.tangent(), report.c.orientation()),
            right: format!("{} ({})", report.d.tangent(), report.d.orientation()),
        });
    }
    report.corners = vec![
        identify(cat, "Q", q)?,
        identify(cat, "A", &report.a)?,
        identify(cat, "B", &report.b)?,
        identify(cat, "C", &report.c)?,
    ];
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct MultiplierOutcome {
    pub mu: i64,
    pub result: Result<SquareReport, CatalogueError>,
}

impl MultiplierOutcome {
    pub fn accepted(&self) -> bool {
        matches!(&self.result, Ok(r) if r.all_corners_matched())
    }
}

/// Tries `t = mu * h` for each multiplier.
pub fn search_vertical_multiplier(cat: &Catalogue, multipliers: &[i64]) -> Vec<MultiplierOutcome> {
    let q = cat.get("Q").expect("Q is catalogued");
    let h = q.ring().generator("h").expect("Q has h");
    multipliers
        .iter()
        .map(|&mu| MultiplierOutcome {
            mu,
            result: flip_square(cat, &h.scale(&Rational::from(mu))),
        })
        .collect()
}
