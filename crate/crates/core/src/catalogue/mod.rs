//! The named spaces, each built from a presentation of its cohomology ring
//! and a construction of its tangent class, plus the consistency checks that
//! tie the constructions together.

pub mod expected;
mod hirzebruch;
mod rings;
mod square;
mod symmetry;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::arith::Rational;
use crate::charclass::{chern_numbers, flip, ChernNumberTable, ClassError, Space, TotalClass};
use crate::ring::{
    projectivize, Orientation, ProjectiveBundle, ProjectivizeOptions, Ring, RingElement, RingError, RingHandle,
    RingMorphism,
};

pub use hirzebruch::{universal_multiples, UniversalMultiples};
pub use rings::{cp6_ring, formal_sixfold_ring, q_ring, s6_ring, z_ring};
pub use square::{flip_square, search_vertical_multiplier, CornerMatch, MultiplierOutcome, SquareReport};
pub use symmetry::{match_up_to_symmetry, MatchReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogueError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("c1 of {0} is not divisible by 3 in the integral lattice")]
    NotDivisibleByThree(String),
    #[error("rings not comparable: {0}")]
    Incomparable(String),
    #[error("square does not commute: {left} vs {right}")]
    SquareNotCommuting { left: String, right: String },
}

/// All catalogued spaces and the maps used to build them.
#[derive(Debug)]
pub struct Catalogue {
    spaces: Vec<Space>,
    pub restriction: RingMorphism,
    pub tangent_projectivization: ProjectiveBundle,
    pub cotangent_projectivization: ProjectiveBundle,
}

/// Names of the complex five-folds, in display order.
pub const FIVE_FOLDS: [&str; 6] = ["Z", "N", "Q", "PTS6", "PTstarS6", "X"];

fn verify(cond: bool, what: &str) -> Result<(), CatalogueError> {
    if cond {
        Ok(())
    } else {
        Err(CatalogueError::Verification(what.to_string()))
    }
}

/// `sum_k coeffs[k] * g^k`.
pub fn power_series_in(g: &RingElement, coeffs: &[Rational]) -> RingElement {
    let ring = g.ring();
    coeffs
        .iter()
        .enumerate()
        .fold(ring.zero(), |acc, (k, c)| &acc + &g.pow(k as u32).scale(c))
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn total_in(g: &RingElement, coeffs: &[i64], rank: i64) -> Result<TotalClass, ClassError> {
    TotalClass::new(power_series_in(g, &ints(coeffs)), rank)
}

/// The rank-2 class `1 + 3h + 3h^2` of the fibres of `Q -> S6`.
pub fn q_fiber_over_s6(q: &Space) -> Result<TotalClass, CatalogueError> {
    let h = q.ring().generator("h")?;
    Ok(total_in(&h, &[1, 3, 3], 2)?)
}

/// `1 + c1/3` as a rank-1 class, when `c1/3` is integral.
pub fn kobayashi_fiber(z: &Space) -> Result<TotalClass, CatalogueError> {
    let third = z.tangent().c(1).scale(&Rational::new(1, 3).unwrap());
    if !third.is_integral() {
        return Err(CatalogueError::NotDivisibleByThree(z.name().to_string()));
    }
    Ok(TotalClass::new(&z.ring().one() + &third, 1)?)
}

/// The Z classes `c1 = 3L, c2 = 13 (L^2/3), c3 = 22 (L^3/6), c4 = 30 (L^4/18),
/// c5 = 6 (L^5/18)` written in lattice coordinates.
pub fn z_tangent(ring: &Arc<Ring>) -> Result<TotalClass, CatalogueError> {
    let coords = [3, 13, 22, 30, 6];
    let parts: Vec<RingElement> = coords
        .iter()
        .enumerate()
        .map(|(i, &n)| ring.lattice_generator(i + 1, 0).scale(&Rational::from(n)))
        .collect();
    Ok(TotalClass::from_components(ring, &parts, 5)?)
}

impl Catalogue {
    pub fn build() -> Result<Catalogue, CatalogueError> {
        let mut spaces = Vec::new();

        let cp6 = cp6_ring()?;
        let big_h = cp6.generator("H")?;
        let c_cp6 = total_in(&big_h, &[1, 7, 21, 35, 35, 21, 7], 6)?;
        verify(c_cp6.total() == &(&cp6.one() + &big_h).pow(7), "c(CP6) = (1+H)^7")?;
        spaces.push(Space::new(
            "CP6",
            c_cp6.clone(),
            Orientation::Positive,
            "total class (1+H)^7 from the Euler sequence",
        ));

        let qr = q_ring()?;
        let h = qr.generator("h")?;
        let restriction = RingMorphism::new(&cp6, &qr, vec![h.clone()])?;
        let restricted = TotalClass::new(restriction.apply(c_cp6.total())?, 6)?;
        let normal = total_in(&h, &[1, 2], 1)?;
        let c_q = restricted.series_quotient(&normal)?;
        verify(
            c_q.total() == &power_series_in(&h, &ints(&[1, 5, 11, 13, 9, 3])),
            "c(Q) = 1+5h+11h^2+13h^3+9h^4+3h^5",
        )?;
        let factored = total_in(&h, &[1, 3, 3], 2)?.whitney(&total_in(&h, &[1, 2, 2, 1], 3)?)?;
        verify(factored == c_q, "c(Q) = (1+3h+3h^2)(1+2h+2h^2+h^3)")?;
        let q = Space::new(
            "Q",
            c_q,
            Orientation::Positive,
            "quadric in CP6: restriction of (1+H)^7 divided by the normal class 1+2h",
        );

        let s6r = s6_ring()?;
        let alpha = s6r.generator("alpha")?;
        let c_s6 = TotalClass::new(&s6r.one() + &alpha.scale(&Rational::from(2)), 3)?;
        let s6 = Space::new(
            "S6",
            c_s6.clone(),
            Orientation::Positive,
            "c3 = 2 alpha from the Euler characteristic; c1 = c2 = 0 taken as input",
        );

        let (pts6_bundle, pts6) = projectivized(&s6, &c_s6, "PTS6")?;
        let (ptstar_bundle, ptstar) = projectivized(&s6, &c_s6.conjugate(), "PTstarS6")?;
        {
            let r = pts6.ring();
            let (x, y) = (r.generator("x")?, r.generator("y")?);
            verify(y.pow(3) == x.scale(&Rational::from(-2)), "y^3 = -2x in PTS6")?;
            let expected = &(&(&(&(&r.one() + &y.scale(&Rational::from(3))) + &y.pow(2).scale(&Rational::from(3)))
                + &x.scale(&Rational::from(2)))
                + &(&x * &y).scale(&Rational::from(6)))
                + &(&x * &y.pow(2)).scale(&Rational::from(6));
            verify(pts6.tangent().total() == &expected, "c(PTS6) = 1+3y+3y^2+2x+6xy+6xy^2")?;
        }

        let x_space =
            flip(&q, &q_fiber_over_s6(&q)?)?.renamed("X", "Q conjugated along the fibres of Q -> S6 (class 1+3h+3h^2)");
        verify(
            x_space.tangent().total() == &power_series_in(&h, &ints(&[1, -1, -1, 1, 3, 3])),
            "c(X) = 1-h-h^2+h^3+3h^4+3h^5",
        )?;
        verify(
            x_space.orientation() == Orientation::Positive,
            "X keeps the orientation of Q",
        )?;

        let zr = z_ring()?;
        let z = Space::new(
            "Z",
            z_tangent(&zr)?,
            Orientation::Positive,
            "Chern classes fixed by the rigidity derivation with Fano index 3",
        );
        let l = zr.generator("L")?;
        verify(z.tangent().c(1) == l.scale(&Rational::from(3)), "c1(Z) = 3L")?;
        let fiber = kobayashi_fiber(&z)?;
        verify(fiber.total() == &(&zr.one() + &l), "c(T_pi) = 1+L")?;
        let n = flip(&z, &fiber)?.renamed("N", "Z conjugated along the twistor fibres (class 1+L)");
        let c_n = power_series_in(
            &l,
            &[
                Rational::from(1),
                Rational::from(1),
                Rational::new(1, 3).unwrap(),
                Rational::from(-1),
                Rational::from(-1),
                Rational::new(-1, 3).unwrap(),
            ],
        );
        verify(n.tangent().total() == &c_n, "c(N) = 1+L+L^2/3-L^3-L^4-L^5/3")?;
        verify(
            n.orientation() == Orientation::Negative,
            "N has the orientation opposite to Z",
        )?;

        spaces.extend([s6, q, pts6, ptstar, x_space, z, n]);

        for s in &spaces {
            let top = s.ring().top_index();
            let euler = s.tangent().c(top).evaluate_top(s.orientation())?;
            let expected = match s.name() {
                "CP6" => 7,
                "S6" => 2,
                _ => 6,
            };
            verify(
                euler == expected,
                &format!("Euler characteristic of {} is {expected}", s.name()),
            )?;
            if let Some(col) = expected::column(s.name()) {
                let table = chern_numbers(s)?;
                verify(
                    table == ChernNumberTable::from_values(col),
                    &format!("Chern numbers of {}", s.name()),
                )?;
            }
        }

        Ok(Catalogue {
            spaces,
            restriction,
            tangent_projectivization: pts6_bundle,
            cotangent_projectivization: ptstar_bundle,
        })
    }

    pub fn spaces(&self) -> &[Space] {
        &self.spaces
    }

    /// Looks a space up by name; `PT*S6` is accepted for `PTstarS6`.
    pub fn get(&self, name: &str) -> Option<&Space> {
        let name = if name == "PT*S6" { "PTstarS6" } else { name };
        self.spaces.iter().find(|s| s.name() == name)
    }

    pub fn five_folds(&self) -> Vec<&Space> {
        FIVE_FOLDS.iter().filter_map(|n| self.get(n)).collect()
    }
}

/// `P(E)` over `S6` for `E` with total class `bundle`, carrying the tangent
/// class `c(p*E (x) O(1)) / 1 * p*c(TS6)` (relative Euler sequence).
fn projectivized(s6: &Space, bundle: &TotalClass, name: &str) -> Result<(ProjectiveBundle, Space), CatalogueError> {
    let opts = ProjectivizeOptions::new(name, "y").rename("alpha", "x");
    let pb = projectivize(s6.ring(), bundle.rank() as usize, bundle.total(), &opts)?;
    let pulled_e = TotalClass::new(pb.pullback(bundle.total())?, bundle.rank())?;
    let pulled_t = TotalClass::new(pb.pullback(s6.tangent().total())?, s6.tangent().rank())?;
    let vertical = pulled_e
        .twist_line(&pb.hyperplane)?
        .series_quotient(&TotalClass::trivial(&pb.ring, 1))?;
    let tangent = vertical.whitney(&pulled_t)?;
    let what = if bundle == s6.tangent() { "tangent" } else { "cotangent" };
    let space = Space::new(
        name,
        tangent,
        Orientation::Positive,
        &format!("projectivized {what} bundle of S6: Grothendieck relation plus relative Euler sequence"),
    );
    Ok((pb, space))
}

/// Builds the catalogue once per process.
pub fn standard() -> Result<&'static Catalogue, CatalogueError> {
    static CATALOGUE: OnceLock<Result<Catalogue, CatalogueError>> = OnceLock::new();
    CATALOGUE.get_or_init(Catalogue::build).as_ref().map_err(Clone::clone)
}

pub fn build_standard_spaces() -> Result<Vec<Space>, CatalogueError> {
    Ok(Catalogue::build()?.spaces)
}
