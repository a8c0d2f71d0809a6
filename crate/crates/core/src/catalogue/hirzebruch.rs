use crate::charclass::{chern_numbers, ChernNumberTable, Space, TotalClass};
use crate::ring::{projectivize, Orientation, ProjectivizeOptions, RingHandle};

use super::{formal_sixfold_ring, CatalogueError};

/// Chern numbers of `P(TB)` and `P(T*B)` over a formal 6-manifold `B` with
/// `c1 = 0` and `<c3(B)> = 1`. Every such number is a universal multiple of
/// the Euler characteristic of `B`.
#[derive(Clone, Debug)]
pub struct UniversalMultiples {
    pub tangent: ChernNumberTable,
    pub cotangent: ChernNumberTable,
}

pub fn universal_multiples() -> Result<UniversalMultiples, CatalogueError> {
    let base = formal_sixfold_ring()?;
    let c2 = base.generator("c2")?;
    let c3 = base.generator("c3")?;
    let tb = TotalClass::new(&(&base.one() + &c2) + &c3, 3)?;
    let one_side = |bundle: &TotalClass, name: &str| -> Result<ChernNumberTable, CatalogueError> {
        let pb = projectivize(&base, 3, bundle.total(), &ProjectivizeOptions::new(name, "y"))?;
        let e = TotalClass::new(pb.pullback(bundle.total())?, 3)?;
        let t = TotalClass::new(pb.pullback(tb.total())?, 3)?;
        let vertical = e
            .twist_line(&pb.hyperplane)?
            .series_quotient(&TotalClass::trivial(&pb.ring, 1))?;
        let space = Space::new(name, vertical.whitney(&t)?, Orientation::Positive, "formal");
        Ok(chern_numbers(&space)?)
    };
    Ok(UniversalMultiples {
        tangent: one_side(&tb, "P(TB)")?,
        cotangent: one_side(&tb.conjugate(), "P(T*B)")?,
    })
}
