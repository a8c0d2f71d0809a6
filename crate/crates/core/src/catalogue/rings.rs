use std::sync::Arc;

use crate::ring::{make_ring, Ring, RingError, RingPresentation};

/// `H*(Z)`: one class `L`, `L^6 = 0`, integral lattice spanned by
/// `1, L, L^2/3, L^3/6, L^4/18, L^5/18`, `<L^5> = 18`.
pub fn z_ring() -> Result<Arc<Ring>, RingError> {
    let p = RingPresentation::new("Z", 10)
        .with_generator("L", 2)
        .with_relation("L^6", &[])?
        .with_lattice(1, 3, "L^2")?
        .with_lattice(1, 6, "L^3")?
        .with_lattice(1, 18, "L^4")?
        .with_lattice(1, 18, "L^5")?
        .with_fundamental("L^5", 18)?;
    make_ring(p)
}

/// `H*(Q)` of the 5-quadric: `h^6 = 0`, lattice `1, h, h^2, h^3/2, h^4/2,
/// h^5/2`, `<h^5> = 2`.
pub fn q_ring() -> Result<Arc<Ring>, RingError> {
    let p = RingPresentation::new("Q", 10)
        .with_generator("h", 2)
        .with_relation("h^6", &[])?
        .with_lattice(1, 2, "h^3")?
        .with_lattice(1, 2, "h^4")?
        .with_lattice(1, 2, "h^5")?
        .with_fundamental("h^5", 2)?;
    make_ring(p)
}

pub fn cp6_ring() -> Result<Arc<Ring>, RingError> {
    let p = RingPresentation::new("CP6", 12)
        .with_generator("H", 2)
        .with_relation("H^7", &[])?
        .with_fundamental("H^6", 1)?;
    make_ring(p)
}

pub fn s6_ring() -> Result<Arc<Ring>, RingError> {
    let p = RingPresentation::new("S6", 6)
        .with_generator("alpha", 6)
        .with_relation("alpha^2", &[])?
        .with_fundamental("alpha", 1)?;
    make_ring(p)
}

/// A 6-dimensional base with `c_1 = 0`: classes `c2`, `c3` and `<c3> = 1`.
/// Chern numbers computed over it are the per-unit multiples of the Euler
/// characteristic.
pub fn formal_sixfold_ring() -> Result<Arc<Ring>, RingError> {
    let p = RingPresentation::new("B6", 6)
        .with_generator("c2", 4)
        .with_generator("c3", 6)
        .with_fundamental("c3", 1)?;
    make_ring(p)
}
