use std::sync::Arc;

use crate::ring::{make_ring, Ring, RingElement, RingHandle, RingPresentation};

use super::TotalClass;

/// Polynomial ring on `c1..c5` (degrees 2..10) truncated above degree 10,
/// with no fundamental class. Identities proved here hold for every class.
#[derive(Clone, Debug)]
pub struct UniversalChern {
    pub ring: Arc<Ring>,
    pub class: TotalClass,
}

pub fn universal_chern_ring(n: u32) -> UniversalChern {
    let mut p = RingPresentation::new(format!("H*(BU({n}))"), 2 * n).without_fundamental();
    for k in 1..=n {
        p = p.with_generator(&format!("c{k}"), 2 * k);
    }
    let ring = make_ring(p).expect("free truncated ring is valid");
    let mut total = ring.one();
    for k in 1..=n {
        total = &total + &ring.generator(&format!("c{k}")).unwrap();
    }
    let class = TotalClass::new(total, n as i64).unwrap();
    UniversalChern { ring, class }
}

impl UniversalChern {
    pub fn c(&self, k: usize) -> RingElement {
        self.class.c(k)
    }
}

/// The degree-`k` Todd polynomial in `c1..cn`, as an element of the
/// universal ring.
pub fn todd_polynomial(n: u32, k: usize) -> RingElement {
    let u = universal_chern_ring(n);
    u.class.todd()[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    #[test]
    fn degree_five_todd() {
        let u = universal_chern_ring(5);
        let c = |k| u.c(k);
        let expected = &(&(&(&c(1).pow(2) * &c(3)) - &(&c(1).pow(3) * &c(2)))
            + &(&c(1) * &c(2).pow(2)).scale(&frac(3, 1)))
            - &(&c(1) * &c(4));
        assert_eq!(todd_polynomial(5, 5), expected.scale(&frac(1, 1440)));
    }

    #[test]
    fn low_todd_terms() {
        let u = universal_chern_ring(5);
        let td = u.class.todd();
        assert_eq!(td[1], u.c(1).scale(&frac(1, 2)));
        assert_eq!(td[2], (&u.c(1).pow(2) + &u.c(2)).scale(&frac(1, 12)));
        assert_eq!(td[3], (&u.c(1) * &u.c(2)).scale(&frac(1, 24)));
    }
}
