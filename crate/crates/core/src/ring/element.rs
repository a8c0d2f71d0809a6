use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::Rational;

use super::graded::{Ring, RingHandle};
use super::{Orientation, RingError};

/// An element of a graded ring, stored as one coefficient vector per even
/// degree over that degree's normal-form basis. Anything above the top degree
/// is truncated away by construction.
#[derive(Clone)]
pub struct RingElement {
    ring: Arc<Ring>,
    parts: Vec<Vec<Rational>>,
}

impl RingElement {
    pub(crate) fn from_parts(ring: Arc<Ring>, parts: Vec<Vec<Rational>>) -> Self {
        RingElement { ring, parts }
    }

    pub(crate) fn parts_mut(&mut self) -> &mut Vec<Vec<Rational>> {
        &mut self.parts
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Coefficients of the degree-`2k` component.
    pub fn part(&self, k: usize) -> &[Rational] {
        &self.parts[k]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().flatten().all(Rational::is_zero)
    }

    /// Degree-`2k` component as an element.
    pub fn homogeneous(&self, k: usize) -> RingElement {
        let mut z = self.ring.zero();
        if k < self.parts.len() {
            z.parts[k] = self.parts[k].clone();
        }
        z
    }

    /// Indices `k` with a nonzero degree-`2k` component.
    pub fn support(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&k| self.parts[k].iter().any(|c| !c.is_zero()))
            .collect()
    }

    /// True when all nonzero components sit in degree `2k` (zero qualifies).
    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.support().iter().all(|&d| d == k)
    }

    /// The scalar in degree zero.
    pub fn constant_term(&self) -> &Rational {
        &self.parts[0][0]
    }

    fn check_same(&self, other: &RingElement) -> Result<(), RingError> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch {
                left: self.ring.name().to_string(),
                right: other.ring.name().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(RingElement::from_parts(self.ring.clone(), parts))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.try_add(&-other)
    }

    /// Normal-form product, truncated above the top degree.
    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        let ring = &self.ring;
        let n = ring.top_index();
        let mut out = ring.zero();
        for i in 0..=n {
            for (p, a) in self.parts[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..=(n - i) {
                    for (q, b) in other.parts[j].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let m = ring.basis(i)[p].mul(&ring.basis(j)[q]);
                        let nf = ring.normal_form(&m).expect("product within top degree");
                        let ab = a * b;
                        for (o, x) in out.parts[i + j].iter_mut().zip(nf) {
                            *o += &ab * x;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> RingElement {
        let parts = self.parts.iter().map(|v| v.iter().map(|x| x * s).collect()).collect();
        RingElement::from_parts(self.ring.clone(), parts)
    }

    pub fn pow(&self, e: u32) -> RingElement {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Pairing of the top-degree component with the fundamental class,
    /// multiplied by the orientation sign.
    pub fn evaluate_top(&self, orientation: Orientation) -> Result<Rational, RingError> {
        let values = self
            .ring
            .fundamental_values()
            .ok_or_else(|| RingError::NoFundamentalClass(self.ring.name().to_string()))?;
        let n = self.ring.top_index();
        let total: Rational = self.parts[n].iter().zip(values).map(|(c, v)| c * v).sum();
        Ok(total * Rational::from(orientation.sign()))
    }

    /// Coordinates of the degree-`2k` component in the integral lattice basis.
    pub fn lattice_coordinates(&self, k: usize) -> Vec<Rational> {
        self.ring.lattice(k).coordinates(&self.parts[k])
    }

    /// True iff every component is an integer combination of the lattice
    /// generators of its degree.
    pub fn is_integral(&self) -> bool {
        (0..self.parts.len()).all(|k| self.lattice_coordinates(k).iter().all(Rational::is_integer))
    }

    /// Solves `self = factor * q` where `self` is homogeneous of degree `2k`
    /// and `factor` is a nonzero degree-2 class, in a ring whose degrees are
    /// at most one-dimensional. Used to recover `c3` from `c1*c3`.
    pub fn divide_by_line_class(&self, factor: &RingElement, k: usize) -> Result<RingElement, RingError> {
        self.check_same(factor)?;
        let ring = &self.ring;
        if k == 0 || k > ring.top_index() || !self.is_homogeneous_of(k) {
            return Err(RingError::NotDivisible);
        }
        if !factor.is_homogeneous_of(1) || factor.is_zero() {
            return Err(RingError::NotDivisible);
        }
        if (0..=ring.top_index()).any(|d| ring.dimension(d) > 1) || ring.dimension(k - 1) == 0 {
            return Err(RingError::NotDivisible);
        }
        let unit = ring.basis_element(k - 1, 0);
        let image = factor.try_mul(&unit)?;
        let denom = image.parts[k].first().cloned().unwrap_or_default();
        let numer = self.parts[k].first().cloned().unwrap_or_default();
        let coeff = numer.checked_div(&denom).map_err(|_| RingError::NotDivisible)?;
        Ok(unit.scale(&coeff))
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.parts == other.parts
    }
}

impl Eq for RingElement {}

macro_rules! panicking_op {
    ($imp:ident, $method:ident, $checked:ident) => {
        impl $imp for &RingElement {
            type Output = RingElement;
            /// Panics when the operands live in different rings; use the
            /// `try_` form to get an error instead.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $imp for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&-Rational::one())
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl fmt::Display for RingElement {
    /// Degree-ascending sum in the definition-language syntax, e.g.
    /// `1 + 3*L + 13/3*L^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.ring.generators();
        let mut first = true;
        for (k, part) in self.parts.iter().enumerate() {
            for (c, m) in part.iter().zip(self.ring.basis(k)) {
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                if first {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                }
                first = false;
                if m.is_one() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{}", m.render(gens))?;
                } else {
                    write!(f, "{mag}*{}", m.render(gens))?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring.name(), self)
    }
}
