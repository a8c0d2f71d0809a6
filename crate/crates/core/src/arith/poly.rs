use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// Univariate polynomial in `r` with rational coefficients; index `k` holds
/// the coefficient of `r^k`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `a*r + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::new(vec![b, a])
    }

    /// `scale * prod (a_i r + b_i)`
    pub fn from_linear_factors(scale: Rational, factors: &[(Rational, Rational)]) -> Self {
        factors.iter().fold(UniPoly::constant(scale), |acc, (a, b)| {
            &acc * &UniPoly::linear(a.clone(), b.clone())
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `r^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * r + c)
    }

    pub fn scale(&self, s: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    /// Highest power first, e.g. `3/20*r^5 + 9/8*r^4 + ... + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
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
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "r")?,
                (1, false) => write!(f, "{mag}*r")?,
                (_, true) => write!(f, "r^{k}")?,
                (_, false) => write!(f, "{mag}*r^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn product_form_expansion() {
        let p = UniPoly::from_linear_factors(
            frac(1, 120),
            &[(r(1), r(2)), (r(3), r(5)), (r(2), r(3)), (r(3), r(4)), (r(1), r(1))],
        );
        let expected = [r(1), frac(211, 60), frac(39, 8), frac(10, 3), frac(9, 8), frac(3, 20)];
        assert_eq!(p.coeffs(), &expected);
        assert_eq!(p.eval(&r(0)), r(1));
        assert_eq!(p.eval(&r(1)), r(14));
    }

    #[test]
    fn zero_annihilates() {
        let p = UniPoly::new(vec![r(1), r(2)]);
        assert!((&p * &UniPoly::zero()).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::new(vec![r(0), r(0)]).coeffs().len(), 0);
    }

    #[test]
    fn display() {
        let p = UniPoly::new(vec![r(1), r(-1), frac(3, 2)]);
        assert_eq!(p.to_string(), "3/2*r^2 - r + 1");
    }
}
