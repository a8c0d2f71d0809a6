//! Exact scalars: rationals, binomials, univariate polynomials and
//! truncated power series.

mod poly;
mod rational;
mod series;

pub use poly::UniPoly;
pub use rational::{frac, Rational};
pub use series::PowerSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
}

/// Binomial coefficient with the conventions `C(n, k) = 0` for `k > n`
/// and for `n < 0`. Requires `k >= 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    assert!(k >= 0, "binomial called with negative k");
    if n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
