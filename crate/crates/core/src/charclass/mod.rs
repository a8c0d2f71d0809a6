//! Total characteristic classes over a graded ring: Whitney products and
//! quotients, conjugation, line twists, Pontryagin classes, Chern character
//! and Todd class.

mod numbers;
mod space;
mod universal;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{binomial, factorial, PowerSeries, Rational};
use crate::ring::{Ring, RingElement, RingError, RingHandle};

pub use numbers::{chern_numbers, ChernMonomial, ChernNumberTable};
pub use space::{flip, Space};
pub use universal::{todd_polynomial, universal_chern_ring, UniversalChern};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("total class must start with 1")]
    LeadingTerm,
    #[error("component {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("twisting class must be homogeneous of degree 2")]
    InhomogeneousTwist,
    #[error("rank {0} is negative")]
    NegativeRank(i64),
    #[error("fiber is not a summand")]
    NotASummand,
    #[error("Chern numbers need complex dimension 5, ring {ring} has {dim}")]
    WrongDimension { ring: String, dim: usize },
}

/// A total class `1 + c_1 + c_2 + ...` with a (possibly virtual) rank.
/// Genuine bundles have `c_k = 0` above their rank; quotients may not.
#[derive(Clone, PartialEq, Eq)]
pub struct TotalClass {
    total: RingElement,
    rank: i64,
}

impl TotalClass {
    pub fn new(total: RingElement, rank: i64) -> Result<Self, ClassError> {
        if !total.constant_term().is_one() {
            return Err(ClassError::LeadingTerm);
        }
        Ok(TotalClass { total, rank })
    }

    /// Builds `1 + parts[0] + parts[1] + ...` checking each part sits in its
    /// own degree.
    pub fn from_components(ring: &Arc<Ring>, parts: &[RingElement], rank: i64) -> Result<Self, ClassError> {
        let mut total = ring.one();
        for (i, p) in parts.iter().enumerate() {
            if !p.is_homogeneous_of(i + 1) {
                return Err(ClassError::Inhomogeneous(i + 1));
            }
            total = total.try_add(p)?;
        }
        TotalClass::new(total, rank)
    }

    pub fn trivial(ring: &Arc<Ring>, rank: i64) -> Self {
        TotalClass {
            total: ring.one(),
            rank,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.total.ring()
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total(&self) -> &RingElement {
        &self.total
    }

    /// `c_k`, zero beyond the top degree.
    pub fn c(&self, k: usize) -> RingElement {
        self.total.homogeneous(k)
    }

    fn top(&self) -> usize {
        self.ring().top_index()
    }

    /// Nonnegative rank and no classes above it.
    pub fn is_genuine(&self) -> bool {
        self.rank >= 0 && self.total.support().iter().all(|&k| k as i64 <= self.rank)
    }

    pub fn whitney(&self, other: &TotalClass) -> Result<TotalClass, ClassError> {
        Ok(TotalClass {
            total: self.total.try_mul(&other.total)?,
            rank: self.rank + other.rank,
        })
    }

    /// The unique `q` with `q * divisor = self`, via `q_k = a_k - sum b_i q_{k-i}`.
    pub fn series_quotient(&self, divisor: &TotalClass) -> Result<TotalClass, ClassError> {
        if !Ring::same(self.ring(), divisor.ring()) {
            return Err(RingError::RingMismatch {
                left: self.ring().name().to_string(),
                right: divisor.ring().name().to_string(),
            }
            .into());
        }
        let n = self.top();
        let mut q: Vec<RingElement> = vec![self.ring().one()];
        for k in 1..=n {
            let mut qk = self.c(k);
            for i in 1..=k {
                qk = &qk - &(&divisor.c(i) * &q[k - i]);
            }
            q.push(qk);
        }
        let total = q.iter().fold(self.ring().zero(), |acc, p| &acc + p);
        Ok(TotalClass {
            total,
            rank: self.rank - divisor.rank,
        })
    }

    /// `c_k -> (-1)^k c_k`.
    pub fn conjugate(&self) -> TotalClass {
        let total = (0..=self.top()).fold(self.ring().zero(), |acc, k| {
            &acc + &self.c(k).scale(&Rational::sign_power(k))
        });
        TotalClass { total, rank: self.rank }
    }

    /// Total class of `E (x) T` for a line bundle `T` with `c_1(T) = t`:
    /// `c'_k = sum_i C(r-i, k-i) c_i t^{k-i}`.
    pub fn twist_line(&self, t: &RingElement) -> Result<TotalClass, ClassError> {
        if !Ring::same(self.ring(), t.ring()) {
            return Err(RingError::RingMismatch {
                left: self.ring().name().to_string(),
                right: t.ring().name().to_string(),
            }
            .into());
        }
        if !t.is_homogeneous_of(1) {
            return Err(ClassError::InhomogeneousTwist);
        }
        if self.rank < 0 {
            return Err(ClassError::NegativeRank(self.rank));
        }
        let r = self.rank;
        let n = self.top();
        let mut total = self.ring().zero();
        for k in 0..=n {
            for i in 0..=k {
                let b = binomial(r - i as i64, (k - i) as i64);
                if b == 0.into() {
                    continue;
                }
                let term = (&self.c(i) * &t.pow((k - i) as u32)).scale(&Rational::from(b));
                total = &total + &term;
            }
        }
        TotalClass::new(total, r)
    }

    /// `(p_1, p_2) = (c_1^2 - 2c_2, c_2^2 - 2c_1c_3 + 2c_4)`.
    pub fn pontryagin(&self) -> (RingElement, RingElement) {
        let c = |k| self.c(k);
        let two = Rational::from(2);
        let p1 = &(&c(1) * &c(1)) - &c(2).scale(&two);
        let p2 = &(&(&c(2) * &c(2)) - &(&c(1) * &c(3)).scale(&two)) + &c(4).scale(&two);
        (p1, p2)
    }

    /// Power sums `s_1..s_n` of the Chern roots by Newton's identities;
    /// index 0 holds the rank.
    pub fn power_sums(&self) -> Vec<RingElement> {
        let n = self.top();
        let mut s = vec![self.ring().scalar(Rational::from(self.rank))];
        for k in 1..=n {
            let mut sk = self
                .c(k)
                .scale(&Rational::from(k as i64 * if k % 2 == 1 { 1 } else { -1 }));
            for i in 1..k {
                let term = (&self.c(i) * &s[k - i]).scale(&Rational::sign_power(i - 1));
                sk = &sk + &term;
            }
            s.push(sk);
        }
        s
    }

    /// Inverse of [`TotalClass::power_sums`]:
    /// `c_k = (1/k) sum_{i=1}^k (-1)^{i-1} c_{k-i} s_i`.
    pub fn from_power_sums(sums: &[RingElement], rank: i64) -> Result<TotalClass, ClassError> {
        let ring = sums[0].ring().clone();
        let mut c = vec![ring.one()];
        for k in 1..sums.len() {
            let mut ck = ring.zero();
            for i in 1..=k {
                ck = &ck + &(&c[k - i] * &sums[i]).scale(&Rational::sign_power(i - 1));
            }
            c.push(ck.scale(&Rational::from(1).div_int(k as i64)));
        }
        let total = c.iter().fold(ring.zero(), |acc, p| &acc + p);
        TotalClass::new(total, rank)
    }

    /// `ch_0..ch_through`, with `ch_k = s_k / k!` and `ch_0 = rank`.
    pub fn chern_character(&self, through: usize) -> Vec<RingElement> {
        let s = self.power_sums();
        (0..=through)
            .map(|k| match s.get(k) {
                Some(sk) if k == 0 => sk.clone(),
                Some(sk) => sk.scale(&Rational::integer(factorial(k as u32)).recip().unwrap()),
                None => self.ring().zero(),
            })
            .collect()
    }

    /// `td_0..td_n` from `exp(sum_k a_k s_k)` where
    /// `log(x/(1-e^{-x})) = sum_k a_k x^k`.
    pub fn todd(&self) -> Vec<RingElement> {
        let n = self.top();
        let ring = self.ring();
        let a = PowerSeries::one_minus_exp_neg_over_x(n)
            .inverse()
            .and_then(|f| f.log())
            .expect("Todd series has constant term 1");
        let s = self.power_sums();
        let mut z = ring.zero();
        for k in 1..=n {
            z = &z + &s[k].scale(a.coeff(k));
        }
        let mut total = ring.one();
        let mut power = ring.one();
        for j in 1..=n {
            power = &power * &z;
            let w = Rational::integer(factorial(j as u32)).recip().unwrap();
            total = &total + &power.scale(&w);
        }
        (0..=n).map(|k| total.homogeneous(k)).collect()
    }
}

impl fmt::Display for TotalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.total)
    }
}

impl fmt::Debug for TotalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (rank {})", self.total, self.rank)
    }
}
