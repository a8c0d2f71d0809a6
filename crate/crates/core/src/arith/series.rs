use super::{factorial, Rational};

/// Power series in one variable truncated after `x^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Keeps coefficients of `x^0 ..= x^precision`.
    pub fn new(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `sum_n c_n x^n` with `c_n = 1/n!` evaluated at `sign*x`.
    pub fn exp_of_multiple(sign: i64, precision: usize) -> Self {
        let coeffs = (0..=precision)
            .map(|n| {
                let fact = Rational::integer(factorial(n as u32));
                Rational::from(sign).pow(n as u32).checked_div(&fact).unwrap()
            })
            .collect();
        PowerSeries::new(coeffs, precision)
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|i| &self.coeffs[i] * &rhs.coeffs[k - i]).sum())
            .collect();
        PowerSeries::new(coeffs, n)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Option<PowerSeries> {
        let c0_inv = self.coeffs[0].recip().ok()?;
        let n = self.precision();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -(s * &c0_inv);
        }
        Some(PowerSeries::new(out, n))
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Option<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return None;
        }
        let n = self.precision();
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        let mut power = u.clone();
        let mut out = PowerSeries::new(vec![], n);
        for j in 1..=n {
            let weight = Rational::sign_power(j - 1).div_int(j as i64);
            for k in 0..=n {
                out.coeffs[k] += &power.coeffs[k] * &weight;
            }
            power = power.mul(&u);
        }
        Some(out)
    }

    /// `(1 - e^{-x}) / x`, whose reciprocal generates the Todd class.
    pub fn one_minus_exp_neg_over_x(precision: usize) -> PowerSeries {
        let e = PowerSeries::exp_of_multiple(-1, precision + 1);
        let coeffs = (0..=precision).map(|n| -e.coeffs[n + 1].clone()).collect();
        PowerSeries::new(coeffs, precision)
    }
}
