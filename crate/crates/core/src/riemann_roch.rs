//! Hilbert polynomials `P(r) = <ch(L^r) td(X), [X]>` computed symbolically
//! in `r`, and the Chern numbers they determine.

use thiserror::Error;

use crate::arith::{factorial, Rational, UniPoly};
use crate::charclass::{Space, TotalClass};
use crate::ring::{RingElement, RingError, RingHandle};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RrError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0} is not a primitive integral class of degree 2")]
    NotALatticeGenerator(String),
    #[error("c1 is not a multiple of the polarization")]
    NotAMultiple,
    #[error("polynomial has degree {0}, expected 5")]
    WrongDegree(usize),
}

#[derive(Clone, Debug)]
pub struct Polarization {
    space: Space,
    line: RingElement,
}

impl Polarization {
    pub fn new(space: &Space, line: RingElement) -> Result<Self, RrError> {
        let ok = line.is_homogeneous_of(1) && !line.is_zero() && line.ring().dimension(1) == 1 && {
            let c = &line.lattice_coordinates(1)[0];
            c.is_integer() && c.abs().is_one()
        };
        if !ok {
            return Err(RrError::NotALatticeGenerator(line.to_string()));
        }
        Ok(Polarization {
            space: space.clone(),
            line,
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn line(&self) -> &RingElement {
        &self.line
    }
}

/// Coefficient of `r^k` is `<L^k/k! * td_{n-k}>` with the space's orientation.
pub fn hilbert_polynomial(p: &Polarization) -> Result<UniPoly, RrError> {
    let space = p.space();
    let n = space.ring().top_index();
    let td = space.tangent().todd();
    let coeffs = (0..=n)
        .map(|k| {
            let w = Rational::integer(factorial(k as u32)).recip().unwrap();
            let term = (&p.line.pow(k as u32) * &td[n - k]).scale(&w);
            term.evaluate_top(space.orientation())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(coeffs))
}

/// `(1/120)(r+2)(3r+5)(2r+3)(3r+4)(r+1)`.
pub fn product_form() -> UniPoly {
    let f = |a: i64, b: i64| (Rational::from(a), Rational::from(b));
    UniPoly::from_linear_factors(
        Rational::new(1, 120).unwrap(),
        &[f(1, 2), f(3, 5), f(2, 3), f(3, 4), f(1, 1)],
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComparison {
    pub equal: bool,
    /// `(degree, computed, reference)` for each differing coefficient.
    pub diffs: Vec<(usize, Rational, Rational)>,
}

pub fn compare_with_product_form(p: &UniPoly) -> PolyComparison {
    compare_polys(p, &product_form())
}

pub fn compare_polys(p: &UniPoly, reference: &UniPoly) -> PolyComparison {
    let n = p.coeffs().len().max(reference.coeffs().len());
    let diffs: Vec<_> = (0..n)
        .filter(|&k| p.coeff(k) != reference.coeff(k))
        .map(|k| (k, p.coeff(k), reference.coeff(k)))
        .collect();
    PolyComparison {
        equal: diffs.is_empty(),
        diffs,
    }
}

/// Chern numbers of a five-fold with `c1 = d L` read off its Hilbert
/// polynomial: `c1^5 = 120 d^5 a_5`, `a_4 = c1^5 / (48 d^4)` and
/// `c1^3 c2 = 72 d^3 a_3 - c1^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedChernData {
    pub index: Rational,
    pub c1_pow5: Rational,
    pub c1_cube_c2: Rational,
    pub r4_consistent: bool,
}

pub fn fano_index(p: &Polarization) -> Result<Rational, RrError> {
    let c1 = p.space().tangent().c(1);
    let l = &p.line.part(1)[0];
    let d = c1.part(1)[0].checked_div(l).map_err(|_| RrError::NotAMultiple)?;
    if p.line.scale(&d) != c1 {
        return Err(RrError::NotAMultiple);
    }
    Ok(d)
}

pub fn extract_chern_data(poly: &UniPoly, p: &Polarization) -> Result<ExtractedChernData, RrError> {
    if poly.degree() != Some(5) {
        return Err(RrError::WrongDegree(poly.degree().unwrap_or(0)));
    }
    let d = fano_index(p)?;
    if d.is_zero() {
        return Err(RrError::NotAMultiple);
    }
    let c1_pow5 = &Rational::from(120) * &d.pow(5) * poly.coeff(5);
    let r4 = c1_pow5.checked_div(&(&Rational::from(48) * &d.pow(4))).unwrap();
    let c1_cube_c2 = &(&Rational::from(72) * &d.pow(3) * poly.coeff(3)) - &c1_pow5;
    Ok(ExtractedChernData {
        index: d,
        c1_pow5,
        c1_cube_c2,
        r4_consistent: r4 == poly.coeff(4),
    })
}

/// `(r, P(r), reference(r))` for `r = 0..=n`.
pub fn sample(p: &UniPoly, reference: &UniPoly, n: u32) -> Vec<(u32, Rational, Rational)> {
    (0..=n)
        .map(|r| {
            let x = Rational::from(r as i64);
            (r, p.eval(&x), reference.eval(&x))
        })
        .collect()
}

/// Euler characteristic of `L^r` computed directly from `ch(L^r) td` at a
/// fixed `r`, independent of the symbolic expansion.
pub fn euler_characteristic_at(p: &Polarization, r: i64) -> Result<Rational, RrError> {
    let space = p.space();
    let ring = space.ring();
    let line = TotalClass::new(&ring.one() + &p.line.scale(&Rational::from(r)), 1).expect("1 + rL is a total class");
    let ch = line.chern_character(ring.top_index());
    let ch_total = ch.iter().fold(ring.zero(), |acc, c| &acc + c);
    let td_total = space.tangent().todd().iter().fold(ring.zero(), |acc, c| &acc + c);
    Ok((&ch_total * &td_total).evaluate_top(space.orientation())?)
}
