use crate::arith::Rational;
use crate::ring::{FreePoly, Generator, Monomial, RingElement, RingHandle};

use super::ast::Expr;

/// Evaluates over the free polynomial ring on `gens`; symbols must be
/// generators. Errors carry a message only; callers attach positions.
pub fn eval_free(e: &Expr, gens: &[Generator]) -> Result<FreePoly, String> {
    let n = gens.len();
    Ok(match e {
        Expr::Int(v) => FreePoly::constant(n, Rational::from(v.clone())),
        Expr::Sym(s, _) => {
            let i = gens
                .iter()
                .position(|g| g.symbol == *s)
                .ok_or_else(|| format!("unknown symbol {s}"))?;
            FreePoly::monomial(Monomial::generator(n, i))
        }
        Expr::Neg(a) => eval_free(a, gens)?.scale(&-Rational::one()),
        Expr::Add(a, b) => eval_free(a, gens)?.add(&eval_free(b, gens)?),
        Expr::Sub(a, b) => eval_free(a, gens)?.add(&eval_free(b, gens)?.scale(&-Rational::one())),
        Expr::Mul(a, b) => eval_free(a, gens)?.mul(&eval_free(b, gens)?),
        Expr::Div(a, b) => {
            let d = eval_free(b, gens)?
                .as_constant()
                .filter(|c| !c.is_zero())
                .ok_or("division by a non-scalar or zero")?;
            eval_free(a, gens)?.scale(&d.recip().unwrap())
        }
        Expr::Pow(a, k) => eval_free(a, gens)?.pow(*k, n),
    })
}

/// Exponent vector when `e` is a product of generator powers.
pub fn as_monomial(e: &Expr, gens: &[Generator]) -> Option<Monomial> {
    let p = eval_free(e, gens).ok()?;
    let mut terms = p.terms();
    let (m, c) = terms.next()?;
    (terms.next().is_none() && c.is_one()).then(|| m.clone())
}

/// Evaluates in a ring, resolving symbols with `resolve`.
pub fn eval_in<R: RingHandle>(
    e: &Expr,
    ring: &R,
    resolve: &dyn Fn(&str) -> Option<RingElement>,
) -> Result<RingElement, String> {
    Ok(match e {
        Expr::Int(v) => ring.scalar(Rational::from(v.clone())),
        Expr::Sym(s, _) => resolve(s).ok_or_else(|| format!("unknown symbol {s}"))?,
        Expr::Neg(a) => -eval_in(a, ring, resolve)?,
        Expr::Add(a, b) => eval_in(a, ring, resolve)?
            .try_add(&eval_in(b, ring, resolve)?)
            .map_err(|e| e.to_string())?,
        Expr::Sub(a, b) => eval_in(a, ring, resolve)?
            .try_sub(&eval_in(b, ring, resolve)?)
            .map_err(|e| e.to_string())?,
        Expr::Mul(a, b) => eval_in(a, ring, resolve)?
            .try_mul(&eval_in(b, ring, resolve)?)
            .map_err(|e| e.to_string())?,
        Expr::Div(a, b) => {
            let d = eval_in(b, ring, resolve)?;
            if !d.is_homogeneous_of(0) || d.is_zero() {
                return Err("division by a non-scalar or zero".into());
            }
            eval_in(a, ring, resolve)?.scale(&d.constant_term().recip().unwrap())
        }
        Expr::Pow(a, k) => eval_in(a, ring, resolve)?.pow(*k),
    })
}
