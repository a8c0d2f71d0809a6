use num_bigint::BigInt;

use crate::arith::Rational;
use crate::ring::Orientation;

use super::Pos;

#[derive(Clone, Debug)]
pub enum Expr {
    Int(BigInt),
    Sym(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Structural equality; source positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use Expr::*;
        match (self, other) {
            (Int(a), Int(b)) => a == b,
            (Sym(a, _), Sym(b, _)) => a == b,
            (Neg(a), Neg(b)) => a == b,
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) | (Div(a, b), Div(c, d)) => {
                a == c && b == d
            }
            (Pow(a, m), Pow(b, n)) => a == b && m == n,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl Expr {
    /// Every symbol with its position, left to right.
    pub fn symbols(&self) -> Vec<(&str, Pos)> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut Vec<(&'a str, Pos)>) {
        match self {
            Expr::Int(_) => {}
            Expr::Sym(s, p) => out.push((s, *p)),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceItem {
    Generator { symbol: String, degree: u32 },
    Relation { lhs: Expr, rhs: Expr },
    Lattice { degree: u32, generator: Expr },
    Fundamental { monomial: Expr, value: Rational },
    Orientation(Orientation),
    Chern(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: String,
    pub items: Vec<SpaceItem>,
    pub pos: PosIgnored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleDecl {
    pub name: String,
    pub space: String,
    pub rank: u32,
    pub chern: Expr,
    pub pos: PosIgnored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckDecl {
    pub space: String,
    pub expr: Expr,
    pub value: Rational,
    pub pos: PosIgnored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Space(SpaceDecl),
    Bundle(BundleDecl),
    Check(CheckDecl),
}

/// A source position that never affects equality.
#[derive(Clone, Copy, Debug, Default)]
pub struct PosIgnored(pub Pos);

impl PartialEq for PosIgnored {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for PosIgnored {}
