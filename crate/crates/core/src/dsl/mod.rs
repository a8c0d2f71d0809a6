//! A small definition language for spaces, bundles and check directives:
//!
//! ```text
//! space Z {
//!   generator L: 2;
//!   relation L^6 = 0;
//!   lattice 4: L^2/3;
//!   fundamental L^5 = 18;
//!   orientation +1;
//!   chern 1 + 3*L + 13/3*L^2;
//! }
//! bundle TpiZ over Z rank 1 chern 1 + L;
//! check Z: c1^5 = 4374;
//! ```
//!
//! Expressions: `expr := ['-'] term (('+'|'-') term)*`,
//! `term := power (('*'|'/') power)*`, `power := atom ['^' INT]`,
//! `atom := INT | IDENT | '(' expr ')'`. `#` starts a comment.

pub mod ast;
mod eval;
mod lexer;
mod parser;
mod printer;

use std::fmt;
use std::sync::Arc;

use crate::arith::Rational;
use crate::charclass::{Space, TotalClass};
use crate::ring::{make_ring, Orientation, Ring, RingElement, RingHandle, RingPresentation};

pub use ast::{Decl, Expr};
pub use eval::eval_free;
pub use parser::{chern_index, parse, parse_expr};
pub use printer::{print, print_expr};

/// The shipped definitions of every catalogued space.
pub const BUILTIN: &str = include_str!("../../data/builtin.spaces");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    UnknownSymbol,
    DegreeMismatch,
    Duplicate,
    /// The declarations parse but do not describe a valid ring or class.
    Invalid,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Lexical => "lexical_error",
            ErrorKind::Syntax => "syntax_error",
            ErrorKind::UnknownSymbol => "unknown_symbol",
            ErrorKind::DegreeMismatch => "degree_mismatch",
            ErrorKind::Duplicate => "duplicate",
            ErrorKind::Invalid => "invalid_definition",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl DslError {
    pub fn new(kind: ErrorKind, pos: Pos, message: String) -> Self {
        DslError { kind, pos, message }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.pos, self.kind.as_str(), self.message)
    }
}

impl std::error::Error for DslError {}

#[derive(Clone, Debug)]
pub struct Bundle {
    pub name: String,
    pub space: String,
    pub class: TotalClass,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub space: String,
    pub expr: Expr,
    pub value: Rational,
    pub pos: Pos,
}

/// Elaborated declarations.
#[derive(Clone, Debug, Default)]
pub struct Definitions {
    pub spaces: Vec<Space>,
    pub bundles: Vec<Bundle>,
    pub checks: Vec<Check>,
}

impl Definitions {
    pub fn space(&self, name: &str) -> Option<&Space> {
        self.spaces.iter().find(|s| s.name() == name)
    }

    pub fn bundle(&self, space: &str, name: &str) -> Option<&Bundle> {
        self.bundles.iter().find(|b| b.space == space && b.name == name)
    }
}

fn invalid(pos: Pos, msg: impl fmt::Display) -> DslError {
    DslError::new(ErrorKind::Invalid, pos, msg.to_string())
}

fn generator_resolver(ring: &Arc<Ring>) -> impl Fn(&str) -> Option<RingElement> + '_ {
    move |s: &str| ring.generator(s).ok()
}

/// Builds rings, spaces and bundles from parsed declarations.
pub fn elaborate(decls: &[Decl]) -> Result<Definitions, DslError> {
    use ast::SpaceItem;
    let mut defs = Definitions::default();
    for d in decls {
        match d {
            Decl::Space(s) => {
                let pos = s.pos.0;
                let gens: Vec<_> = s
                    .items
                    .iter()
                    .filter_map(|i| match i {
                        SpaceItem::Generator { symbol, degree } => {
                            Some(crate::ring::Generator::new(symbol.clone(), *degree))
                        }
                        _ => None,
                    })
                    .collect();
                let mut p = RingPresentation::new(s.name.clone(), 0);
                p.generators = gens.clone();
                let mut orientation = Orientation::Positive;
                let mut chern = None;
                for item in &s.items {
                    match item {
                        SpaceItem::Generator { .. } => {}
                        SpaceItem::Relation { lhs, rhs } => {
                            let lhs = eval::as_monomial(lhs, &gens).ok_or_else(|| invalid(pos, "bad relation"))?;
                            let rhs = eval_free(rhs, &gens).map_err(|m| invalid(pos, m))?;
                            p.relations.push(crate::ring::Relation { lhs, rhs });
                        }
                        SpaceItem::Lattice { degree, generator } => {
                            p.lattice
                                .push((*degree, eval_free(generator, &gens).map_err(|m| invalid(pos, m))?));
                        }
                        SpaceItem::Fundamental { monomial, value } => {
                            let m = eval::as_monomial(monomial, &gens).ok_or_else(|| invalid(pos, "bad monomial"))?;
                            p.top_degree = m.degree(&gens);
                            p.fundamental.get_or_insert_with(Vec::new).push((m, value.clone()));
                        }
                        SpaceItem::Orientation(o) => orientation = *o,
                        SpaceItem::Chern(e) => chern = Some(e),
                    }
                }
                let ring = make_ring(p).map_err(|e| invalid(pos, format!("space {}: {e}", s.name)))?;
                let total = eval::eval_in(chern.expect("parser requires chern"), &ring, &generator_resolver(&ring))
                    .map_err(|m| invalid(pos, m))?;
                let rank = ring.top_index() as i64;
                let tangent =
                    TotalClass::new(total, rank).map_err(|e| invalid(pos, format!("space {}: {e}", s.name)))?;
                if !tangent.is_genuine() {
                    return Err(invalid(
                        pos,
                        format!("space {}: tangent class exceeds rank {rank}", s.name),
                    ));
                }
                defs.spaces
                    .push(Space::new(&s.name, tangent, orientation, "definition file"));
            }
            Decl::Bundle(b) => {
                let pos = b.pos.0;
                let ring = defs.space(&b.space).expect("parser resolved the space").ring().clone();
                let total = eval::eval_in(&b.chern, &ring, &generator_resolver(&ring)).map_err(|m| invalid(pos, m))?;
                let class = TotalClass::new(total, b.rank as i64)
                    .map_err(|e| invalid(pos, format!("bundle {}: {e}", b.name)))?;
                if !class.is_genuine() {
                    return Err(invalid(
                        pos,
                        format!("bundle {}: class exceeds rank {}", b.name, b.rank),
                    ));
                }
                defs.bundles.push(Bundle {
                    name: b.name.clone(),
                    space: b.space.clone(),
                    class,
                });
            }
            Decl::Check(c) => defs.checks.push(Check {
                space: c.space.clone(),
                expr: c.expr.clone(),
                value: c.value.clone(),
                pos: c.pos.0,
            }),
        }
    }
    Ok(defs)
}

pub fn load(src: &str) -> Result<Definitions, DslError> {
    elaborate(&parse(src)?)
}

/// The value of an expression on a space: a number when it lands in top
/// degree, otherwise the ring element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Number(Rational),
    Element(RingElement),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Element(_) => "element",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(r) => write!(f, "{r}"),
            Value::Element(e) => write!(f, "{e}"),
        }
    }
}

/// Evaluates to a ring element with generators and `c1..cN` resolved in
/// `space`.
pub fn eval_element(e: &Expr, space: &Space) -> Result<RingElement, DslError> {
    let ring = space.ring();
    let rank = space.tangent().rank();
    for (s, pos) in e.symbols() {
        let known = ring.generator_index(s).is_some() || chern_index(s).is_some_and(|k| k >= 1 && (k as i64) <= rank);
        if !known {
            return Err(DslError::new(
                ErrorKind::UnknownSymbol,
                pos,
                format!("unknown symbol {s} in {}", space.name()),
            ));
        }
    }
    let resolve = |s: &str| {
        ring.generator(s)
            .ok()
            .or_else(|| chern_index(s).map(|k| space.tangent().c(k)))
    };
    eval::eval_in(e, ring, &resolve).map_err(|m| invalid(Pos::default(), m))
}

/// Evaluates with generators and `c1..cN` resolved in `space`, pairing
/// top-degree results with the fundamental class and orientation.
pub fn eval_expression(e: &Expr, space: &Space) -> Result<Value, DslError> {
    let n = space.ring().top_index();
    let v = eval_element(e, space)?;
    let top = if v.is_zero() {
        has_top_degree(e, space)
    } else {
        v.is_homogeneous_of(n)
    };
    if top {
        let r = v
            .evaluate_top(space.orientation())
            .map_err(|err| invalid(Pos::default(), err))?;
        Ok(Value::Number(r))
    } else {
        Ok(Value::Element(v))
    }
}

/// Zero is ambiguous; call it a number only when the expression's leading
/// monomials have top weight.
fn has_top_degree(e: &Expr, space: &Space) -> bool {
    fn weight(e: &Expr, space: &Space) -> Option<u32> {
        let ring = space.ring();
        match e {
            Expr::Int(_) => Some(0),
            Expr::Sym(s, _) => ring
                .generator_index(s)
                .map(|i| ring.generators()[i].degree / 2)
                .or_else(|| chern_index(s).map(|k| k as u32)),
            Expr::Neg(a) => weight(a, space),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (weight(a, space)?, weight(b, space)?);
                (x == y).then_some(x)
            }
            Expr::Mul(a, b) => Some(weight(a, space)? + weight(b, space)?),
            Expr::Div(a, _) => weight(a, space),
            Expr::Pow(a, k) => Some(weight(a, space)? * k),
        }
    }
    weight(e, space) == Some(space.ring().top_index() as u32)
}

pub fn eval_str(src: &str, space: &Space) -> Result<Value, DslError> {
    eval_expression(&parse_expr(src)?, space)
}

/// Outcome of a `check` directive.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub space: String,
    pub expr: String,
    pub expected: Rational,
    pub actual: Result<Value, DslError>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.actual, Ok(Value::Number(v)) if *v == self.expected)
    }
}

pub fn run_checks(defs: &Definitions) -> Vec<CheckOutcome> {
    defs.checks
        .iter()
        .map(|c| {
            let space = defs.space(&c.space).expect("parser resolved the space");
            CheckOutcome {
                space: c.space.clone(),
                expr: print_expr(&c.expr),
                expected: c.value.clone(),
                actual: eval_expression(&c.expr, space).map_err(|e| DslError { pos: c.pos, ..e }),
            }
        })
        .collect()
}
