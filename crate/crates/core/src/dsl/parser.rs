use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::ring::{Generator, Orientation};

use super::ast::{BundleDecl, CheckDecl, Decl, Expr, PosIgnored, SpaceDecl, SpaceItem};
use super::eval::{as_monomial, eval_free};
use super::lexer::{lex, Tok, Token};
use super::{DslError, ErrorKind, Pos};

/// What later declarations may refer to in a space.
struct Scope {
    generators: Vec<Generator>,
    rank: u32,
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    spaces: HashMap<String, Scope>,
    names: HashSet<String>,
}

pub fn parse(src: &str) -> Result<Vec<Decl>, DslError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        spaces: HashMap::new(),
        names: HashSet::new(),
    };
    let mut decls = Vec::new();
    while p.peek() != &Tok::Eof {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

/// Parses a standalone expression; symbols are not resolved.
pub fn parse_expr(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        spaces: HashMap::new(),
        names: HashSet::new(),
    };
    let e = p.expr()?;
    p.expect(&Tok::Eof)?;
    Ok(e)
}

fn err(kind: ErrorKind, pos: Pos, msg: impl Into<String>) -> DslError {
    DslError::new(kind, pos, msg.into())
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<Pos, DslError> {
        if self.peek() == want {
            Ok(self.bump().pos)
        } else {
            Err(err(
                ErrorKind::Syntax,
                self.pos(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            ))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().pos)),
            t => Err(err(
                ErrorKind::Syntax,
                self.pos(),
                format!("expected identifier, found {}", t.describe()),
            )),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Pos, DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => Ok(self.bump().pos),
            t => Err(err(
                ErrorKind::Syntax,
                self.pos(),
                format!("expected '{kw}', found {}", t.describe()),
            )),
        }
    }

    fn small_int(&mut self) -> Result<u32, DslError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let pos = self.bump().pos;
                n.to_u32()
                    .ok_or_else(|| err(ErrorKind::Syntax, pos, format!("integer {n} too large")))
            }
            t => Err(err(
                ErrorKind::Syntax,
                self.pos(),
                format!("expected integer, found {}", t.describe()),
            )),
        }
    }

    /// `['-'] INT ['/' INT]`
    fn rational(&mut self) -> Result<Rational, DslError> {
        let neg = if self.peek() == &Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let n = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            t => {
                return Err(err(
                    ErrorKind::Syntax,
                    pos,
                    format!("expected rational number, found {}", t.describe()),
                ))
            }
        };
        let d = if self.peek() == &Tok::Slash {
            self.bump();
            match self.peek().clone() {
                Tok::Int(d) => {
                    self.bump();
                    d
                }
                t => {
                    return Err(err(
                        ErrorKind::Syntax,
                        self.pos(),
                        format!("expected denominator, found {}", t.describe()),
                    ))
                }
            }
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(n, d).map_err(|_| err(ErrorKind::Syntax, pos, "zero denominator"))?;
        Ok(if neg { -r } else { r })
    }

    fn declare(&mut self, name: &str, pos: Pos) -> Result<(), DslError> {
        if !self.names.insert(name.to_string()) {
            return Err(err(ErrorKind::Duplicate, pos, format!("{name} is already declared")));
        }
        Ok(())
    }

    fn decl(&mut self) -> Result<Decl, DslError> {
        let pos = self.pos();
        match self.peek() {
            Tok::Ident(s) if s == "space" => self.space().map(Decl::Space),
            Tok::Ident(s) if s == "bundle" => self.bundle().map(Decl::Bundle),
            Tok::Ident(s) if s == "check" => self.check().map(Decl::Check),
            t => Err(err(
                ErrorKind::Syntax,
                pos,
                format!("expected 'space', 'bundle' or 'check', found {}", t.describe()),
            )),
        }
    }

    fn check_symbols(&self, e: &Expr, allowed: &dyn Fn(&str) -> bool) -> Result<(), DslError> {
        for (s, pos) in e.symbols() {
            if !allowed(s) {
                return Err(err(ErrorKind::UnknownSymbol, pos, format!("unknown symbol {s}")));
            }
        }
        Ok(())
    }

    fn space(&mut self) -> Result<SpaceDecl, DslError> {
        let start = self.keyword("space")?;
        let (name, name_pos) = self.ident()?;
        self.declare(&name, name_pos)?;
        self.expect(&Tok::LBrace)?;
        let mut gens: Vec<Generator> = Vec::new();
        let mut items = Vec::new();
        let mut top: Option<u32> = None;
        let (mut has_orientation, mut has_chern) = (false, false);
        while self.peek() != &Tok::RBrace {
            let (kw, kw_pos) = self.ident()?;
            let item = match kw.as_str() {
                "generator" => {
                    let (symbol, sym_pos) = self.ident()?;
                    self.expect(&Tok::Colon)?;
                    let deg_pos = self.pos();
                    let degree = self.small_int()?;
                    if gens.iter().any(|g| g.symbol == symbol) {
                        return Err(err(
                            ErrorKind::Duplicate,
                            sym_pos,
                            format!("generator {symbol} declared twice"),
                        ));
                    }
                    if degree == 0 || degree % 2 != 0 {
                        return Err(err(
                            ErrorKind::DegreeMismatch,
                            deg_pos,
                            format!("generator {symbol} must have positive even degree, got {degree}"),
                        ));
                    }
                    gens.push(Generator::new(symbol.clone(), degree));
                    SpaceItem::Generator { symbol, degree }
                }
                "relation" => {
                    let lhs_pos = self.pos();
                    let lhs = self.expr()?;
                    self.expect(&Tok::Eq)?;
                    let rhs_pos = self.pos();
                    let rhs = self.expr()?;
                    let is_gen = |s: &str| gens.iter().any(|g| g.symbol == s);
                    self.check_symbols(&lhs, &is_gen)?;
                    self.check_symbols(&rhs, &is_gen)?;
                    let m = as_monomial(&lhs, &gens)
                        .filter(|m| !m.is_one())
                        .ok_or_else(|| err(ErrorKind::Syntax, lhs_pos, "relation must rewrite a monomial"))?;
                    let d = m.degree(&gens);
                    let r = eval_free(&rhs, &gens).map_err(|m| err(ErrorKind::Syntax, rhs_pos, m))?;
                    match r.homogeneous_degree(&gens) {
                        Ok(None) => {}
                        Ok(Some(e)) if e == d => {}
                        Ok(Some(e)) => {
                            return Err(err(
                                ErrorKind::DegreeMismatch,
                                rhs_pos,
                                format!("relation has degree {d} on the left and {e} on the right"),
                            ))
                        }
                        Err(()) => {
                            return Err(err(
                                ErrorKind::DegreeMismatch,
                                rhs_pos,
                                "right-hand side is not homogeneous",
                            ))
                        }
                    }
                    SpaceItem::Relation { lhs, rhs }
                }
                "lattice" => {
                    let degree = self.small_int()?;
                    self.expect(&Tok::Colon)?;
                    let e_pos = self.pos();
                    let generator = self.expr()?;
                    self.check_symbols(&generator, &|s| gens.iter().any(|g| g.symbol == s))?;
                    let v = eval_free(&generator, &gens).map_err(|m| err(ErrorKind::Syntax, e_pos, m))?;
                    match v.homogeneous_degree(&gens) {
                        Ok(Some(e)) if e == degree => {}
                        _ => {
                            return Err(err(
                                ErrorKind::DegreeMismatch,
                                e_pos,
                                format!("lattice generator is not homogeneous of degree {degree}"),
                            ))
                        }
                    }
                    SpaceItem::Lattice { degree, generator }
                }
                "fundamental" => {
                    let m_pos = self.pos();
                    let monomial = self.expr()?;
                    self.check_symbols(&monomial, &|s| gens.iter().any(|g| g.symbol == s))?;
                    let m = as_monomial(&monomial, &gens)
                        .ok_or_else(|| err(ErrorKind::Syntax, m_pos, "fundamental class pairs a single monomial"))?;
                    let d = m.degree(&gens);
                    match top {
                        Some(t) if t != d => {
                            return Err(err(
                                ErrorKind::DegreeMismatch,
                                m_pos,
                                format!("fundamental monomials of degrees {t} and {d}"),
                            ))
                        }
                        _ => top = Some(d),
                    }
                    self.expect(&Tok::Eq)?;
                    let value = self.rational()?;
                    SpaceItem::Fundamental { monomial, value }
                }
                "orientation" => {
                    if std::mem::replace(&mut has_orientation, true) {
                        return Err(err(ErrorKind::Duplicate, kw_pos, "orientation declared twice"));
                    }
                    let sign_pos = self.pos();
                    let sign = match self.bump().tok {
                        Tok::Plus => 1,
                        Tok::Minus => -1,
                        _ => return Err(err(ErrorKind::Syntax, sign_pos, "orientation is +1 or -1")),
                    };
                    let one_pos = self.pos();
                    if self.small_int()? != 1 {
                        return Err(err(ErrorKind::Syntax, one_pos, "orientation is +1 or -1"));
                    }
                    SpaceItem::Orientation(Orientation::from_sign(sign).unwrap())
                }
                "chern" => {
                    if std::mem::replace(&mut has_chern, true) {
                        return Err(err(ErrorKind::Duplicate, kw_pos, "chern class declared twice"));
                    }
                    let e = self.expr()?;
                    self.check_symbols(&e, &|s| gens.iter().any(|g| g.symbol == s))?;
                    SpaceItem::Chern(e)
                }
                other => return Err(err(ErrorKind::Syntax, kw_pos, format!("unknown space item '{other}'"))),
            };
            self.expect(&Tok::Semi)?;
            items.push(item);
        }
        let close = self.expect(&Tok::RBrace)?;
        let missing = [
            (top.is_none(), "fundamental"),
            (!has_orientation, "orientation"),
            (!has_chern, "chern"),
        ];
        if let Some((_, what)) = missing.iter().find(|(m, _)| *m) {
            return Err(err(
                ErrorKind::Syntax,
                close,
                format!("space {name} lacks a {what} declaration"),
            ));
        }
        self.spaces.insert(
            name.clone(),
            Scope {
                generators: gens,
                rank: top.unwrap() / 2,
            },
        );
        Ok(SpaceDecl {
            name,
            items,
            pos: PosIgnored(start),
        })
    }

    fn space_ref(&mut self) -> Result<String, DslError> {
        let (space, pos) = self.ident()?;
        if !self.spaces.contains_key(&space) {
            return Err(err(ErrorKind::UnknownSymbol, pos, format!("unknown space {space}")));
        }
        Ok(space)
    }

    fn bundle(&mut self) -> Result<BundleDecl, DslError> {
        let start = self.keyword("bundle")?;
        let (name, name_pos) = self.ident()?;
        self.declare(&name, name_pos)?;
        self.keyword("over")?;
        let space = self.space_ref()?;
        self.keyword("rank")?;
        let rank = self.small_int()?;
        self.keyword("chern")?;
        let chern = self.expr()?;
        let scope = &self.spaces[&space];
        self.check_symbols(&chern, &|s| scope.generators.iter().any(|g| g.symbol == s))?;
        self.expect(&Tok::Semi)?;
        Ok(BundleDecl {
            name,
            space,
            rank,
            chern,
            pos: PosIgnored(start),
        })
    }

    fn check(&mut self) -> Result<CheckDecl, DslError> {
        let start = self.keyword("check")?;
        let space = self.space_ref()?;
        self.expect(&Tok::Colon)?;
        let expr = self.expr()?;
        let scope = &self.spaces[&space];
        self.check_symbols(&expr, &|s| is_symbol_of(scope, s))?;
        self.expect(&Tok::Eq)?;
        let value = self.rational()?;
        self.expect(&Tok::Semi)?;
        Ok(CheckDecl {
            space,
            expr,
            value,
            pos: PosIgnored(start),
        })
    }

    /// `expr := ['-'] term (('+'|'-') term)*`
    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut e = if self.peek() == &Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    e = Expr::Add(Box::new(e), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    e = Expr::Sub(Box::new(e), Box::new(self.term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    /// `term := power (('*'|'/') power)*`
    fn term(&mut self) -> Result<Expr, DslError> {
        let mut e = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    e = Expr::Mul(Box::new(e), Box::new(self.power()?));
                }
                Tok::Slash => {
                    self.bump();
                    e = Expr::Div(Box::new(e), Box::new(self.power()?));
                }
                _ => return Ok(e),
            }
        }
    }

    /// `power := atom ['^' INT]`
    fn power(&mut self) -> Result<Expr, DslError> {
        let a = self.atom()?;
        if self.peek() == &Tok::Caret {
            self.bump();
            let k = self.small_int()?;
            return Ok(Expr::Pow(Box::new(a), k));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Sym(s, pos))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            t => Err(err(
                ErrorKind::Syntax,
                pos,
                format!("expected expression, found {}", t.describe()),
            )),
        }
    }
}

/// Generators of the space, or `c1..cN` up to its complex dimension.
fn is_symbol_of(scope: &Scope, s: &str) -> bool {
    scope.generators.iter().any(|g| g.symbol == s) || chern_index(s).is_some_and(|k| k >= 1 && k <= scope.rank as usize)
}

/// `k` for a symbol `ck`.
pub fn chern_index(s: &str) -> Option<usize> {
    s.strip_prefix('c')?.parse().ok()
}
