use std::fmt::Write;

use super::ast::{Decl, Expr, SpaceItem};

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Neg(_) | Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Pow(..) => 3,
        Expr::Int(_) | Expr::Sym(..) => 4,
    }
}

fn operand(e: &Expr, min: u8, out: &mut String) {
    if level(e) < min {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}

fn write_expr(e: &Expr, out: &mut String) {
    match e {
        Expr::Int(n) => write!(out, "{n}").unwrap(),
        Expr::Sym(s, _) => out.push_str(s),
        Expr::Neg(a) => {
            out.push('-');
            operand(a, 2, out);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            operand(a, 1, out);
            out.push_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " });
            operand(b, 2, out);
        }
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            operand(a, 2, out);
            out.push(if matches!(e, Expr::Mul(..)) { '*' } else { '/' });
            operand(b, 3, out);
        }
        Expr::Pow(a, k) => {
            operand(a, 4, out);
            write!(out, "^{k}").unwrap();
        }
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(e, &mut s);
    s
}

/// Normal form: one item per line, two-space indent, a blank line between
/// declarations except inside runs of bundles or of checks.
pub fn print(decls: &[Decl]) -> String {
    let mut out = String::new();
    for (i, d) in decls.iter().enumerate() {
        if i > 0 {
            let same_run = matches!(
                (&decls[i - 1], d),
                (Decl::Bundle(_), Decl::Bundle(_)) | (Decl::Check(_), Decl::Check(_))
            );
            if !same_run {
                out.push('\n');
            }
        }
        match d {
            Decl::Space(s) => {
                writeln!(out, "space {} {{", s.name).unwrap();
                for item in &s.items {
                    out.push_str("  ");
                    match item {
                        SpaceItem::Generator { symbol, degree } => write!(out, "generator {symbol}: {degree}"),
                        SpaceItem::Relation { lhs, rhs } => {
                            write!(out, "relation {} = {}", print_expr(lhs), print_expr(rhs))
                        }
                        SpaceItem::Lattice { degree, generator } => {
                            write!(out, "lattice {degree}: {}", print_expr(generator))
                        }
                        SpaceItem::Fundamental { monomial, value } => {
                            write!(out, "fundamental {} = {value}", print_expr(monomial))
                        }
                        SpaceItem::Orientation(o) => write!(out, "orientation {o}"),
                        SpaceItem::Chern(e) => write!(out, "chern {}", print_expr(e)),
                    }
                    .unwrap();
                    out.push_str(";\n");
                }
                out.push_str("}\n");
            }
            Decl::Bundle(b) => writeln!(
                out,
                "bundle {} over {} rank {} chern {};",
                b.name,
                b.space,
                b.rank,
                print_expr(&b.chern)
            )
            .unwrap(),
            Decl::Check(c) => writeln!(out, "check {}: {} = {};", c.space, print_expr(&c.expr), c.value).unwrap(),
        }
    }
    out
}
