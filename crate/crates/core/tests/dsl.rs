use g2chern::arith::Rational;
use g2chern::catalogue;
use g2chern::dsl::{self, ErrorKind, Value};

#[test]
fn builtin_round_trips() {
    let decls = dsl::parse(dsl::BUILTIN).unwrap();
    assert_eq!(dsl::print(&decls), dsl::BUILTIN);
    assert_eq!(dsl::parse(&dsl::print(&decls)).unwrap(), decls);
}

#[test]
fn builtin_checks_pass() {
    let defs = dsl::load(dsl::BUILTIN).unwrap();
    assert_eq!(defs.spaces.len(), 8);
    for c in dsl::run_checks(&defs) {
        assert!(
            c.passed(),
            "{}: {} = {} got {:?}",
            c.space,
            c.expr,
            c.expected,
            c.actual
        );
    }
}

#[test]
fn builtin_agrees_with_catalogue() {
    let defs = dsl::load(dsl::BUILTIN).unwrap();
    let cat = catalogue::standard().unwrap();
    for s in &defs.spaces {
        let c = cat.get(s.name()).unwrap();
        let (a, b) = (s.ring().presentation(), c.ring().presentation());
        assert_eq!(
            (&a.generators, &a.relations, a.top_degree, &a.lattice, &a.fundamental),
            (&b.generators, &b.relations, b.top_degree, &b.lattice, &b.fundamental),
            "{}",
            s.name()
        );
        for k in 0..=s.ring().top_index() {
            assert_eq!(s.tangent().c(k).part(k), c.tangent().c(k).part(k), "{} c{k}", s.name());
        }
        assert_eq!(s.orientation(), c.orientation());
    }
}

#[test]
fn evaluation_examples() {
    let cat = catalogue::standard().unwrap();
    let v = dsl::eval_str("c1^2*c3", cat.get("PTS6").unwrap()).unwrap();
    assert_eq!(v, Value::Number(Rational::from(18)));
    let v = dsl::eval_str("c1^5", cat.get("X").unwrap()).unwrap();
    assert_eq!(v, Value::Number(Rational::from(-2)));
    let v = dsl::eval_str("c1^0", cat.get("Q").unwrap()).unwrap();
    assert_eq!(v.kind(), "element");
    assert_eq!(v.to_string(), "1");
}

#[test]
fn errors_carry_positions() {
    let e = dsl::parse("space A {\n  generator x: 4;\n  generator y: 2;\n  relation y^3 = x;\n}").unwrap_err();
    assert_eq!(e.kind, ErrorKind::DegreeMismatch);
    assert_eq!((e.pos.line, e.pos.col), (4, 18));
    let ok = dsl::parse("space A { generator x: 6; generator y: 2; relation y^3 = -2*x; relation x^2 = 0; fundamental x*y^2 = 1; orientation +1; chern 1; }");
    assert!(ok.is_ok());
    let e = dsl::parse("space A { generator x: 2; relation z^2 = 0; }").unwrap_err();
    assert_eq!(e.kind, ErrorKind::UnknownSymbol);
    assert_eq!(e.pos.col, 36);
    let e = dsl::parse("space A { generator x: 2 $ }").unwrap_err();
    assert_eq!(e.kind, ErrorKind::Lexical);
    let e = dsl::parse("space A { generator x: 2; fundamental x = 1; orientation +1; chern 1; }\nspace A { generator x: 2; fundamental x = 1; orientation +1; chern 1; }").unwrap_err();
    assert_eq!(e.kind, ErrorKind::Duplicate);
    assert_eq!(e.pos.line, 2);
    let e = dsl::parse("space A { generator x: 2 }").unwrap_err();
    assert_eq!(e.kind, ErrorKind::Syntax);
}

mod round_trip {
    use g2chern::dsl::{self, Expr};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn expr(symbols: Vec<&'static str>) -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..200).prop_map(|n| Expr::Int(BigInt::from(n))),
            prop::sample::select(symbols).prop_map(|s| Expr::Sym(s.to_string(), Default::default())),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner, 0u32..6).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            ]
        })
    }

    /// A well-formed file: one-generator spaces `S0, S1, ...` with
    /// arbitrary Chern expressions, then bundles and checks over them.
    fn file() -> impl Strategy<Value = String> {
        let space = (
            1u32..6,
            -9i64..10,
            1u32..4,
            any::<bool>(),
            expr(vec!["g"]),
            prop::option::of((1u32..3, 2u32..30)),
        );
        (
            prop::collection::vec(space, 1..4),
            prop::collection::vec((0usize..4, 1u32..4, expr(vec!["g"])), 0..4),
            prop::collection::vec((0usize..4, expr(vec!["g", "c1"]), -50i64..50, 1i64..7), 0..4),
        )
            .prop_map(|(spaces, bundles, checks)| {
                let mut out = String::new();
                for (i, (n, value, den, pos, chern, lattice)) in spaces.iter().enumerate() {
                    out.push_str(&format!(
                        "space S{i} {{\n  generator g: 2;\n  relation g^{} = 0;\n",
                        n + 1
                    ));
                    if let Some((k, m)) = lattice {
                        if *k <= *n {
                            out.push_str(&format!("  lattice {}: g^{k}/{m};\n", 2 * k));
                        }
                    }
                    let v = num_rational::BigRational::new((*value).into(), (*den as i64).into());
                    out.push_str(&format!(
                        "  fundamental g^{n} = {v};\n  orientation {};\n  chern {};\n}}\n",
                        if *pos { "+1" } else { "-1" },
                        dsl::print_expr(chern)
                    ));
                }
                let ns = spaces.len();
                for (j, (s, rank, e)) in bundles.iter().enumerate() {
                    out.push_str(&format!(
                        "bundle B{j} over S{} rank {rank} chern {};\n",
                        s % ns,
                        dsl::print_expr(e)
                    ));
                }
                for (s, e, num, den) in &checks {
                    let v = num_rational::BigRational::new((*num).into(), (*den).into());
                    out.push_str(&format!("check S{}: {} = {v};\n", s % ns, dsl::print_expr(e)));
                }
                out
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn expressions_round_trip(e in expr(vec!["x", "y", "c1", "c3"])) {
            let s = dsl::print_expr(&e);
            let back = dsl::parse_expr(&s).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(dsl::print_expr(&back), s);
        }

        #[test]
        fn files_round_trip(src in file()) {
            let decls = dsl::parse(&src).unwrap();
            let printed = dsl::print(&decls);
            let again = dsl::parse(&printed).unwrap();
            prop_assert_eq!(&again, &decls);
            prop_assert_eq!(dsl::print(&again), printed);
        }
    }
}
