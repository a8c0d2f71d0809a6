use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use g2chern::arith::{frac, Rational};
use g2chern::catalogue::{self, flip_square, q_fiber_over_s6};
use g2chern::charclass::{chern_numbers, flip, Space, TotalClass};
use g2chern::cli;
use g2chern::riemann_roch::{compare_with_product_form, hilbert_polynomial, Polarization};
use g2chern::rigidity::{reconstruct, scan, FailReason, TopologicalInput};
use g2chern::ring::{RingElement, RingHandle};

mod common;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn space(name: &str) -> &'static Space {
    catalogue::standard().unwrap().get(name).unwrap()
}

fn series(s: &Space, coeffs: &[Rational]) -> RingElement {
    let g = s.ring().lattice_generator(1, 0);
    coeffs
        .iter()
        .enumerate()
        .fold(s.ring().zero(), |acc, (k, c)| &acc + &g.pow(k as u32).scale(c))
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn numbers_are(name: &str, want: [i64; 7]) -> Outcome {
    let got = chern_numbers(space(name)).map_err(|e| e.to_string())?.values();
    ensure(got == ints(&want), || format!("{name}: {got:?}"))
}

fn twistor_pair() -> Outcome {
    numbers_are("Z", [6, 4374, 2106, 594, 90, 1014, 286])?;
    numbers_are("N", [6, -18, -6, 18, 18, -2, 6])
}

fn quadric_family() -> Outcome {
    numbers_are("Q", [6, 6250, 2750, 650, 90, 1210, 286])?;
    numbers_are("PTS6", [6, -486, -162, 18, 18, -54, 6])?;
    numbers_are("PTstarS6", [6, 486, 162, 18, 18, 54, 6])?;
    numbers_are("X", [6, -2, 2, 2, -6, -2, -2])
}

fn adjunction() -> Outcome {
    let q = space("Q");
    let class = |c: &[i64], r| TotalClass::new(series(q, &ints(c)), r).unwrap();
    let quotient = class(&[1, 7, 21, 35, 35, 21, 7, 1], 7)
        .series_quotient(&class(&[1, 2], 1))
        .map_err(|e| e.to_string())?;
    let want = series(q, &ints(&[1, 5, 11, 13, 9, 3]));
    ensure(quotient.total() == &want, || format!("quotient {quotient}"))?;
    let w = class(&[1, 3, 3], 2)
        .whitney(&class(&[1, 2, 2, 1], 3))
        .map_err(|e| e.to_string())?;
    ensure(w.total() == &want, || format!("factorization {w}"))
}

fn flip_formulas() -> Outcome {
    let q = space("Q");
    let x = flip(q, &q_fiber_over_s6(q).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(
        x.tangent().total() == &series(q, &ints(&[1, -1, -1, 1, 3, 3])) && x.orientation().sign() == 1,
        || format!("flip(Q) = {} ({})", x.tangent(), x.orientation()),
    )?;
    let z = space("Z");
    let f = TotalClass::new(series(z, &ints(&[1, 1])), 1).unwrap();
    let n = flip(z, &f).map_err(|e| e.to_string())?;
    let want = [
        frac(1, 1),
        frac(1, 1),
        frac(1, 3),
        frac(-1, 1),
        frac(-1, 1),
        frac(-1, 3),
    ];
    ensure(
        n.tangent().total() == &series(z, &want) && n.orientation().sign() == -1,
        || format!("flip(Z) = {} ({})", n.tangent(), n.orientation()),
    )
}

fn pontryagin() -> Outcome {
    let z = space("Z");
    let (p1, p2) = z.tangent().pontryagin();
    let l = z.ring().lattice_generator(1, 0);
    ensure(
        p1 == l.pow(2).scale(&frac(1, 3)) && p2 == l.pow(4).scale(&frac(1, 9)),
        || format!("p(Z) = ({p1}, {p2})"),
    )?;
    for (a, b) in [("Z", "N"), ("Q", "X")] {
        ensure(
            space(a).tangent().pontryagin() == space(b).tangent().pontryagin(),
            || format!("p({a}) != p({b})"),
        )?;
    }
    let ch2 = z.tangent().chern_character(2)[2].clone();
    ensure(
        ch2 == l.pow(2).scale(&frac(1, 6)) && ch2 != l.pow(2).scale(&frac(1, 2)),
        || format!("ch2(Z) = {ch2}"),
    )?;
    let (code, out) = run_cli(&["--format", "tsv", "audit"]);
    ensure(code == 0 && out.contains("ch2(Z)\t1/6*L^2\t1/2*L^2\tcorrected"), || out)
}

fn hrr() -> Outcome {
    let z = space("Z");
    let pol = Polarization::new(z, z.ring().lattice_generator(1, 0)).map_err(|e| e.to_string())?;
    let p = hilbert_polynomial(&pol).map_err(|e| e.to_string())?;
    let want = [
        frac(1, 1),
        frac(211, 60),
        frac(39, 8),
        frac(10, 3),
        frac(9, 8),
        frac(3, 20),
    ];
    ensure(p.coeffs() == want, || format!("P = {p}"))?;
    ensure(compare_with_product_form(&p).equal, || "product form differs".into())?;
    let product = |r: i64| frac((r + 2) * (3 * r + 5) * (2 * r + 3) * (3 * r + 4) * (r + 1), 120);
    for r in 0..=10 {
        let v = p.eval(&Rational::from(r));
        ensure(v.is_integer() && v == product(r), || format!("P({r}) = {v}"))?;
    }
    ensure(p.eval(&Rational::zero()) == Rational::one(), || "P(0) != 1".into())
}

fn rigidity() -> Outcome {
    let t = TopologicalInput::standard().map_err(|e| e.to_string())?;
    let r = scan(&t).map_err(|e| e.to_string())?;
    ensure(r.candidates.candidates == [1, 3, -1, -3, -5, -9, -15, -45], || {
        format!("candidates {:?}", r.candidates.candidates)
    })?;
    ensure(r.survivors == [3], || format!("survivors {:?}", r.survivors))?;
    use FailReason::*;
    for (d, why) in [
        (1, ToddVsPontryaginMismatch),
        (-1, ToddVsPontryaginMismatch),
        (-3, ToddVsPontryaginMismatch),
        (-5, ToddVsPontryaginMismatch),
        (-9, Mod27Obstruction),
        (-45, Mod27Obstruction),
        (-15, IntegralityFailure),
    ] {
        let case = r.cases.iter().find(|c| c.d == d).ok_or(format!("no case {d}"))?;
        ensure(case.fail_reason() == Some(why), || {
            format!("d = {d}: {:?}", case.failures)
        })?;
    }
    let case = r.cases.iter().find(|c| c.d == 3).unwrap();
    let rec = reconstruct(case, &t).map_err(|e| e.to_string())?;
    let z = space("Z");
    ensure(
        (0..=5).all(|k| rec.tangent().c(k).part(k) == z.tangent().c(k).part(k)),
        || format!("reconstruction {}", rec.tangent()),
    )
}

fn square() -> Outcome {
    let cat = catalogue::standard().unwrap();
    let q = space("Q");
    let h = q.ring().generator("h").unwrap();
    let s = flip_square(cat, &h).map_err(|e| e.to_string())?;
    let want = series(q, &ints(&[1, -3, 3, -1, 3, -3]));
    for corner in [&s.c, &s.d] {
        ensure(
            corner.tangent().total() == &want && corner.orientation().sign() == -1,
            || format!("{} = {} ({})", corner.name(), corner.tangent(), corner.orientation()),
        )?;
    }
    ensure(s.commutes() && s.all_corners_matched(), || "corner unmatched".into())
}

fn properties() -> Outcome {
    for (name, suite) in common::SUITES {
        suite(100).map_err(|e| format!("{name}: {e}"))?;
    }
    for (name, f) in [
        ("unimodular", common::catalogued_rings_are_unimodular as fn()),
        ("five-folds", common::catalogued_five_folds),
        ("td5", common::todd_degree_five_universal),
    ] {
        catch_unwind(f).map_err(|_| format!("catalogued instances: {name}"))?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("g2chern").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn audit() -> Outcome {
    let (code, out) = run_cli(&["--format", "tsv", "audit"]);
    ensure(code == 0, || format!("exit {code}: {out}"))?;
    for needle in [
        "c1^5(Z)\t4374\t4373\ttypo",
        "ch2(Z)\t1/6*L^2\t1/2*L^2\tcorrected",
        "c3(S6) = 2; unit (3,-243,-81,9,9,-27,3); numbers (6,-486,-162,18,18,-54,6)",
        "c3(S6) = 2; unit (3,243,81,9,9,27,3); numbers (6,486,162,18,18,54,6)",
    ] {
        ensure(out.contains(needle), || format!("missing {needle:?}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("twistor pair Chern numbers", twistor_pair),
        ("quadric family Chern numbers", quadric_family),
        ("adjunction", adjunction),
        ("flip formulas", flip_formulas),
        ("Pontryagin classes and ch2", pontryagin),
        ("Hilbert polynomial", hrr),
        ("rigidity scan", rigidity),
        ("square of flips", square),
        ("property suites", properties),
        ("audit subcommand", audit),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match &outcome {
            Ok(()) => println!("criterion {:>2} pass  {name}", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("elapsed {:.3} s", start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        eprintln!("failed criteria {failed:?}");
        std::process::exit(1);
    }
}
