use crate::arith::Rational;
use crate::catalogue::{self, expected, q_fiber_over_s6, search_vertical_multiplier};
use crate::charclass::{chern_numbers, flip, ChernNumberTable, Space, TotalClass};
use crate::dsl;
use crate::riemann_roch::{compare_with_product_form, hilbert_polynomial, product_form, sample};
use crate::rigidity::{self, TopologicalInput};
use crate::ring::{RingElement, RingHandle};

use super::commands::{audit_items, same_classes, standard_catalogue, verify_against_rigidity, z_polarization};
use super::{Context, Failure, Table};

/// One verification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Lines(Vec<CheckLine>);

impl Lines {
    fn add(&mut self, suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckLine {
            suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn result<T>(&mut self, suite: &'static str, name: &str, r: Result<T, String>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.add(suite, name, false, e);
                None
            }
        }
    }
}

fn poly(space: &Space, gen: &str, coeffs: &[i64]) -> RingElement {
    let g = space.ring().generator(gen).expect("generator exists");
    let c: Vec<Rational> = coeffs.iter().map(|&c| Rational::from(c)).collect();
    catalogue::power_series_in(&g, &c)
}

fn definitions(ctx: &Context, out: &mut Lines) {
    for c in dsl::run_checks(&ctx.defs) {
        let detail = match &c.actual {
            Ok(v) => format!("{v}"),
            Err(e) => e.to_string(),
        };
        out.add(
            "definitions",
            format!("{}: {} = {}", c.space, c.expr, c.expected),
            c.passed(),
            detail,
        );
    }
}

fn tables(ctx: &Context, out: &mut Lines) {
    for name in catalogue::FIVE_FOLDS {
        let Some(space) = ctx.defs.space(name) else {
            out.add("tables", name, false, "not defined");
            continue;
        };
        let Some(nums) = out.result("tables", name, chern_numbers(space).map_err(|e| e.to_string())) else {
            continue;
        };
        let want = ChernNumberTable::from_values(expected::column(name).expect("tabulated"));
        let values: Vec<String> = nums.values().iter().map(|v| v.to_string()).collect();
        out.add("tables", name, nums.is_integral() && nums == want, values.join(","));
        let conj = chern_numbers(&space.conjugate()).map(|c| c == nums).unwrap_or(false);
        out.add("tables", format!("{name} conjugation invariance"), conj, "");
        let e = nums.get(crate::charclass::ChernMonomial::C5).clone();
        out.add("tables", format!("{name} euler"), e == 6, e.to_string());
    }
}

fn classes(ctx: &Context, out: &mut Lines) -> Result<(), String> {
    let q = ctx.defs.space("Q").ok_or("Q not defined")?;
    let z = ctx.defs.space("Z").ok_or("Z not defined")?;
    let ambient = TotalClass::new(poly(q, "h", &[1, 7, 21, 35, 35, 21, 7, 1]), 7).map_err(|e| e.to_string())?;
    let normal = TotalClass::new(poly(q, "h", &[1, 2]), 1).map_err(|e| e.to_string())?;
    let adj = ambient.series_quotient(&normal).map_err(|e| e.to_string())?;
    let want = poly(q, "h", &[1, 5, 11, 13, 9, 3]);
    out.add(
        "classes",
        "adjunction (1+h)^7/(1+2h)",
        adj.total() == &want,
        adj.to_string(),
    );
    let f = TotalClass::new(poly(q, "h", &[1, 3, 3]), 2).map_err(|e| e.to_string())?;
    let g = TotalClass::new(poly(q, "h", &[1, 2, 2, 1]), 3).map_err(|e| e.to_string())?;
    let w = f.whitney(&g).map_err(|e| e.to_string())?;
    out.add(
        "classes",
        "Whitney factorization of c(Q)",
        w.total() == &want,
        w.to_string(),
    );
    out.add("classes", "c(Q)", q.tangent().total() == &want, q.tangent().to_string());

    let fq = q_fiber_over_s6(q).map_err(|e| e.to_string())?;
    let x = flip(q, &fq).map_err(|e| e.to_string())?;
    let want_x = poly(q, "h", &[1, -1, -1, 1, 3, 3]);
    out.add(
        "classes",
        "flip(Q, 1+3h+3h^2)",
        x.tangent().total() == &want_x && x.orientation().sign() == 1,
        format!("{} ({})", x.tangent(), x.orientation()),
    );
    let l = z.ring().generator("L").map_err(|e| e.to_string())?;
    let fz = TotalClass::new(&z.ring().one() + &l, 1).map_err(|e| e.to_string())?;
    let n = flip(z, &fz).map_err(|e| e.to_string())?;
    let third = Rational::new(1, 3).unwrap();
    let want_n = [
        Rational::from(1),
        Rational::from(1),
        third.clone(),
        Rational::from(-1),
        Rational::from(-1),
        -third.clone(),
    ];
    let want_n = catalogue::power_series_in(&l, &want_n);
    out.add(
        "classes",
        "flip(Z, 1+L)",
        n.tangent().total() == &want_n && n.orientation().sign() == -1,
        format!("{} ({})", n.tangent(), n.orientation()),
    );
    let (p1, p2) = z.tangent().pontryagin();
    out.add(
        "classes",
        "pontryagin(Z)",
        p1 == l.pow(2).scale(&third) && p2 == l.pow(4).scale(&Rational::new(1, 9).unwrap()),
        format!("p1 = {p1}, p2 = {p2}"),
    );
    out.add(
        "classes",
        "pontryagin(flip(Z)) = pontryagin(Z)",
        n.tangent().pontryagin() == (p1, p2),
        "",
    );
    out.add(
        "classes",
        "pontryagin(flip(Q)) = pontryagin(Q)",
        x.tangent().pontryagin() == q.tangent().pontryagin(),
        "",
    );
    Ok(())
}

fn rings(ctx: &Context, out: &mut Lines) {
    if let Ok(cat) = standard_catalogue() {
        for s in &ctx.defs.spaces {
            if let Some(c) = cat.get(s.name()) {
                out.add(
                    "rings",
                    format!("{} agrees with the catalogue", s.name()),
                    same_classes(s, c),
                    "",
                );
            }
        }
    }
    for s in &ctx.defs.spaces {
        let ring = s.ring();
        let n = ring.top_index();
        let unimodular = (0..=n).all(|k| ring.duality_determinant(k).map(|d| d == 1 || d == -1).unwrap_or(false));
        out.add(
            "rings",
            format!("{} Poincare duality unimodular", s.name()),
            unimodular,
            "",
        );
    }
}

fn hilbert(ctx: &Context, out: &mut Lines) -> Result<(), String> {
    let pol = z_polarization(ctx).map_err(|f| f.detail)?;
    let p = hilbert_polynomial(&pol).map_err(|e| e.to_string())?;
    out.add(
        "hilbert",
        "P equals the product form",
        compare_with_product_form(&p).equal,
        p.to_string(),
    );
    let want: Vec<Rational> = [(3, 20), (9, 8), (10, 3), (39, 8), (211, 60), (1, 1)]
        .iter()
        .map(|&(a, b)| Rational::new(a, b).unwrap())
        .collect();
    let got: Vec<Rational> = (0..=5).rev().map(|k| p.coeff(k)).collect();
    out.add("hilbert", "coefficients", got == want, "");
    let values = sample(&p, &product_form(), 10);
    out.add("hilbert", "P(0) = 1", values[0].1 == 1, "");
    out.add(
        "hilbert",
        "P(0..10) integral",
        values.iter().all(|(_, a, _)| a.is_integer()),
        "",
    );
    Ok(())
}

fn rigidity_suite(ctx: &Context, out: &mut Lines) -> Result<(), String> {
    let input = TopologicalInput::standard().map_err(|e| e.to_string())?;
    let report = rigidity::scan(&input).map_err(|e| e.to_string())?;
    out.add(
        "rigidity",
        "candidates",
        report.candidates.candidates == [1, 3, -1, -3, -5, -9, -15, -45],
        format!("{:?}", report.candidates.candidates),
    );
    out.add(
        "rigidity",
        "survivors",
        report.survivors == [3],
        format!("{:?}", report.survivors),
    );
    let want = [
        (1, "todd_vs_pontryagin_mismatch"),
        (-1, "todd_vs_pontryagin_mismatch"),
        (-3, "todd_vs_pontryagin_mismatch"),
        (-5, "todd_vs_pontryagin_mismatch"),
        (-9, "mod27_obstruction"),
        (-45, "mod27_obstruction"),
        (-15, "integrality_failure"),
    ];
    for (d, reason) in want {
        let got = report.cases.iter().find(|c| c.d == d);
        let ok = got.is_some_and(|c| c.failures.iter().any(|r| r.as_str() == reason) && c.fail_reason().is_some());
        out.add("rigidity", format!("d = {d} fails by {reason}"), ok, "");
    }
    if let Some(z) = ctx.defs.space("Z") {
        let r = verify_against_rigidity(z);
        out.add(
            "rigidity",
            "survivor reconstructs Z",
            r.is_ok(),
            r.err().map(|f| f.detail).unwrap_or_default(),
        );
    }
    Ok(())
}

fn square(out: &mut Lines) -> Result<(), String> {
    let cat = standard_catalogue().map_err(|f| f.detail)?;
    let q = cat.get("Q").expect("Q is catalogued");
    let h = q.ring().generator("h").map_err(|e| e.to_string())?;
    let report = catalogue::flip_square(cat, &h).map_err(|e| e.to_string())?;
    let want = poly(q, "h", &[1, -3, 3, -1, 3, -3]);
    out.add(
        "square",
        "t = h commutes",
        report.commutes() && report.c.tangent().total() == &want && report.c.orientation().sign() == -1,
        format!("{} ({})", report.c.tangent(), report.c.orientation()),
    );
    out.add("square", "every corner identified", report.all_corners_matched(), "");
    let accepted: Vec<i64> = search_vertical_multiplier(cat, &[-3, -2, -1, 0, 1, 2, 3])
        .into_iter()
        .filter(|m| m.accepted())
        .map(|m| m.mu)
        .collect();
    out.add(
        "square",
        "vertical multiplier",
        accepted == [1],
        format!("{accepted:?}"),
    );
    Ok(())
}

fn audit(ctx: &Context, out: &mut Lines) -> Result<(), String> {
    for i in audit_items(ctx).map_err(|f| f.detail)? {
        out.add("audit", i.item, i.ok, i.computed);
    }
    Ok(())
}

/// Every verification suite over the given definitions.
pub fn run_all(defs: &dsl::Definitions) -> Vec<CheckLine> {
    let ctx = Context {
        format: super::Format::Text,
        defs: defs.clone(),
    };
    let mut out = Lines(Vec::new());
    definitions(&ctx, &mut out);
    tables(&ctx, &mut out);
    let r = classes(&ctx, &mut out);
    out.result("classes", "setup", r);
    rings(&ctx, &mut out);
    let r = hilbert(&ctx, &mut out);
    out.result("hilbert", "setup", r);
    let r = rigidity_suite(&ctx, &mut out);
    out.result("rigidity", "setup", r);
    let r = square(&mut out);
    out.result("square", "setup", r);
    let r = audit(&ctx, &mut out);
    out.result("audit", "setup", r);
    out.0
}

pub(crate) fn check_all(ctx: &Context) -> Result<String, Failure> {
    let lines = run_all(&ctx.defs);
    let mut t = Table::new(&["suite", "check", "status", "detail"]);
    for l in &lines {
        t.push(vec![
            l.suite.into(),
            l.name.clone(),
            if l.passed { "pass" } else { "fail" }.into(),
            l.detail.clone(),
        ]);
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    if failed > 0 {
        let first = lines.iter().find(|l| !l.passed).expect("some failure");
        let mut f = Failure::check(format!(
            "{failed} of {} checks failed; first: {} {}",
            lines.len(),
            first.suite,
            first.name
        ));
        f.detail.push_str(&format!(" ({})", first.detail));
        f.stdout = t.render(ctx.format);
        return Err(f);
    }
    Ok(t.render(ctx.format))
}
