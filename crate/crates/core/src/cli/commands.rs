use crate::arith::Rational;
use crate::catalogue::{self, expected, universal_multiples, Catalogue};
use crate::charclass::{
    chern_numbers, flip as flip_space, ChernMonomial, ChernNumberTable, ClassError, Space, TotalClass,
};
use crate::dsl;
use crate::riemann_roch::{
    compare_with_product_form, euler_characteristic_at, extract_chern_data, hilbert_polynomial, product_form,
    Polarization,
};
use crate::rigidity::{self, TopologicalInput};
use crate::ring::{RingElement, RingHandle};

use super::{Context, Failure, Format, Table, TableId};

pub(crate) fn standard_catalogue() -> Result<&'static Catalogue, Failure> {
    catalogue::standard().map_err(|e| Failure::check(format!("catalogue: {e}")))
}

/// Chern numbers of a five-fold, refusing non-integral tables.
pub(crate) fn integral_numbers(space: &Space) -> Result<ChernNumberTable, Failure> {
    let t = chern_numbers(space).map_err(|e| match e {
        ClassError::WrongDimension { .. } => Failure::usage(format!("{} is not a five-fold", space.name())),
        e => Failure::check(format!("{}: {e}", space.name())),
    })?;
    if !t.is_integral() {
        return Err(Failure::check(format!(
            "{}: Chern numbers are not integral",
            space.name()
        )));
    }
    Ok(t)
}

fn same_structure(a: &Space, b: &Space) -> bool {
    let (ra, rb) = (a.ring(), b.ring());
    ra.generators() == rb.generators()
        && ra.top_index() == rb.top_index()
        && (0..=ra.top_index()).all(|k| ra.basis(k) == rb.basis(k))
}

/// True when the tangent classes and orientations agree coefficientwise.
pub(crate) fn same_classes(a: &Space, b: &Space) -> bool {
    same_structure(a, b)
        && a.orientation() == b.orientation()
        && (0..=a.ring().top_index()).all(|k| a.tangent().c(k).part(k) == b.tangent().c(k).part(k))
}

/// Reruns the index analysis and compares its unique survivor with `z`.
pub(crate) fn verify_against_rigidity(z: &Space) -> Result<i64, Failure> {
    let input = TopologicalInput::standard().map_err(|e| Failure::check(format!("rigidity: {e}")))?;
    let report = rigidity::scan(&input).map_err(|e| Failure::check(format!("rigidity: {e}")))?;
    let [d] = report.survivors[..] else {
        return Err(Failure::check(format!(
            "rigidity survivors {:?}, expected exactly one",
            report.survivors
        )));
    };
    let case = report.cases.iter().find(|c| c.d == d).expect("survivor has a case");
    let rec = rigidity::reconstruct(case, &input).map_err(|e| Failure::check(format!("rigidity: {e}")))?;
    if !same_classes(&rec, z) {
        return Err(Failure::check(format!(
            "{}: tangent {} disagrees with the reconstruction {} at d = {d}",
            z.name(),
            z.tangent(),
            rec.tangent()
        )));
    }
    Ok(d)
}

fn class_table(space: &Space) -> Table {
    let mut t = Table::new(&["class", "value"]);
    t.push(vec!["c".into(), space.tangent().to_string()]);
    for k in 1..=space.ring().top_index() {
        t.push(vec![format!("c{k}"), space.tangent().c(k).to_string()]);
    }
    t.push(vec!["orientation".into(), space.orientation().to_string()]);
    t
}

pub(crate) fn spaces(ctx: &Context) -> Result<String, Failure> {
    let mut t = Table::new(&["space", "dim", "generators", "orientation", "c1"]);
    for s in &ctx.defs.spaces {
        let gens: Vec<String> = s
            .ring()
            .generators()
            .iter()
            .map(|g| format!("{}:{}", g.symbol, g.degree))
            .collect();
        t.push(vec![
            s.name().into(),
            s.ring().top_index().to_string(),
            gens.join(","),
            s.orientation().to_string(),
            s.tangent().c(1).to_string(),
        ]);
    }
    Ok(t.render(ctx.format))
}

pub(crate) fn chern(ctx: &Context, name: &str) -> Result<String, Failure> {
    let space = ctx.space(name)?;
    let verified = if space.name() == "Z" {
        Some(verify_against_rigidity(space)?)
    } else {
        None
    };
    let mut out = class_table(space).render(ctx.format);
    if let (Some(d), Format::Text) = (verified, ctx.format) {
        out.push_str(&format!("agrees with the rigidity reconstruction at d = {d}\n"));
    }
    Ok(out)
}

pub(crate) fn numbers(ctx: &Context, name: &str) -> Result<String, Failure> {
    let space = ctx.space(name)?;
    let nums = integral_numbers(space)?;
    let mut t = Table::new(&["monomial", "value"]);
    for (m, v) in nums.entries() {
        t.push(vec![m.key().into(), v.to_string()]);
    }
    Ok(t.render(ctx.format))
}

fn display_name(name: &str) -> &str {
    if name == "PTstarS6" {
        "PT*S6"
    } else {
        name
    }
}

pub(crate) fn table(ctx: &Context, which: TableId) -> Result<String, Failure> {
    let names: &[&str] = match which {
        TableId::Z => &["Z", "N"],
        TableId::Q => &["Q", "PTS6", "PTstarS6", "X"],
    };
    let mut columns = Vec::new();
    for &n in names {
        let nums = integral_numbers(ctx.space(n)?)?;
        let want = ChernNumberTable::from_values(expected::column(n).expect("tabulated column"));
        if nums != want {
            return Err(Failure::check(format!(
                "{n}: computed {:?} differs from the table",
                nums.values().iter().map(|v| v.to_string()).collect::<Vec<_>>()
            )));
        }
        columns.push(nums);
    }
    let mut header = vec!["monomial"];
    header.extend(names.iter().map(|n| display_name(n)));
    let mut t = Table::new(&header);
    for m in ChernMonomial::ALL {
        let mut row = vec![m.key().to_string()];
        row.extend(columns.iter().map(|c| c.get(m).to_string()));
        t.push(row);
    }
    Ok(t.render(ctx.format))
}

pub(crate) fn z_polarization(ctx: &Context) -> Result<Polarization, Failure> {
    let z = ctx.space("Z")?;
    let line = z.ring().lattice_generator(1, 0);
    Polarization::new(z, line).map_err(|e| Failure::check(format!("polarization: {e}")))
}

pub(crate) fn hilbert(ctx: &Context, samples: u32) -> Result<String, Failure> {
    let pol = z_polarization(ctx)?;
    let p = hilbert_polynomial(&pol).map_err(|e| Failure::check(format!("hilbert: {e}")))?;
    let reference = product_form();
    let cmp = compare_with_product_form(&p);
    if !cmp.equal {
        return Err(Failure::check(format!(
            "Hilbert polynomial {p} differs from the product form"
        )));
    }
    let data = extract_chern_data(&p, &pol).map_err(|e| Failure::check(format!("hilbert: {e}")))?;
    let mut t = Table::new(&["r", "P(r)", "product(r)", "chi(rL)"]);
    for (r, a, b) in crate::riemann_roch::sample(&p, &reference, samples) {
        let direct = euler_characteristic_at(&pol, r as i64).map_err(|e| Failure::check(format!("hilbert: {e}")))?;
        if !a.is_integer() || a != b || a != direct {
            return Err(Failure::check(format!("P({r}) = {a}, product {b}, direct {direct}")));
        }
        t.push(vec![r.to_string(), a.to_string(), b.to_string(), direct.to_string()]);
    }
    let mut out = String::new();
    if ctx.format == Format::Text {
        out.push_str(&format!("P(r) = {p}\n"));
        out.push_str("product form: (1/120)(r+2)(3r+5)(2r+3)(3r+4)(r+1), agrees\n");
        out.push_str(&format!(
            "index {}, c1^5 = {}, c1^3c2 = {}, r^4 coefficient {}\n\n",
            data.index,
            data.c1_pow5,
            data.c1_cube_c2,
            if data.r4_consistent {
                "consistent"
            } else {
                "inconsistent"
            }
        ));
    }
    out.push_str(&t.render(ctx.format));
    Ok(out)
}

pub(crate) fn rigidity(ctx: &Context) -> Result<String, Failure> {
    let input = TopologicalInput::standard().map_err(|e| Failure::check(format!("rigidity: {e}")))?;
    let report = rigidity::scan(&input).map_err(|e| Failure::check(format!("rigidity: {e}")))?;
    let cat = standard_catalogue()?;
    let z = cat.get("Z").expect("Z is catalogued");
    for &d in &report.survivors {
        let case = report.cases.iter().find(|c| c.d == d).expect("survivor has a case");
        let rec = rigidity::reconstruct(case, &input).map_err(|e| Failure::check(format!("rigidity: {e}")))?;
        if !same_classes(&rec, z) {
            return Err(Failure::check(format!("survivor d = {d} does not reconstruct Z")));
        }
    }
    let text = ctx.format == Format::Text;
    let mut header = vec!["d", "verdict", "fail_reason", "lhs", "rhs"];
    if text {
        header.push("all_failures");
    }
    let mut t = Table::new(&header);
    for c in &report.cases {
        let mut row = vec![
            c.d.to_string(),
            c.verdict.to_string(),
            c.fail_reason().map_or("-", |r| r.as_str()).to_string(),
            c.pontryagin_lhs.to_string(),
            c.todd_rhs.to_string(),
        ];
        if text {
            let all: Vec<&str> = c.failures.iter().map(|r| r.as_str()).collect();
            row.push(if all.is_empty() { "-".into() } else { all.join(",") });
        }
        t.push(row);
    }
    let mut out = String::new();
    let join = |v: &[i64]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
    if text {
        out.push_str(&format!("candidates: {}\n", join(&report.candidates.candidates)));
        out.push_str("lhs = <c1^2c3> from p2, rhs = <c1^2c3> from the Todd genus\n\n");
    }
    out.push_str(&t.render(ctx.format));
    if text {
        out.push_str(&format!("\nsurvivors: {}\n", join(&report.survivors)));
        for line in rigidity::published_differences(&report.cases) {
            out.push_str(&format!("note: {line}\n"));
        }
    }
    Ok(out)
}

fn top_nonzero_degree(e: &RingElement) -> u32 {
    e.support().last().copied().unwrap_or(0) as u32
}

pub(crate) fn flip(ctx: &Context, name: &str, fiber: &str, rank: Option<u32>) -> Result<String, Failure> {
    let space = ctx.space(name)?;
    let class = match ctx.defs.bundle(space.name(), fiber) {
        Some(b) => {
            if rank.is_some_and(|r| r as i64 != b.class.rank()) {
                return Err(Failure::usage(format!("bundle {fiber} has rank {}", b.class.rank())));
            }
            b.class.clone()
        }
        None => {
            let total = dsl::eval_element(&dsl::parse_expr(fiber)?, space)?;
            let rank = rank.unwrap_or_else(|| top_nonzero_degree(&total));
            TotalClass::new(total, rank as i64).map_err(|e| Failure::usage(format!("fiber: {e}")))?
        }
    };
    let flipped = flip_space(space, &class).map_err(|e| Failure::check(format!("flip: {e}")))?;
    let mut out = String::new();
    if ctx.format == Format::Text {
        out.push_str(&format!(
            "flip of {} along {} (rank {})\n",
            space.name(),
            class,
            class.rank()
        ));
    }
    out.push_str(&class_table(&flipped).render(ctx.format));
    Ok(out)
}

pub(crate) fn square(ctx: &Context, t: &str) -> Result<String, Failure> {
    let cat = standard_catalogue()?;
    let q = cat.get("Q").expect("Q is catalogued");
    let t = dsl::eval_element(&dsl::parse_expr(t)?, q)?;
    let report = catalogue::flip_square(cat, &t).map_err(|e| Failure::check(format!("square: {e}")))?;
    let mut table = Table::new(&["corner", "c", "orientation", "matches"]);
    let matches = |corner: &str| -> String {
        let found: Vec<String> = report
            .corners
            .iter()
            .filter(|c| c.corner == corner)
            .flat_map(|c| &c.matches)
            .map(|m| {
                format!(
                    "{}(eps={:+}{})",
                    display_name(&m.target),
                    m.generator_sign,
                    if m.globally_conjugated { ",conj" } else { "" }
                )
            })
            .collect();
        if found.is_empty() {
            "-".into()
        } else {
            found.join(",")
        }
    };
    let q_corner = cat.get("Q").expect("Q is catalogued");
    for (corner, space) in [
        ("Q", q_corner),
        ("A", &report.a),
        ("B", &report.b),
        ("C", &report.c),
        ("D", &report.d),
    ] {
        let m = if corner == "D" { matches("C") } else { matches(corner) };
        table.push(vec![
            corner.into(),
            space.tangent().to_string(),
            space.orientation().to_string(),
            m,
        ]);
    }
    let mut out = String::new();
    if ctx.format == Format::Text {
        out.push_str(&format!("t = {}\n", report.t));
    }
    out.push_str(&table.render(ctx.format));
    if ctx.format == Format::Text {
        out.push_str(&format!(
            "\nC = D: commutes; every corner identified: {}\n",
            if report.all_corners_matched() { "yes" } else { "no" }
        ));
    }
    Ok(out)
}

pub(crate) fn eval(ctx: &Context, expr: &str, name: &str) -> Result<String, Failure> {
    let space = ctx.space(name)?;
    let v = dsl::eval_expression(&dsl::parse_expr(expr)?, space)?;
    Ok(match ctx.format {
        Format::Text => format!("{}: {v}\n", v.kind()),
        Format::Tsv => format!("kind\tvalue\n{}\t{v}\n", v.kind()),
    })
}

/// One literature comparison.
pub(crate) struct AuditItem {
    pub item: &'static str,
    pub computed: String,
    pub published: String,
    pub status: &'static str,
    pub ok: bool,
}

pub(crate) fn audit_items(ctx: &Context) -> Result<Vec<AuditItem>, Failure> {
    let z = ctx.space("Z")?;
    let q = ctx.space("Q")?;
    let l = z.ring().lattice_generator(1, 0);
    let mut items = Vec::new();

    let ch2 = z.tangent().chern_character(2).swap_remove(2);
    let sixth = l.pow(2).scale(&Rational::new(1, 6).unwrap());
    items.push(AuditItem {
        item: "ch2(Z)",
        computed: ch2.to_string(),
        published: l.pow(2).scale(&Rational::new(1, 2).unwrap()).to_string(),
        status: "corrected",
        ok: ch2 == sixth && ch2 == z.tangent().pontryagin().0.scale(&Rational::new(1, 2).unwrap()),
    });

    let zn = integral_numbers(z)?;
    let c15 = zn.get(ChernMonomial::C1Pow5).clone();
    items.push(AuditItem {
        item: "c1^5(Z)",
        computed: c15.to_string(),
        published: expected::Z_C1_POW5_PRINTED.to_string(),
        status: "typo",
        ok: c15 == expected::Z[1] && c15 != expected::Z_C1_POW5_PRINTED,
    });

    let p1z = z.tangent().pontryagin().0;
    let p1q = q.tangent().pontryagin().0;
    let (kz, kq) = (p1z.lattice_coordinates(2), p1q.lattice_coordinates(2));
    items.push(AuditItem {
        item: "p1 in H^4(;Z)",
        computed: format!(
            "p1(Z) = {p1z} = {} x generator; p1(Q) = {p1q} = {} x generator",
            kz[0], kq[0]
        ),
        published: "p1(Z) a generator; p1(Q) 3 x generator".into(),
        status: "consistent",
        ok: kz == [Rational::from(1)] && kq == [Rational::from(3)],
    });

    let cat = standard_catalogue()?;
    let s6 = cat.get("S6").expect("S6 is catalogued");
    let euler = s6
        .tangent()
        .c(3)
        .evaluate_top(s6.orientation())
        .map_err(|e| Failure::check(format!("S6: {e}")))?;
    let mult = universal_multiples().map_err(|e| Failure::check(format!("hirzebruch: {e}")))?;
    for (label, name, unit) in [
        ("P(TS6) = c3(S6) x unit", "PTS6", &mult.tangent),
        ("P(T*S6) = c3(S6) x unit", "PTstarS6", &mult.cotangent),
    ] {
        let nums = integral_numbers(ctx.space(name)?)?;
        let k = nums.multiple_of(unit);
        let fmt = |t: &ChernNumberTable| t.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        items.push(AuditItem {
            item: label,
            computed: format!("c3(S6) = {euler}; unit ({}); numbers ({})", fmt(unit), fmt(&nums)),
            published: "universal multiples of the Euler characteristic".into(),
            status: "consistent",
            ok: k.as_ref() == Some(&euler) && euler == 2,
        });
    }
    Ok(items)
}

pub(crate) fn audit(ctx: &Context) -> Result<String, Failure> {
    let items = audit_items(ctx)?;
    if let Some(bad) = items.iter().find(|i| !i.ok) {
        return Err(Failure::check(format!("audit {}: {}", bad.item, bad.computed)));
    }
    let mut t = Table::new(&["item", "computed", "published", "status"]);
    for i in items {
        t.push(vec![i.item.into(), i.computed, i.published, i.status.into()]);
    }
    Ok(t.render(ctx.format))
}
