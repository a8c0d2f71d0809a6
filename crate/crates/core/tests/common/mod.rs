#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use g2chern::arith::{frac, Rational};
use g2chern::catalogue::{self, FIVE_FOLDS};
use g2chern::charclass::{chern_numbers, flip, ChernMonomial, Space, TotalClass};
use g2chern::ring::{Orientation, Ring, RingElement, RingHandle};

fn ring(i: usize) -> Arc<Ring> {
    let names = ["Q", "PTS6", "Z", "CP6", "S6"];
    catalogue::standard()
        .unwrap()
        .get(names[i % names.len()])
        .unwrap()
        .ring()
        .clone()
}

fn element(ring: &Arc<Ring>, k: usize, raw: &mut impl Iterator<Item = (i64, i64)>) -> RingElement {
    (0..ring.dimension(k)).fold(ring.zero(), |acc, i| {
        let (n, d) = raw.next().unwrap();
        &acc + &ring.basis_element(k, i).scale(&frac(n, d))
    })
}

/// A genuine class of the given rank with coefficients drawn from `raw`.
fn class(ring: &Arc<Ring>, rank: usize, raw: &[(i64, i64)]) -> TotalClass {
    let mut it = raw.iter().copied().cycle();
    let top = rank.min(ring.top_index());
    let total = (1..=top).fold(ring.one(), |acc, k| &acc + &element(ring, k, &mut it));
    TotalClass::new(total, rank as i64).unwrap()
}

fn raw() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 1..24)
}

fn same(a: &TotalClass, b: &TotalClass) -> bool {
    a.total() == b.total() && a.rank() == b.rank()
}

fn td5_formula(c: &TotalClass) -> RingElement {
    let c = |k| c.c(k);
    let sum = &(&(&(&c(1).pow(2) * &c(3)) - &(&c(1).pow(3) * &c(2))) + &(&c(1) * &c(2).pow(2)).scale(&frac(3, 1)))
        - &(&c(1) * &c(4));
    sum.scale(&frac(1, 1440))
}

fn euler(space: &Space) -> Rational {
    space
        .tangent()
        .c(space.ring().top_index())
        .evaluate_top(space.orientation())
        .unwrap()
}

/// Runs `test` on `cases` random inputs, shrinking on failure.
fn run<S: Strategy>(
    cases: u32,
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(strategy, test).map_err(|e| e.to_string())
}

pub fn whitney_quotient_round_trip(cases: u32) -> Result<(), String> {
    run(
        cases,
        &(0usize..5, 0usize..6, 0usize..6, raw(), raw()),
        |(r, ra, rb, a, b)| {
            let ring = ring(r);
            let (a, b) = (class(&ring, ra, &a), class(&ring, rb, &b));
            let w = a.whitney(&b).unwrap();
            prop_assert!(w.is_genuine());
            prop_assert!(same(&w.series_quotient(&b).unwrap(), &a));
            prop_assert!(same(&w.series_quotient(&a).unwrap(), &b));
            Ok(())
        },
    )
}

pub fn conjugation_is_an_involution(cases: u32) -> Result<(), String> {
    run(
        cases,
        &(0usize..5, 0usize..6, 0usize..6, raw(), raw()),
        |(r, ra, rb, a, b)| {
            let ring = ring(r);
            let (a, b) = (class(&ring, ra, &a), class(&ring, rb, &b));
            prop_assert!(same(&a.conjugate().conjugate(), &a));
            prop_assert!(same(
                &a.whitney(&b).unwrap().conjugate(),
                &a.conjugate().whitney(&b.conjugate()).unwrap()
            ));
            for k in 0..=ring.top_index() {
                prop_assert_eq!(a.conjugate().c(k), a.c(k).scale(&Rational::sign_power(k)));
            }
            Ok(())
        },
    )
}

pub fn twist_line_inverse(cases: u32) -> Result<(), String> {
    run(cases, &(0usize..5, 0usize..6, raw(), raw()), |(r, ra, a, t)| {
        let ring = ring(r);
        let a = class(&ring, ra, &a);
        let t = element(&ring, 1, &mut t.iter().copied().cycle());
        let back = a.twist_line(&t).unwrap().twist_line(&-t.clone()).unwrap();
        prop_assert!(same(&back, &a));
        let line = TotalClass::trivial(&ring, 1).twist_line(&t).unwrap();
        prop_assert_eq!(line.total(), &(&ring.one() + &t));
        Ok(())
    })
}

pub fn todd_degree_five(cases: u32) -> Result<(), String> {
    run(cases, &(0usize..3, raw(), raw()), |(r, a, b)| {
        let ring = ring(r);
        let a = class(&ring, 5, &a);
        prop_assert_eq!(&a.todd()[5], &td5_formula(&a));
        let b = class(&ring, 2, &b);
        let (ta, tb, tab) = (a.todd(), b.todd(), a.whitney(&b).unwrap().todd());
        let sum = |v: &[RingElement]| v.iter().fold(ring.zero(), |x, y| &x + y);
        prop_assert_eq!(sum(&tab), &sum(&ta) * &sum(&tb));
        Ok(())
    })
}

pub fn newton_round_trip(cases: u32) -> Result<(), String> {
    run(
        cases,
        &(0usize..5, 0usize..7, 0usize..4, raw(), raw()),
        |(r, ra, rb, a, b)| {
            let ring = ring(r);
            let (a, b) = (class(&ring, ra, &a), class(&ring, rb, &b));
            let s = a.power_sums();
            prop_assert!(same(&TotalClass::from_power_sums(&s, a.rank()).unwrap(), &a));
            let sab = a.whitney(&b).unwrap().power_sums();
            let sb = b.power_sums();
            for k in 0..s.len() {
                prop_assert_eq!(&sab[k], &(&s[k] + &sb[k]));
            }
            Ok(())
        },
    )
}

pub fn duality_pairing_is_integral(cases: u32) -> Result<(), String> {
    run(
        cases,
        &(
            0usize..5,
            0usize..7,
            prop::collection::vec(-5i64..=5, 8),
            prop::collection::vec(-5i64..=5, 8),
        ),
        |(r, k, xs, ys)| {
            let ring = ring(r);
            let n = ring.top_index();
            let k = k % (n + 1);
            let lattice = |deg: usize, cs: &[i64]| {
                (0..ring.dimension(deg)).fold(ring.zero(), |acc, i| {
                    &acc + &ring.lattice_generator(deg, i).scale(&Rational::from(cs[i % cs.len()]))
                })
            };
            let (a, b) = (lattice(k, &xs), lattice(n - k, &ys));
            prop_assert!(a.is_integral() && b.is_integral());
            let v = (&a * &b).evaluate_top(Orientation::Positive).unwrap();
            prop_assert!(v.is_integer());
            Ok(())
        },
    )
}

pub fn flips_preserve_euler_number(cases: u32) -> Result<(), String> {
    run(
        cases,
        &(0usize..6, prop::collection::vec((0u8..3, -2i64..=2), 1..6)),
        |(start, steps)| {
            let cat = catalogue::standard().unwrap();
            let mut space = cat.get(FIVE_FOLDS[start]).unwrap().clone();
            for (op, mu) in steps {
                let g = space.ring().lattice_generator(1, 0);
                let fiber = match op {
                    0 => {
                        space = space.conjugate();
                        continue;
                    }
                    1 => TotalClass::new(&space.ring().one() + &g.scale(&Rational::from(mu)), 1).unwrap(),
                    _ => {
                        let gg = &g * &g;
                        let total =
                            &(&space.ring().one() + &g.scale(&Rational::from(3 * mu))) + &gg.scale(&Rational::from(3));
                        TotalClass::new(total, 2).unwrap()
                    }
                };
                if let Ok(s) = flip(&space, &fiber) {
                    space = s;
                }
                prop_assert_eq!(euler(&space), Rational::from(6));
            }
            let nums = chern_numbers(&space).unwrap();
            prop_assert_eq!(nums.get(ChernMonomial::C5), &Rational::from(6));
            prop_assert_eq!(chern_numbers(&space.conjugate()).unwrap(), nums);
            Ok(())
        },
    )
}

pub fn chern_numbers_invariant_under_conjugation(cases: u32) -> Result<(), String> {
    run(cases, &(0usize..3, raw(), any::<bool>()), |(r, a, negative)| {
        let ring = ring(r);
        let o = if negative {
            Orientation::Negative
        } else {
            Orientation::Positive
        };
        let space = Space::new("R", class(&ring, 5, &a), o, "random");
        let conj = space.conjugate();
        prop_assert_eq!(conj.orientation(), o.flip());
        prop_assert_eq!(chern_numbers(&conj).unwrap(), chern_numbers(&space).unwrap());
        prop_assert_eq!(euler(&conj), euler(&space));
        Ok(())
    })
}

/// Every property with its name.
pub type Suite = fn(u32) -> Result<(), String>;

pub const SUITES: [(&str, Suite); 8] = [
    ("whitney_quotient_round_trip", whitney_quotient_round_trip),
    ("conjugation_is_an_involution", conjugation_is_an_involution),
    ("twist_line_inverse", twist_line_inverse),
    ("todd_degree_five", todd_degree_five),
    ("newton_round_trip", newton_round_trip),
    ("duality_pairing_is_integral", duality_pairing_is_integral),
    ("flips_preserve_euler_number", flips_preserve_euler_number),
    (
        "chern_numbers_invariant_under_conjugation",
        chern_numbers_invariant_under_conjugation,
    ),
];

pub fn catalogued_rings_are_unimodular() {
    for s in catalogue::standard().unwrap().spaces() {
        for k in 0..=s.ring().top_index() {
            let d = s.ring().duality_determinant(k).unwrap();
            assert!(d == 1 || d == -1, "{} degree {k}: {d}", s.name());
        }
    }
}

pub fn catalogued_five_folds() {
    let cat = catalogue::standard().unwrap();
    for name in FIVE_FOLDS {
        let s = cat.get(name).unwrap();
        assert_eq!(euler(s), Rational::from(6), "{name}");
        assert_eq!(
            chern_numbers(&s.conjugate()).unwrap(),
            chern_numbers(s).unwrap(),
            "{name}"
        );
        let t = s.tangent();
        assert!(same(&TotalClass::from_power_sums(&t.power_sums(), 5).unwrap(), t));
        assert!(same(&t.conjugate().conjugate(), t));
        assert_eq!(t.todd()[5], td5_formula(t), "{name}");
    }
}

pub fn todd_degree_five_universal() {
    let u = g2chern::charclass::universal_chern_ring(5);
    assert_eq!(g2chern::charclass::todd_polynomial(5, 5), td5_formula(&u.class));
}
