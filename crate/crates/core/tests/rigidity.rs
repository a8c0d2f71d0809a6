use g2chern::arith::{frac, Rational};
use g2chern::catalogue;
use g2chern::charclass::chern_numbers;
use g2chern::rigidity::{
    c2_coefficient, candidate_set, case_check, published_differences, reconstruct, scan, scan_candidates, FailReason,
    RigidityError, TopologicalInput, Verdict,
};
use g2chern::ring::RingHandle;

fn standard() -> TopologicalInput {
    TopologicalInput::standard().unwrap()
}

#[test]
fn standard_candidates() {
    let c = candidate_set(&standard());
    assert_eq!(c.candidates, [1, 3, -1, -3, -5, -9, -15, -45]);
    let pruned: Vec<i64> = c.pruned.iter().map(|p| p.0).collect();
    assert!(pruned.contains(&5) && pruned.contains(&2) && pruned.contains(&9));
}

#[test]
fn spin_admits_even_divisors() {
    let t = TopologicalInput {
        spin: true,
        ..standard()
    };
    let c = candidate_set(&t).candidates;
    for d in [2, -2, -6, -10, -18, -30, -90] {
        assert!(c.contains(&d), "{d}");
    }
    let odd: Vec<i64> = c.iter().copied().filter(|d| d % 2 != 0).collect();
    assert_eq!(odd, [1, 3, -1, -3, -5, -9, -15, -45]);
}

#[test]
fn small_c1c4() {
    let t = TopologicalInput {
        c1c4_value: 6,
        ..standard()
    };
    assert_eq!(candidate_set(&t).candidates, [1, 3, -1, -3]);
}

#[test]
fn survivor_is_three() {
    let t = standard();
    let r = scan(&t).unwrap();
    assert_eq!(r.cases.len(), 8);
    assert_eq!(r.survivors, [3]);
    let case = &r.cases[1];
    assert_eq!((case.d, case.verdict), (3, Verdict::Pass));
    assert_eq!(case.c2.lattice_coordinates(2), [Rational::from(13)]);
    assert_eq!(case.c3.lattice_coordinates(3), [Rational::from(22)]);
    assert_eq!(case.c4.lattice_coordinates(4), [Rational::from(30)]);
    assert_eq!(case.todd_rhs, case.pontryagin_lhs);
    assert_eq!(case.todd_rhs, Rational::from(594));

    let z = reconstruct(case, &t).unwrap();
    let cat = catalogue::standard().unwrap().get("Z").unwrap();
    for k in 0..=5 {
        assert_eq!(z.tangent().c(k).part(k), cat.tangent().c(k).part(k));
    }
    let nums: Vec<i64> = chern_numbers(&z)
        .unwrap()
        .values()
        .iter()
        .map(|v| v.to_i64().unwrap())
        .collect();
    assert_eq!(nums, [6, 4374, 2106, 594, 90, 1014, 286]);
}

#[test]
fn failure_reasons() {
    let t = standard();
    let reason = |d| case_check(d, &t).unwrap().fail_reason();
    use FailReason::*;
    assert_eq!(reason(1), Some(ToddVsPontryaginMismatch));
    assert_eq!(reason(-1), Some(ToddVsPontryaginMismatch));
    assert_eq!(reason(-3), Some(ToddVsPontryaginMismatch));
    assert_eq!(reason(-5), Some(ToddVsPontryaginMismatch));
    assert_eq!(reason(-9), Some(Mod27Obstruction));
    assert_eq!(reason(-45), Some(Mod27Obstruction));
    assert_eq!(reason(-15), Some(IntegralityFailure));
    assert_eq!(reason(3), None);
    assert_eq!(reason(5), Some(IndexBoundExcluded));

    let m15 = case_check(-15, &t).unwrap();
    assert_eq!(m15.c1c3.lattice_coordinates(4), [Rational::from(113562)]);
    assert!(!m15.c3.is_integral());

    let m1 = case_check(1, &t).unwrap();
    assert_eq!(
        (m1.pontryagin_lhs.clone(), m1.todd_rhs.clone()),
        (Rational::from(90), Rational::from(1530))
    );
    assert!(matches!(case_check(2, &t), Err(RigidityError::NotACandidate(2))));
    assert!(matches!(case_check(7, &t), Err(RigidityError::NotACandidate(7))));
}

#[test]
fn every_pass_is_consistent() {
    let t = TopologicalInput {
        spin: true,
        kobayashi_ochiai: false,
        ..standard()
    };
    for case in scan(&t).unwrap().cases {
        if case.verdict == Verdict::Pass {
            assert_eq!(case.todd_rhs, case.pontryagin_lhs);
            for (k, c) in [(2, &case.c2), (3, &case.c3), (4, &case.c4)] {
                assert!(c.is_integral(), "d = {} c{k}", case.d);
            }
        } else {
            assert!(!case.failures.is_empty());
        }
    }
}

#[test]
fn perturbed_p1() {
    let t = standard();
    let l = t.ring.generator("L").unwrap();
    let bad = TopologicalInput { p1: l.pow(2), ..t };
    match scan(&bad) {
        Err(RigidityError::InvalidInput(_)) => {}
        Ok(r) => assert!(r.survivors.is_empty(), "{:?}", r.survivors),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn order_independent() {
    let t = standard();
    let base = scan_candidates(&t, &[1, 3, -1, -3, -5, -9, -15, -45]).unwrap();
    let perm = scan_candidates(&t, &[-45, 3, -9, 1, -15, -1, -5, -3]).unwrap();
    assert_eq!(base.1, perm.1);
    assert_eq!(format!("{:?}", base.0), format!("{:?}", perm.0));
    assert_eq!(format!("{:?}", scan(&t).unwrap().cases), format!("{:?}", base.0));
}

#[test]
fn c2_half_integrality() {
    for d in -100i64..=100 {
        let c = c2_coefficient(d);
        assert_eq!(c, frac(3 * d * d - 1, 2));
        assert_eq!(c.is_integer(), d % 2 != 0, "{d}");
    }
}

#[test]
fn published_figures_logged() {
    let r = scan(&standard()).unwrap();
    let diffs = published_differences(&r.cases);
    assert_eq!(diffs.len(), 3);
    assert!(diffs[2].contains("-414") && diffs[2].contains("-411") && diffs[2].contains("2286"));
}
