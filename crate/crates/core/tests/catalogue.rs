use g2chern::arith::Rational;
use g2chern::catalogue::{self, expected, flip_square, match_up_to_symmetry, search_vertical_multiplier};
use g2chern::charclass::{chern_numbers, flip, ChernNumberTable};
use g2chern::ring::RingHandle;

#[test]
fn catalogue_builds_and_tables_match() {
    let cat = catalogue::standard().unwrap();
    for name in catalogue::FIVE_FOLDS {
        let s = cat.get(name).unwrap();
        let t = chern_numbers(s).unwrap();
        assert_eq!(
            t,
            ChernNumberTable::from_values(expected::column(name).unwrap()),
            "{name}"
        );
    }
}

#[test]
fn symmetry_matches() {
    let cat = catalogue::standard().unwrap();
    let q = cat.get("Q").unwrap();
    let m = match_up_to_symmetry(q, q).unwrap();
    assert!(m.matched && m.orientation_agrees && m.generator_sign == 1 && !m.globally_conjugated);
    let x = cat.get("X").unwrap();
    assert!(!match_up_to_symmetry(q, x).unwrap().matched);

    let pts6 = cat.get("PTS6").unwrap();
    let r = pts6.ring();
    let y = r.generator("y").unwrap();
    let vertical = g2chern::charclass::TotalClass::new(
        &(&r.one() + &y.scale(&Rational::from(3))) + &y.pow(2).scale(&Rational::from(3)),
        2,
    )
    .unwrap();
    let flipped = flip(pts6, &vertical).unwrap();
    let m = match_up_to_symmetry(&flipped, cat.get("PTstarS6").unwrap()).unwrap();
    assert!(m.matched && m.orientation_agrees);
    assert_eq!(m.generator_sign, -1);
}

#[test]
fn square_commutes() {
    let cat = catalogue::standard().unwrap();
    let h = cat.get("Q").unwrap().ring().generator("h").unwrap();
    let sq = flip_square(cat, &h).unwrap();
    assert!(sq.commutes());
    for c in &sq.corners {
        println!(
            "{}: {:?}",
            c.corner,
            c.matches.iter().map(|m| m.to_string()).collect::<Vec<_>>()
        );
    }
    assert!(sq.all_corners_matched());
    let outcomes = search_vertical_multiplier(cat, &[-3, -2, -1, 0, 1, 2, 3]);
    let ok: Vec<i64> = outcomes.iter().filter(|o| o.accepted()).map(|o| o.mu).collect();
    assert_eq!(ok, vec![1]);
}

#[test]
fn hirzebruch_multiples() {
    let u = catalogue::universal_multiples().unwrap();
    assert_eq!(u.tangent, ChernNumberTable::from_values(expected::PTS6_PER_UNIT));
    assert_eq!(u.cotangent, ChernNumberTable::from_values(expected::PTSTAR_S6_PER_UNIT));
}
