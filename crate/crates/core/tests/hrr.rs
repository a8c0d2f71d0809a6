use g2chern::arith::{frac, Rational, UniPoly};
use g2chern::catalogue;
use g2chern::riemann_roch::{
    compare_polys, compare_with_product_form, euler_characteristic_at, extract_chern_data, hilbert_polynomial,
    product_form, Polarization, RrError,
};
use g2chern::ring::{Orientation, RingHandle};

fn polarized(name: &str, gen: &str) -> Polarization {
    let s = catalogue::standard().unwrap().get(name).unwrap();
    Polarization::new(s, s.ring().generator(gen).unwrap()).unwrap()
}

fn z_poly() -> UniPoly {
    UniPoly::new(
        [(1, 1), (211, 60), (39, 8), (10, 3), (9, 8), (3, 20)]
            .iter()
            .map(|&(a, b)| frac(a, b))
            .collect(),
    )
}

#[test]
fn z_hilbert_polynomial() {
    let pol = polarized("Z", "L");
    let p = hilbert_polynomial(&pol).unwrap();
    assert_eq!(p, z_poly());
    assert!(compare_with_product_form(&p).equal);
    assert_eq!(p.eval(&Rational::zero()), Rational::one());
    let td5 = pol.space().tangent().todd()[5]
        .evaluate_top(Orientation::Positive)
        .unwrap();
    assert_eq!(p.coeff(0), td5);
    assert_eq!(p.eval(&Rational::one()), Rational::from(3 * 8 * 5 * 7 * 2 / 120));
    for r in 0..=10 {
        let v = p.eval(&Rational::from(r));
        assert!(v.is_integer());
        assert_eq!(v, euler_characteristic_at(&pol, r).unwrap());
    }
}

#[test]
fn product_form_expansion() {
    let f = product_form();
    assert_eq!(f, z_poly());
    assert_eq!(f.coeff(5), frac(18, 120));
}

#[test]
fn perturbed_leading_coefficient() {
    let mut c = z_poly().coeffs().to_vec();
    c[5] = frac(1, 8);
    let cmp = compare_with_product_form(&UniPoly::new(c));
    assert!(!cmp.equal);
    assert_eq!(cmp.diffs, vec![(5, frac(1, 8), frac(3, 20))]);
}

#[test]
fn extracted_numbers() {
    let pol = polarized("Z", "L");
    let d = extract_chern_data(&product_form(), &pol).unwrap();
    assert_eq!(d.index, Rational::from(3));
    assert_eq!(d.c1_pow5, Rational::from(4374));
    assert_eq!(d.c1_cube_c2, Rational::from(2106));
    assert!(d.r4_consistent);
    assert_eq!(
        z_poly().coeff(4).checked_div(&z_poly().coeff(5)).unwrap(),
        frac(120 * 3, 48)
    );
}

/// `chi(Q, O(r)) = C(r+6, 6) - C(r+4, 6)`.
fn quadric_chi(r: i64) -> Rational {
    let binom6 = |n: i64| {
        let mut v = Rational::one();
        for i in 0..6 {
            v *= Rational::from(n - i);
        }
        v.div_int(720)
    };
    binom6(r + 6) - binom6(r + 4)
}

#[test]
fn quadric_hilbert_polynomial() {
    let pol = polarized("Q", "h");
    let p = hilbert_polynomial(&pol).unwrap();
    for r in -10..=10 {
        let v = p.eval(&Rational::from(r));
        assert!(v.is_integer(), "{r}");
        assert_eq!(v, quadric_chi(r), "{r}");
    }
    let d = extract_chern_data(&p, &pol).unwrap();
    assert_eq!((d.index, d.c1_pow5), (Rational::from(5), Rational::from(6250)));
    assert!(compare_polys(&p, &p).equal);
}

#[test]
fn polarization_must_be_primitive() {
    let z = catalogue::standard().unwrap().get("Z").unwrap();
    let l = z.ring().generator("L").unwrap();
    assert!(matches!(
        Polarization::new(z, l.scale(&Rational::from(2))),
        Err(RrError::NotALatticeGenerator(_))
    ));
    assert!(Polarization::new(z, l.pow(2)).is_err());
}
