use equiareal::curve::{pqr_from_quartic_point, to_quartic, to_weierstrass, CurveError, QuarticPoint};
use equiareal::param::{factor_a, factor_b};
use equiareal::{CurveLab, CurvePoint, Integer, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn lab() -> CurveLab {
    CurveLab::published()
}

fn combo(lab: &CurveLab, a: i64, b: i64, c: i64) -> CurvePoint {
    let e = lab.curve();
    let consts = lab.constants();
    let pa = e.mul(&Integer::from(a), &consts.g1);
    let pb = e.mul(&Integer::from(b), &consts.g2);
    let pc = e.mul(&Integer::from(c), &lab.base());
    e.add(&e.add(&pa, &pb), &pc)
}

#[test]
fn group_identity_and_inverse_on_published_points() {
    let lab = lab();
    let e = lab.curve();
    let g1 = &lab.constants().g1;
    assert_eq!(e.add(&lab.base(), &CurvePoint::Infinity), lab.base());
    assert_eq!(e.add(g1, &e.neg(g1)), CurvePoint::Infinity);
    let two_g1 = e.mul(&Integer::from(2), g1);
    assert!(!two_g1.is_infinity());
    assert!(e.contains(&two_g1));
    assert_eq!(two_g1, e.add(g1, g1));
}

#[test]
fn negated_first_generator_is_exceptional() {
    let lab = lab();
    let minus_g1 = lab.curve().neg(&lab.constants().g1);
    assert_eq!(to_quartic(&minus_g1), Err(CurveError::ExceptionalLocus));
}

#[test]
fn first_generator_maps_onto_forward_exceptional_locus() {
    let lab = lab();
    let q = to_quartic(&lab.constants().g1).unwrap();
    assert_eq!(q.x, Rational::new(2825.into(), 577.into()));
    assert!(lab.quartic().contains(&q));
    assert_eq!(to_weierstrass(&q), Err(CurveError::ExceptionalLocus));
}

#[test]
fn exceptional_loci() {
    let x = Rational::new(2825.into(), 577.into());
    let pt = QuarticPoint::new(x, Rational::from_integer(0.into()));
    assert_eq!(to_weierstrass(&pt), Err(CurveError::ExceptionalLocus));
    assert_eq!(to_quartic(&CurvePoint::Infinity), Err(CurveError::PointAtInfinity));
}

#[test]
fn y_negated_quartic_point_maps_onto_curve() {
    let lab = lab();
    let img = to_weierstrass(&lab.constants().known_quartic.negate_y()).unwrap();
    assert!(lab.curve().contains(&img));
    assert_eq!(to_quartic(&img).unwrap(), lab.constants().known_quartic.negate_y());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_law_closes_and_associates(a in -3i64..=3, b in -3i64..=3, c in -2i64..=2) {
        let lab = lab();
        let e = lab.curve();
        let x = combo(&lab, a, 0, 0);
        let y = combo(&lab, 0, b, 0);
        let z = combo(&lab, 0, 0, c);
        let left = e.add(&e.add(&x, &y), &z);
        let right = e.add(&x, &e.add(&y, &z));
        prop_assert!(e.contains(&left));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn birational_roundtrips_on_small_lattice() {
    let lab = lab();
    for (a, b, c) in small_lattice() {
        let pt = combo(&lab, a, b, c);
        match to_quartic(&pt) {
            Ok(q) => {
                assert!(lab.quartic().contains(&q));
                let forward_den = Rational::from_integer(577.into()) * &q.x - Rational::from_integer(2825.into());
                if forward_den.is_zero() {
                    assert_eq!(to_weierstrass(&q), Err(CurveError::ExceptionalLocus));
                    continue;
                }
                assert_eq!(to_weierstrass(&q).unwrap(), pt.clone());
                let (triple, t) = pqr_from_quartic_point(&q, &lab.constants().m).unwrap();
                let prod = factor_a(&triple.p, &triple.q, &triple.r) * factor_b(&triple.p, &triple.q, &triple.r);
                assert_eq!(&t * &t, -prod);
            }
            Err(CurveError::PointAtInfinity) => assert!(pt.is_infinity()),
            Err(CurveError::ExceptionalLocus) => {
                let CurvePoint::Affine { x, y } = &pt else { unreachable!() };
                let line = Rational::from_integer(140122182.into()) * x
                    - Rational::from_integer(23657.into()) * y
                    - Rational::from_integer(532179246194760i64.into());
                assert!(line.is_zero());
            }
            Err(e) => panic!("unexpected {e} at ({a}, {b}, {c})"),
        }
    }
}

fn small_lattice() -> impl Iterator<Item = (i64, i64, i64)> {
    (-2i64..=2).flat_map(|a| (-2i64..=2).flat_map(move |b| (-1i64..=1).map(move |c| (a, b, c))))
}
