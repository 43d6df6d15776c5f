mod common;

use common::Weights;
use num_bigint::BigInt;
use num_traits::Zero;
use ratcubic::oracle::{
    compare, compose_line, cross_check, independence_determinant, independence_row_factor,
    limiting_basis_check, resultant_implicitize, verify_vanishing_identity, UniPoly,
};
use ratcubic::{implicitize, int, implicitize_any, PhiSet, Scalar};

#[test]
fn resultant_agrees_with_the_basis_method() {
    for p in common::polygons(51, 40, Weights::Signed) {
        let v = cross_check(&p).unwrap();
        assert!(v.matched, "{:?}", v.residual);
    }
}

#[test]
fn resultant_on_the_parabola_is_not_cubic() {
    let p = common::example4();
    match resultant_implicitize(&p) {
        Ok(q) => {
            let conic = implicitize_any(&p).unwrap().power().unwrap();
            assert!(q.total_degree() <= Some(2));
            assert!(compare(&q, &conic).matched);
        }
        Err(e) => assert!(matches!(e, ratcubic::Error::DegenerateResultant), "{e}"),
    }
}

#[test]
fn line_compositions_agree() {
    for p in common::polygons(52, 60, Weights::Signed) {
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    let c = compose_line(&p, i, j);
                    assert!(c.consistent(), "({i},{j})");
                    assert!(c.bernstein.degree() <= Some(3));
                    assert!(c.bernstein.coeffs()[i].is_zero() && c.bernstein.coeffs()[j].is_zero());
                }
            }
        }
    }
}

#[test]
fn vanishing_identity_holds() {
    let mut n = 0;
    for p in common::polygons(53, 200, Weights::Signed) {
        if implicitize(&p).is_ok() {
            assert!(verify_vanishing_identity(&p));
            n += 1;
        }
    }
    assert_eq!(n, 200);
    assert!(verify_vanishing_identity(&common::example1()));
}

#[test]
fn r_bernstein_matches_phi() {
    for p in common::polygons(54, 50, Weights::Signed) {
        let ps = PhiSet::new(&p.profile());
        let r = UniPoly::bernstein(ps.r_bernstein().to_vec());
        let m = UniPoly::monomial(ps.r_monomial().to_vec());
        assert!(r.same_poly(&m));
        assert_eq!(r.coeffs()[0], ps.big_phi2);
        assert_eq!(r.coeffs()[2], ps.big_phi1);
    }
}

#[test]
fn independence_determinant_is_nonzero() {
    let mut checked = 0;
    for p in common::polygons(55, 60, Weights::Unit) {
        let prof = p.profile();
        let Ok(f) = independence_row_factor(&prof) else { continue };
        let d = independence_determinant(&p).unwrap();
        let l = &prof.lambdas;
        let l5 = |x: &Scalar| x * x * x * x * x;
        assert!(!d.is_zero());
        assert_eq!(d, f * l5(&l[0]) * l5(&l[3]));
        checked += 1;
    }
    assert!(checked > 50);
    assert!(independence_determinant(&common::example5()).is_err());
}

fn two_pow(k: u32) -> Scalar {
    Scalar::from_integer(BigInt::from(2u8).pow(k))
}

#[test]
fn limits_tighten_as_weights_grow() {
    let mut r = common::rng(56);
    for _ in 0..5 {
        let p = common::polygon(&mut r, Weights::Unit);
        for i in 0..4 {
            let ratios: Vec<Scalar> = [10, 20, 30, 40]
                .iter()
                .map(|&k| limiting_basis_check(&p, i, &two_pow(k)).unwrap().max_off_ratio)
                .collect();
            for w in ratios.windows(2) {
                assert!(w[1] < w[0], "K{i}: {ratios:?}");
            }
        }
    }
}

#[test]
fn limit_normalization_for_k1() {
    let p = common::example1();
    let w = int(1_000_000);
    let c = limiting_basis_check(&p, 1, &w).unwrap();
    let prof = p.profile();
    let l = &prof.lambdas;
    let w4 = &w * &w * &w * &w;
    assert_eq!(c.normalized[1], int(9) * &l[1] * &l[1] * &l[1] * &l[3] / w4 - int(27) * prof.big_lambda());
    let bound = Scalar::new(1.into(), BigInt::from(10u8).pow(20));
    assert!(c.max_off_ratio < bound);
}
