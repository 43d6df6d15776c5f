mod common;

use common::Weights;
use num_traits::Zero;
use proptest::prelude::*;
use ratcubic::{int, ratio, ControlPolygon, Line, Point2, Scalar};

fn arb_point() -> impl Strategy<Value = Point2> {
    (-30i64..=30, 1i64..=9, -30i64..=30, 1i64..=9)
        .prop_map(|(a, b, c, d)| Point2::new(ratio(a, b), ratio(c, d)))
}

fn arb_polygon() -> impl Strategy<Value = ControlPolygon> {
    (
        [arb_point(), arb_point(), arb_point(), arb_point()],
        [1i64..=9, 1i64..=9, 1i64..=9, 1i64..=9],
    )
        .prop_map(|(pts, w)| ControlPolygon::new(pts, w.map(int)))
}

proptest! {
    #[test]
    fn lambdas_sum_to_zero(p in arb_polygon()) {
        let l = p.profile().lambdas;
        prop_assert!((&l[0] + &l[1] + &l[2] + &l[3]).is_zero());
    }

    #[test]
    fn lambda_triple_is_alternating(p in arb_polygon(), i in 0usize..4, j in 0usize..4, k in 0usize..4) {
        let v = p.lambda_triple(i, j, k);
        prop_assert_eq!(&v, &-p.lambda_triple(j, i, k));
        prop_assert_eq!(&v, &-p.lambda_triple(i, k, j));
        prop_assert_eq!(&v, &-p.lambda_triple(k, j, i));
        if i == j || j == k || i == k {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn line_normal_has_edge_length(p in arb_polygon(), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let c = &p.points;
        let l = Line::through(&c[i], &c[j]);
        prop_assert_eq!(l.gradient_norm_sq(), c[i].dist_sq(&c[j]));
        prop_assert!(l.eval(&c[i]).is_zero() && l.eval(&c[j]).is_zero());
    }
}

#[test]
fn named_lambdas() {
    let p = common::example1();
    let l = p.profile().lambdas;
    assert_eq!(l, [int(1), int(-1), int(1), int(-1)]);
    assert_eq!(l[0], p.lambda_triple(3, 2, 1));
    assert_eq!(l[3], p.lambda_triple(0, 1, 2));
}

#[test]
fn end_points_are_interpolated() {
    let mut r = common::rng(11);
    for _ in 0..50 {
        let p = common::polygon(&mut r, Weights::Signed);
        assert_eq!(p.eval(&Scalar::zero()).unwrap(), p.points[0]);
        assert_eq!(p.eval(&int(1)).unwrap(), p.points[3]);
    }
}

#[test]
fn subdivision_halves_follow_the_parent() {
    let mut r = common::rng(12);
    for _ in 0..100 {
        let p = common::polygon(&mut r, Weights::Positive);
        let t0 = common::unit_param(&mut r);
        let (left, right) = p.subdivide(&t0).unwrap();
        for _ in 0..5 {
            let s = common::unit_param(&mut r);
            let on_left = &s * &t0;
            let on_right = &t0 + (int(1) - &t0) * &s;
            assert_eq!(left.eval(&s).unwrap(), p.eval(&on_left).unwrap());
            assert_eq!(right.eval(&s).unwrap(), p.eval(&on_right).unwrap());
        }
        assert_eq!(left.points[3], right.points[0]);
    }
}

#[test]
fn reparametrization_follows_the_parent() {
    let mut r = common::rng(13);
    let mut checked = 0;
    while checked < 50 {
        let p = common::polygon(&mut r, Weights::Signed);
        let (a, b) = (common::wide_param(&mut r), common::wide_param(&mut r));
        if a == b {
            continue;
        }
        let Ok(q) = p.reparametrize(&a, &b) else { continue };
        for _ in 0..5 {
            let s = common::wide_param(&mut r);
            let t = &a + (&b - &a) * &s;
            match (q.eval(&s), p.eval(&t)) {
                (Ok(x), Ok(y)) => assert_eq!(x, y),
                (Err(_), Err(_)) => {}
                other => panic!("mismatch {other:?}"),
            }
        }
        checked += 1;
    }
}

#[test]
fn affine_maps_scale_lambdas_by_determinant() {
    let mut r = common::rng(14);
    for _ in 0..40 {
        let p = common::polygon(&mut r, Weights::Signed);
        let m = common::affine(&mut r);
        let c = m.det();
        let before = p.profile().lambdas;
        let after = p.map_points(&m).profile().lambdas;
        for k in 0..4 {
            assert_eq!(after[k], &before[k] * &c);
        }
    }
}

#[test]
fn homogeneous_weights_scale_out() {
    let mut r = common::rng(15);
    let p = common::polygon(&mut r, Weights::Positive);
    let q = p.scale_weights(&ratio(7, 3));
    for _ in 0..5 {
        let t = common::unit_param(&mut r);
        assert_eq!(p.eval(&t).unwrap(), q.eval(&t).unwrap());
    }
}
