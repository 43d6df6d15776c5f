mod common;

use common::Weights;
use num_traits::Zero;
use ratcubic::oracle::verify_conic_composition;
use ratcubic::{
    coefficients, conic_class, conic_implicit, conic_weights_for_points, conic_weights_with_ratio,
    implicitize, implicitize_any, int, ratio, BiPoly, ConicType, ControlPolygon, Error,
    ImplicitResult, Line, PhiSet, Point2, Scalar,
};

/// `sum b_i K_i` expanded without going through `implicitize`.
fn raw_power(p: &ControlPolygon) -> BiPoly {
    let b = coefficients(&p.profile());
    let c = &p.points;
    let l = |i: usize, j: usize| BiPoly::from_line(&Line::through(&c[i], &c[j]));
    let k = [
        l(0, 1).mul(&l(1, 2)).mul(&l(2, 3)),
        l(0, 1).mul(&l(1, 3).pow(2)),
        l(0, 2).pow(2).mul(&l(2, 3)),
        l(0, 3).pow(3),
    ];
    (0..4).fold(BiPoly::zero(), |acc, i| acc.add(&k[i].scale(&b[i])))
}

fn check_conic(p: &ControlPolygon) {
    let prof = p.profile();
    assert!(PhiSet::new(&prof).is_conic());
    assert!(coefficients(&prof).iter().all(Zero::is_zero));
    assert!(raw_power(p).is_zero());
    assert!(matches!(implicitize(p), Err(Error::ConicDegeneration)));
}

#[test]
fn conic_weight_family_degenerates() {
    let mut r = common::rng(41);
    for _ in 0..100 {
        let pts = common::polygon(&mut r, Weights::Unit).points;
        let rho = common::nonzero(&mut r);
        let w = conic_weights_with_ratio(&pts, &rho).unwrap();
        let p = ControlPolygon::new(pts, w);
        check_conic(&p);
        let q = conic_implicit(&p).unwrap();
        for _ in 0..5 {
            let t = common::wide_param(&mut r);
            if let Ok(x) = p.eval(&t) {
                assert!(q.eval(&x).is_zero());
            }
        }
    }
}

/// Moves `c3` along a vertical line until `lambda_0 = lambda_3`, making both
/// cube roots rational.
fn balanced(rng: &mut common::TestRng) -> Option<[Point2; 4]> {
    let mut pts = common::polygon(rng, Weights::Unit).points;
    let lam = |pts: &[Point2; 4]| {
        let l = ControlPolygon::with_unit_weights(pts.clone()).profile().lambdas;
        &l[0] - &l[3]
    };
    pts[3].y = int(0);
    let f0 = lam(&pts);
    pts[3].y = int(1);
    let f1 = lam(&pts);
    if f0 == f1 {
        return None;
    }
    pts[3].y = &f0 / (&f0 - &f1);
    ControlPolygon::with_unit_weights(pts.clone())
        .profile()
        .collinear_triples
        .is_empty()
        .then_some(pts)
}

#[test]
fn rational_cube_roots_give_exact_conic_weights() {
    let mut r = common::rng(42);
    let mut done = 0;
    while done < 50 {
        let Some(pts) = balanced(&mut r) else { continue };
        let cw = conic_weights_for_points(&pts).unwrap();
        let p = cw.exact_polygon(&pts).expect("rational cube roots");
        check_conic(&p);
        for k in 0..4 {
            assert!((ratcubic::scalar::to_f64(&p.weights[k]) - cw.weights[k]).abs() < 1e-12);
        }
        done += 1;
    }
}

#[test]
fn conic_composition_identity() {
    for p in common::polygons(43, 200, Weights::Signed) {
        assert!(verify_conic_composition(&p));
    }
    assert!(verify_conic_composition(&common::example5()));
    assert!(verify_conic_composition(&common::collinear_line()));
}

#[test]
fn parabola_and_ellipse() {
    let p = common::example4();
    let q = conic_implicit(&p).unwrap();
    // y^2 + 9(x - y/3)(x + y/3 - 1) = 9x^2 - 9x + 3y
    let want = [int(0), int(-9), int(3), int(9), int(0), int(0)];
    assert_eq!(q.power.coeffs, want);
    let c = conic_class(&p).unwrap();
    assert_eq!(c.class, ConicType::Parabola);
    assert_eq!(c.eta_sq_exact, Some(int(1)));

    let pts = common::ellipse_points();
    let c = conic_class(&ControlPolygon::with_unit_weights(pts)).unwrap();
    assert_eq!(c.c_star, Some(Point2::new(ratio(2, 5), ratio(1, 5))));
    assert_eq!(c.y1_sq, Some(ratio(16, 25)));
    assert_eq!(c.y2_sq, Some(ratio(9, 25)));
    assert_eq!(c.eta_sq_exact, Some(ratio(25, 48)));
    assert_eq!(c.class, ConicType::Ellipse);
}

fn piece_checks(p: &ControlPolygon, r: &mut common::TestRng) -> usize {
    let res = implicitize_any(p).unwrap_or_else(|e| panic!("{e} for {p:?}"));
    let pieces = res.pieces();
    let mut deepest = 0;
    for piece in pieces {
        deepest = deepest.max(piece.depth);
        let (a, b) = &piece.interval;
        for _ in 0..5 {
            let s = common::unit_param(r);
            let (Ok(x), Ok(y)) = (piece.polygon.eval(&s), p.eval(&(a + (b - a) * &s))) else {
                continue;
            };
            assert_eq!(x, y);
            assert!(piece.result.eval(&x).is_zero());
            for other in pieces {
                let (c, d) = &other.interval;
                if other.interval != piece.interval && *c <= a + (b - a) * &s && a + (b - a) * &s <= *d {
                    assert!(other.result.eval(&x).is_zero());
                }
            }
        }
    }
    if !pieces.is_empty() {
        assert_eq!(pieces[0].interval.0, Scalar::zero());
        assert_eq!(pieces[pieces.len() - 1].interval.1, int(1));
        for w in pieces.windows(2) {
            assert_eq!(w[0].interval.1, w[1].interval.0);
        }
    }
    deepest
}

#[test]
fn subdivided_pieces_vanish_on_the_curve() {
    let mut r = common::rng(44);
    let res = implicitize_any(&common::example5()).unwrap();
    assert!(matches!(res, ImplicitResult::Piecewise(_)));
    piece_checks(&common::example5(), &mut r);
}

#[test]
fn coincident_points_need_at_most_two_levels() {
    let pairs = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
    let mut r = common::rng(45);
    for &(i, j) in &pairs {
        for _ in 0..15 {
            let mut p = common::polygon(&mut r, Weights::Positive);
            p.points[j] = p.points[i].clone();
            assert!(piece_checks(&p, &mut r) <= 2, "c{i} = c{j}");
        }
    }
}

#[test]
fn three_collinear_points_resolve() {
    let mut r = common::rng(46);
    for k in 0..40 {
        let mut p = common::polygon(&mut r, Weights::Positive);
        // put one point on the line through two others
        let (a, b, m) = [(0, 3, 2), (0, 3, 1), (0, 2, 1), (1, 3, 2)][k % 4];
        let t = common::wide_param(&mut r);
        let (pa, pb) = (p.points[a].clone(), p.points[b].clone());
        p.points[m] = Point2::new(&pa.x + (&pb.x - &pa.x) * &t, &pa.y + (&pb.y - &pa.y) * &t);
        if p.profile().lambdas.iter().all(Zero::is_zero) || p.points[m] == pa || p.points[m] == pb {
            continue;
        }
        assert!(piece_checks(&p, &mut r) <= 2);
    }
}

#[test]
fn four_collinear_points_are_rejected() {
    assert!(matches!(
        implicitize_any(&common::collinear_line()),
        Err(Error::UnresolvableDegeneracy(_))
    ));
}
