use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{ControlPolygon, GeometryProfile, Line, Point2};
use crate::implicit::{coefficients, BASIS_FACTORS};
use crate::scalar::{int, Scalar};

use super::resultant::det;

fn basis_row(p: &ControlPolygon, x: &Point2) -> Vec<Scalar> {
    BASIS_FACTORS
        .iter()
        .map(|fs| fs.iter().map(|&(i, j)| Line::through(&p.points[i], &p.points[j]).eval(x)).product())
        .collect()
}

/// Determinant of the basis functions evaluated at `c1, c2, m1, m2`.
pub fn independence_determinant(p: &ControlPolygon) -> Result<Scalar> {
    let d = p.diagonal_points()?;
    let (Some(m1), Some(m2)) = (d.m1, d.m2) else {
        return Err(Error::Unsupported("m1 or m2 lies at infinity"));
    };
    let rows: Vec<Vec<Scalar>> = [&p.points[1], &p.points[2], &m1, &m2]
        .into_iter()
        .map(|x| basis_row(p, x))
        .collect();
    Ok(det(&rows))
}

/// Factor `f` with `independence_determinant = f * lambda_0^5 lambda_3^5`.
pub fn independence_row_factor(profile: &GeometryProfile) -> Result<Scalar> {
    let l = &profile.lambdas;
    let s1 = &l[0] + &l[1];
    let s2 = &l[0] + &l[2];
    if s1.is_zero() || s2.is_zero() {
        return Err(Error::Unsupported("m1 or m2 lies at infinity"));
    }
    let p4 = |x: &Scalar| x * x * x * x;
    let p3 = |x: &Scalar| x * x * x;
    Ok(-(p4(&l[1]) * p4(&l[2])) / (p3(&s1) * p3(&s2)))
}

/// Weights whose limit as `w` grows isolates the basis function `i`.
pub fn limiting_weights(i: usize, w: &Scalar) -> [Scalar; 4] {
    let inv = Scalar::one() / w;
    let (hi, lo) = (w.clone(), inv);
    match i {
        0 => [lo.clone(), hi.clone(), hi, lo],
        1 => [lo.clone(), hi.clone(), lo, hi],
        2 => [hi.clone(), lo.clone(), hi, lo],
        3 => [hi.clone(), lo.clone(), lo, hi],
        _ => panic!("basis index out of range"),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitCheck {
    pub target: usize,
    /// Coefficients divided by `w^4`.
    pub normalized: [Scalar; 4],
    /// Largest `|b_j / b_target|` over `j != target`.
    pub max_off_ratio: Scalar,
}

pub fn limiting_basis_check(p: &ControlPolygon, i: usize, w: &Scalar) -> Result<LimitCheck> {
    let base = p.profile();
    if !base.collinear_triples.is_empty() {
        return Err(Error::CollinearInput(base.collinear_triples));
    }
    if !w.is_positive() {
        return Err(Error::DegenerateInput("limit weight must be positive"));
    }
    let q = ControlPolygon::new(p.points.clone(), limiting_weights(i, w));
    let w4 = w * w * w * w;
    let normalized = coefficients(&q.profile()).map(|b| b / &w4);
    if normalized[i].is_zero() {
        return Err(Error::DegenerateInput("target coefficient vanishes"));
    }
    let max_off_ratio = (0..4)
        .filter(|&j| j != i)
        .map(|j| (&normalized[j] / &normalized[i]).abs())
        .max()
        .unwrap_or_else(Scalar::zero);
    Ok(LimitCheck {
        target: i,
        normalized,
        max_off_ratio,
    })
}

/// Sign-exact count of roots of a quadratic `c0 + c1 t + c2 t^2` inside
/// `[0, 1]`, from its values at the ends and at the vertex. Returns `None`
/// for the zero polynomial.
pub fn roots_in_unit_interval(c: &[Scalar; 3]) -> Option<usize> {
    let f = |t: &Scalar| &c[0] + t * (&c[1] + t * &c[2]);
    let (f0, f1) = (f(&Scalar::zero()), f(&Scalar::one()));
    if c[2].is_zero() {
        if c[1].is_zero() {
            return if c[0].is_zero() { None } else { Some(0) };
        }
        let r = -&c[0] / &c[1];
        return Some(usize::from(!r.is_negative() && r <= Scalar::one()));
    }
    let disc = &c[1] * &c[1] - int(4) * &c[0] * &c[2];
    if disc.is_negative() {
        return Some(0);
    }
    let v = -&c[1] / (int(2) * &c[2]);
    let inside = !v.is_negative() && v <= Scalar::one();
    if disc.is_zero() {
        return Some(usize::from(inside));
    }
    let in_unit = |t: &Scalar| !t.is_negative() && *t <= Scalar::one();
    // Two simple roots summing to 2v: a root at an end point fixes the other.
    if f0.is_zero() {
        return Some(1 + usize::from(in_unit(&(&v + &v))));
    }
    if f1.is_zero() {
        return Some(1 + usize::from(in_unit(&(&v + &v - Scalar::one()))));
    }
    if f0.signum() != f1.signum() {
        return Some(1);
    }
    Some(if inside && f(&v).signum() != f0.signum() { 2 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn square() -> ControlPolygon {
        ControlPolygon::with_unit_weights([
            Point2::from_ints(0, 0),
            Point2::from_ints(0, 1),
            Point2::from_ints(1, 1),
            Point2::from_ints(1, 0),
        ])
    }

    #[test]
    fn independence_on_square_is_unsupported() {
        assert!(matches!(independence_determinant(&square()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn independence_value() {
        let p = ControlPolygon::with_unit_weights([
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 3),
            Point2::from_ints(4, 2),
            Point2::from_ints(5, -1),
        ]);
        let d = independence_determinant(&p).unwrap();
        assert!(!d.is_zero());
        let prof = p.profile();
        let l = &prof.lambdas;
        let l5 = |x: &Scalar| x * x * x * x * x;
        assert_eq!(d, independence_row_factor(&prof).unwrap() * l5(&l[0]) * l5(&l[3]));
    }

    #[test]
    fn limits_on_square() {
        let w = Scalar::from_integer(num_bigint::BigInt::from(1u64 << 20));
        let bound = Scalar::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
        for i in 0..4 {
            let c = limiting_basis_check(&square(), i, &w).unwrap();
            assert!(c.max_off_ratio < bound, "K{i}");
        }
        let c = limiting_basis_check(&square(), 1, &w).unwrap();
        let lam = square().profile().big_lambda();
        let l = square().profile().lambdas;
        let w4 = &w * &w * &w * &w;
        assert_eq!(c.normalized[1], int(9) * &l[1] * &l[1] * &l[1] * &l[3] / w4 - int(27) * lam);
    }

    #[test]
    fn root_counts() {
        let q = |a: i64, b: i64, c: i64| [int(a), int(b), int(c)];
        // (t - 1/4)(t - 3/4) = 3/16 - t + t^2
        assert_eq!(roots_in_unit_interval(&[ratio(3, 16), int(-1), int(1)]), Some(2));
        assert_eq!(roots_in_unit_interval(&[ratio(-1, 4), int(0), int(1)]), Some(1));
        assert_eq!(roots_in_unit_interval(&q(2, 0, 1)), Some(0));
        assert_eq!(roots_in_unit_interval(&q(4, -8, 4)), Some(1));
        assert_eq!(roots_in_unit_interval(&q(0, -1, 1)), Some(2));
        assert_eq!(roots_in_unit_interval(&q(0, 1, 1)), Some(1));
        assert_eq!(roots_in_unit_interval(&q(-2, 0, 1)), Some(0));
        assert_eq!(roots_in_unit_interval(&q(1, -3, 0)), Some(1));
        assert_eq!(roots_in_unit_interval(&q(0, 0, 0)), None);
    }
}
