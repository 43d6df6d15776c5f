//! Symbolic composition of the implicit pieces with the parametrization.

use num_traits::Zero;

use crate::degeneracy::ConicImplicit;
use crate::geometry::{ControlPolygon, GeometryProfile, Line};
use crate::implicit::coefficients;
use crate::scalar::{int, Scalar};
use crate::singularity::PhiSet;

use super::unipoly::UniPoly;

/// `[X(t), Y(t), W(t)]` in monomial form.
pub fn curve_polys(p: &ControlPolygon) -> [UniPoly; 3] {
    let bern = |f: &dyn Fn(usize) -> Scalar| UniPoly::bernstein((0..4).map(f).collect()).to_monomial();
    [
        bern(&|k| &p.weights[k] * &p.points[k].x),
        bern(&|k| &p.weights[k] * &p.points[k].y),
        bern(&|k| p.weights[k].clone()),
    ]
}

/// `w(t) * L(p(t))` computed as `a X + b Y + c W`.
pub fn compose_affine(l: &Line, xyw: &[UniPoly; 3]) -> UniPoly {
    xyw[0]
        .scale(&l.a)
        .add(&xyw[1].scale(&l.b))
        .add(&xyw[2].scale(&l.c))
}

/// Three independent routes to `w(t) * L_ij(p(t))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineComposition {
    /// Cubic Bernstein coefficients `lambda_ijk * w_k`.
    pub bernstein: UniPoly,
    /// Expansion of the product of `t`, `1 - t` and a short cofactor.
    pub factored: UniPoly,
    /// Direct substitution of the parametrization into the line.
    pub direct: UniPoly,
}

impl LineComposition {
    pub fn consistent(&self) -> bool {
        self.bernstein.same_poly(&self.factored) && self.bernstein.same_poly(&self.direct)
    }
}

fn t_pow(a: u32, b: u32) -> UniPoly {
    UniPoly::t().pow(a).mul(&UniPoly::one_minus_t().pow(b))
}

/// `alpha (1-t)^m - beta t^n`.
fn binomial_factor(alpha: Scalar, m: u32, beta: Scalar, n: u32) -> UniPoly {
    t_pow(0, m).scale(&alpha).sub(&t_pow(n, 0).scale(&beta))
}

/// The factored line compositions for `i < j`, as `(t^a (1-t)^b, cofactor)`.
pub fn line_factor(profile: &GeometryProfile, i: usize, j: usize) -> (UniPoly, UniPoly) {
    let l = &profile.lambdas;
    let u = &profile.us;
    let m = |a: usize, b: usize| &u[a] * &l[b];
    match (i, j) {
        (0, 1) => (t_pow(2, 0), binomial_factor(m(2, 3), 1, m(3, 2), 1)),
        (1, 2) => (t_pow(0, 0), binomial_factor(m(0, 3), 3, m(3, 0), 3)),
        (2, 3) => (t_pow(0, 2), binomial_factor(m(0, 1), 1, m(1, 0), 1)),
        (0, 2) => (t_pow(1, 0).scale(&int(-1)), binomial_factor(m(1, 3), 2, m(3, 1), 2)),
        (1, 3) => (t_pow(0, 1).scale(&int(-1)), binomial_factor(m(0, 2), 2, m(2, 0), 2)),
        (0, 3) => (t_pow(1, 1), binomial_factor(m(1, 2), 1, m(2, 1), 1)),
        _ => panic!("line_factor expects i < j"),
    }
}

pub fn compose_line(p: &ControlPolygon, i: usize, j: usize) -> LineComposition {
    assert!(i != j && i < 4 && j < 4, "invalid line index");
    let bernstein = UniPoly::bernstein(
        (0..4)
            .map(|k| p.lambda_triple(i, j, k) * &p.weights[k])
            .collect(),
    );
    let profile = p.profile();
    let (lo, hi) = (i.min(j), i.max(j));
    let (mono, cof) = line_factor(&profile, lo, hi);
    let mut factored = mono.mul(&cof);
    if i > j {
        factored = factored.scale(&int(-1));
    }
    let direct = compose_affine(&Line::through(&p.points[i], &p.points[j]), &curve_polys(p));
    LineComposition {
        bernstein,
        factored,
        direct,
    }
}

/// The degree five polynomials `G_i` with `w^3 K_i(p) = t^2 (1-t)^2 G_i`.
pub fn basis_cofactors(profile: &GeometryProfile) -> [UniPoly; 4] {
    let f = |i, j| line_factor(profile, i, j).1;
    [
        f(0, 1).mul(&f(1, 2)).mul(&f(2, 3)),
        f(0, 1).mul(&f(1, 3).pow(2)),
        f(0, 2).pow(2).mul(&f(2, 3)),
        t_pow(1, 1).mul(&f(0, 3).pow(3)),
    ]
}

/// Coefficients `g_{i,0}` of `(1-t)^5` in each `G_i`.
pub fn cofactor_leading(profile: &GeometryProfile) -> [Scalar; 4] {
    basis_cofactors(profile).map(|g| g.to_bernstein(5).expect("degree five").coeffs()[0].clone())
}

/// The six Bernstein coefficients of `sum b_i G_i`.
pub fn vanishing_coefficients(p: &ControlPolygon) -> Vec<Scalar> {
    let profile = p.profile();
    let b = coefficients(&profile);
    let g = basis_cofactors(&profile);
    let sum = (0..4).fold(UniPoly::zero(), |acc, i| acc.add(&g[i].scale(&b[i])));
    sum.to_bernstein(5).expect("degree five").coeffs().to_vec()
}

/// True when `sum b_i G_i` vanishes identically.
pub fn verify_vanishing_identity(p: &ControlPolygon) -> bool {
    vanishing_coefficients(p).iter().all(Zero::is_zero)
}

/// `q2(p(t)) w(t)^2` as an exact polynomial.
pub fn conic_composition(p: &ControlPolygon) -> UniPoly {
    let q = ConicImplicit::assemble(p);
    let xyw = curve_polys(p);
    let l03 = compose_affine(&q.l03, &xyw);
    let l01 = compose_affine(&q.l01, &xyw);
    let l23 = compose_affine(&q.l23, &xyw);
    l03.pow(2).scale(&q.k03).sub(&l01.mul(&l23).scale(&q.k12))
}

/// Checks `q2(p(t)) w(t)^2 = t^2 (1-t)^2 r(t)`, with `r` read off the phi set.
pub fn verify_conic_composition(p: &ControlPolygon) -> bool {
    let lhs = conic_composition(p);
    let r = UniPoly::bernstein(PhiSet::new(&p.profile()).r_bernstein().to_vec());
    match lhs.div_exact(&t_pow(2, 2)) {
        Some(q) => q.same_poly(&r) && lhs.same_poly(&t_pow(2, 2).mul(&r)),
        None => false,
    }
}
