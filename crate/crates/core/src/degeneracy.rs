//! Conic degeneration and collinear control points.
//!
//! A conic gets its own quadratic implicit form. A polygon with three
//! collinear points is subdivided until every piece has a proper basis. When
//! the collinearity sits at a curve end point it survives any subdivision;
//! such a piece takes its implicit form from the same curve reparametrized
//! over a slightly longer interval.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{ControlPolygon, Line, Point2};
use crate::implicit::{implicitize, ImplicitCubic};
use crate::power::{BiPoly, PowerConic, PowerCubic};
use crate::scalar::{cbrt_exact, int, ratio, sqrt_exact, to_f64, RealScalar, Scalar};
use crate::singularity::PhiSet;

/// Rejects weight patterns the cubic machinery does not model.
pub fn check_weights(p: &ControlPolygon) -> Result<()> {
    let w = &p.weights;
    if w[0].is_zero() {
        return Err(Error::DegenerateWeights("w0 is zero"));
    }
    if w[3].is_zero() {
        return Err(Error::DegenerateWeights("w3 is zero"));
    }
    if w[1].is_zero() && w[2].is_zero() {
        return Err(Error::DegenerateWeights("w1 and w2 are both zero"));
    }
    Ok(())
}

pub fn is_conic(ps: &PhiSet) -> bool {
    ps.is_conic()
}

/// `q2 = u0 u3 L03^2 - u1 u2 L01 L23`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicImplicit {
    pub k03: Scalar,
    pub k12: Scalar,
    pub l03: Line,
    pub l01: Line,
    pub l23: Line,
    pub power: PowerConic,
}

impl ConicImplicit {
    /// Assembles `q2` for any polygon; lines through coincident points are zero.
    pub fn assemble(p: &ControlPolygon) -> Self {
        let prof = p.profile();
        let u = &prof.us;
        let c = &p.points;
        let l03 = Line::through(&c[0], &c[3]);
        let l01 = Line::through(&c[0], &c[1]);
        let l23 = Line::through(&c[2], &c[3]);
        let k03 = &u[0] * &u[3];
        let k12 = &u[1] * &u[2];
        let a = BiPoly::from_line(&l03).pow(2).scale(&k03);
        let b = BiPoly::from_line(&l01).mul(&BiPoly::from_line(&l23)).scale(&-&k12);
        let power = PowerConic::from_poly(&a.add(&b)).expect("quadratic");
        ConicImplicit { k03, k12, l03, l01, l23, power }
    }

    pub fn eval(&self, pt: &Point2) -> Scalar {
        let a = self.l03.eval(pt);
        &self.k03 * &a * &a - &self.k12 * self.l01.eval(pt) * self.l23.eval(pt)
    }

    /// Homogeneous evaluation at `(X, Y, W)`.
    pub fn eval_homogeneous(&self, x: &Scalar, y: &Scalar, w: &Scalar) -> Scalar {
        let a = self.l03.eval_homogeneous(x, y, w);
        &self.k03 * &a * &a
            - &self.k12 * self.l01.eval_homogeneous(x, y, w) * self.l23.eval_homogeneous(x, y, w)
    }

    pub fn gradient(&self, pt: &Point2) -> (Scalar, Scalar) {
        self.power.gradient(pt)
    }
}

pub fn conic_implicit(p: &ControlPolygon) -> Result<ConicImplicit> {
    let ps = PhiSet::new(&p.profile());
    if !ps.is_conic() {
        return Err(Error::NotConic {
            phi1: ps.phi1.to_string(),
            phi2: ps.phi2.to_string(),
        });
    }
    for (i, j) in [(0, 3), (0, 1), (2, 3)] {
        p.line_through(i, j)?;
    }
    Ok(ConicImplicit::assemble(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicType {
    Ellipse,
    Parabola,
    Hyperbola,
}

impl ConicType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicType::Ellipse => "ellipse",
            ConicType::Parabola => "parabola",
            ConicType::Hyperbola => "hyperbola",
        }
    }
}

impl fmt::Display for ConicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Class data. Squared ratios and `eta^4` are exact; `None` means infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicClass {
    pub c_star: Option<Point2>,
    pub y1_sq: Option<Scalar>,
    pub y2_sq: Option<Scalar>,
    pub y1: Option<RealScalar>,
    pub y2: Option<RealScalar>,
    pub eta4: Scalar,
    /// Present when `eta^4` is a rational square.
    pub eta_sq_exact: Option<Scalar>,
    pub eta_sq: RealScalar,
    pub class: ConicType,
}

pub fn conic_class(p: &ControlPolygon) -> Result<ConicClass> {
    let prof = p.profile();
    if !prof.collinear_triples.is_empty() {
        return Err(Error::CollinearInput(prof.collinear_triples));
    }
    let c = &p.points;
    let c_star = Line::through(&c[0], &c[1]).intersect(&Line::through(&c[3], &c[2]));
    let (y1_sq, y2_sq, eta4) = match &c_star {
        Some(s) => {
            let y1 = c[1].dist_sq(s) / c[0].dist_sq(&c[1]);
            let y2 = c[2].dist_sq(s) / c[3].dist_sq(&c[2]);
            let eta4 = Scalar::one() / (int(16) * &y1 * &y2);
            (Some(y1), Some(y2), eta4)
        }
        None => (None, None, Scalar::zero()),
    };
    let class = match eta4.cmp(&Scalar::one()) {
        std::cmp::Ordering::Less => ConicType::Ellipse,
        std::cmp::Ordering::Equal => ConicType::Parabola,
        std::cmp::Ordering::Greater => ConicType::Hyperbola,
    };
    let eta_sq_exact = sqrt_exact(&eta4);
    let eta_sq = eta_sq_exact.as_ref().map_or_else(|| to_f64(&eta4).sqrt(), to_f64);
    let root = |v: &Option<Scalar>| {
        v.as_ref()
            .map(|s| sqrt_exact(s).map_or_else(|| to_f64(s).sqrt(), |r| to_f64(&r)))
    };
    Ok(ConicClass {
        y1: root(&y1_sq),
        y2: root(&y2_sq),
        c_star,
        y1_sq,
        y2_sq,
        eta4,
        eta_sq_exact,
        eta_sq,
        class,
    })
}

/// Scaled weights that turn four points into a conic, with `u0 = u3 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicWeights {
    pub us: [RealScalar; 4],
    pub weights: [RealScalar; 4],
    /// Present when both cube roots are rational.
    pub exact_us: Option<[Scalar; 4]>,
}

impl ConicWeights {
    /// Exact control polygon, when the weights are rational.
    pub fn exact_polygon(&self, points: &[Point2; 4]) -> Option<ControlPolygon> {
        let u = self.exact_us.as_ref()?;
        Some(ControlPolygon::new(points.clone(), weights_from_us(u)))
    }
}

fn weights_from_us(u: &[Scalar; 4]) -> [Scalar; 4] {
    [u[0].clone(), &u[1] / int(3), &u[2] / int(3), u[3].clone()]
}

fn lambdas_of(points: &[Point2; 4]) -> Result<[Scalar; 4]> {
    let prof = ControlPolygon::with_unit_weights(points.clone()).profile();
    if !prof.collinear_triples.is_empty() {
        return Err(Error::CollinearInput(prof.collinear_triples));
    }
    Ok(prof.lambdas)
}

pub fn conic_weights_for_points(points: &[Point2; 4]) -> Result<ConicWeights> {
    let l = lambdas_of(points)?;
    let d1 = &l[0] * &l[0] * &l[3];
    let d2 = &l[0] * &l[3] * &l[3];
    let us = [
        1.0,
        to_f64(&l[1]) / to_f64(&d1).cbrt(),
        to_f64(&l[2]) / to_f64(&d2).cbrt(),
        1.0,
    ];
    let exact_us = match (cbrt_exact(&d1), cbrt_exact(&d2)) {
        (Some(r1), Some(r2)) => Some([Scalar::one(), &l[1] / r1, &l[2] / r2, Scalar::one()]),
        _ => None,
    };
    Ok(ConicWeights {
        weights: [us[0], us[1] / 3.0, us[2] / 3.0, us[3]],
        us,
        exact_us,
    })
}

/// The one-parameter family of conic weights `u = (1, l1/(r l0), l2/(r^2 l0), l3/(r^3 l0))`.
pub fn conic_weights_with_ratio(points: &[Point2; 4], rho: &Scalar) -> Result<[Scalar; 4]> {
    if rho.is_zero() {
        return Err(Error::DegenerateInput("ratio is zero"));
    }
    let l = lambdas_of(points)?;
    let u = [
        Scalar::one(),
        &l[1] / (rho * &l[0]),
        &l[2] / (rho * rho * &l[0]),
        &l[3] / (rho * rho * rho * &l[0]),
    ];
    Ok(weights_from_us(&u))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ImplicitResult {
    Cubic(ImplicitCubic),
    Conic(ConicImplicit, ConicClass),
    /// Leaves in parameter order.
    Piecewise(Vec<Piece>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    /// Parameter interval of this piece in the input's parameter.
    pub interval: (Scalar, Scalar),
    pub polygon: ControlPolygon,
    /// Interval whose control net produced `result`; wider than `interval`
    /// only when subdivision alone could not clear a collinearity.
    pub basis_interval: (Scalar, Scalar),
    pub depth: usize,
    pub result: ImplicitResult,
}

impl ImplicitResult {
    /// Exact implicit polynomial of a single-form result.
    pub fn power(&self) -> Option<PowerCubic> {
        match self {
            ImplicitResult::Cubic(ic) => Some(ic.expand_power_basis()),
            ImplicitResult::Conic(c, _) => Some(c.power.to_cubic()),
            ImplicitResult::Piecewise(_) => None,
        }
    }

    /// Value of the implicit form; a piecewise result uses its first piece.
    pub fn eval(&self, pt: &Point2) -> Scalar {
        match self {
            ImplicitResult::Cubic(ic) => ic.eval_direct(pt),
            ImplicitResult::Conic(c, _) => c.eval(pt),
            ImplicitResult::Piecewise(p) => p[0].result.eval(pt),
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        match self {
            ImplicitResult::Piecewise(p) => p,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolveOptions {
    pub split: Scalar,
    pub retry: Scalar,
    pub max_depth: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            split: ratio(1, 2),
            retry: ratio(1, 3),
            max_depth: 2,
        }
    }
}

/// Cubic or conic form when the polygon admits one directly.
fn direct(p: &ControlPolygon) -> Result<Option<ImplicitResult>> {
    let prof = p.profile();
    if !prof.collinear_triples.is_empty() {
        return Ok(None);
    }
    let ps = PhiSet::new(&prof);
    if ps.is_conic() {
        return Ok(Some(ImplicitResult::Conic(conic_implicit(p)?, conic_class(p)?)));
    }
    Ok(Some(ImplicitResult::Cubic(implicitize(p)?)))
}

pub fn implicitize_any(p: &ControlPolygon) -> Result<ImplicitResult> {
    implicitize_with(p, &ResolveOptions::default())
}

pub fn implicitize_with(p: &ControlPolygon, opts: &ResolveOptions) -> Result<ImplicitResult> {
    check_weights(p)?;
    let prof = p.profile();
    if prof.lambdas.iter().all(Zero::is_zero) {
        return Err(Error::UnresolvableDegeneracy("all control points are collinear".into()));
    }
    if let Some(r) = direct(p)? {
        return Ok(r);
    }
    let mut out = Vec::new();
    resolve(p, (Scalar::zero(), Scalar::one()), 0, opts, &mut out)?;
    Ok(ImplicitResult::Piecewise(out))
}

fn local(root: &ControlPolygon, iv: &(Scalar, Scalar)) -> Result<ControlPolygon> {
    if iv.0.is_zero() && iv.1.is_one() {
        Ok(root.clone())
    } else {
        root.reparametrize(&iv.0, &iv.1)
    }
}

fn leaf_at(root: &ControlPolygon, iv: &(Scalar, Scalar)) -> Result<Option<ImplicitResult>> {
    match local(root, iv) {
        Ok(net) => direct(&net),
        Err(Error::ZeroDenominator(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn split_interval(iv: &(Scalar, Scalar), t: &Scalar) -> [(Scalar, Scalar); 2] {
    let m = &iv.0 + (&iv.1 - &iv.0) * t;
    [(iv.0.clone(), m.clone()), (m, iv.1.clone())]
}

fn resolve(
    root: &ControlPolygon,
    iv: (Scalar, Scalar),
    depth: usize,
    opts: &ResolveOptions,
    out: &mut Vec<Piece>,
) -> Result<()> {
    let polygon = local(root, &iv)?;
    if let Some(result) = direct(&polygon)? {
        out.push(Piece {
            basis_interval: iv.clone(),
            interval: iv,
            polygon,
            depth,
            result,
        });
        return Ok(());
    }
    if depth == opts.max_depth {
        return extend(root, iv, polygon, depth, out);
    }
    let mut halves = split_interval(&iv, &opts.split);
    for t in [&opts.split, &opts.retry] {
        let cand = split_interval(&iv, t);
        let mut clean = true;
        for h in &cand {
            clean &= leaf_at(root, h)?.is_some();
        }
        if clean {
            halves = cand;
            break;
        }
    }
    for h in halves {
        resolve(root, h, depth + 1, opts, out)?;
    }
    Ok(())
}

fn extend(
    root: &ControlPolygon,
    iv: (Scalar, Scalar),
    polygon: ControlPolygon,
    depth: usize,
    out: &mut Vec<Piece>,
) -> Result<()> {
    let len = &iv.1 - &iv.0;
    let half = &len / int(2);
    let candidates = [
        (&iv.0 - &half, iv.1.clone()),
        (iv.0.clone(), &iv.1 + &half),
        (&iv.0 - &half, &iv.1 + &half),
    ];
    for basis in candidates {
        if let Some(result) = leaf_at(root, &basis)? {
            out.push(Piece {
                interval: iv,
                polygon,
                basis_interval: basis,
                depth,
                result,
            });
            return Ok(());
        }
    }
    Err(Error::UnresolvableDegeneracy(format!(
        "piece [{}, {}] keeps a collinear triple",
        iv.0, iv.1
    )))
}
