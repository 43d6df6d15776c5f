//! Double point location, type and the lines that split the curve there.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::degeneracy::check_weights;
use crate::error::{Error, Result};
use crate::geometry::{ControlPolygon, GeometryProfile, Line, Point2};
use crate::implicit::{implicitize, ImplicitCubic};
use crate::scalar::{int, sqrt_exact, to_f64, RealScalar, Scalar};

/// The quadratic weight and area diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSet {
    pub phi1: Scalar,
    pub phi2: Scalar,
    pub phi3: Scalar,
    pub big_phi1: Scalar,
    pub big_phi2: Scalar,
    pub big_phi3: Scalar,
}

impl PhiSet {
    pub fn new(profile: &GeometryProfile) -> Self {
        let l = &profile.lambdas;
        let u = &profile.us;
        let phi1 = &u[0] * &u[2] * &l[1] * &l[1] - &u[1] * &u[1] * &l[0] * &l[2];
        let phi2 = &u[1] * &u[3] * &l[2] * &l[2] - &u[2] * &u[2] * &l[1] * &l[3];
        let phi3 = &u[1] * &u[2] * &l[0] * &l[3] - &u[0] * &u[3] * &l[1] * &l[2];
        PhiSet {
            big_phi1: &phi1 * &u[2] * &u[3],
            big_phi2: &phi2 * &u[0] * &u[1],
            big_phi3: &phi3 * &u[1] * &u[2],
            phi1,
            phi2,
            phi3,
        }
    }

    /// Both linear relations between the three phis; zero when consistent.
    pub fn identity_residuals(&self, profile: &GeometryProfile) -> [Scalar; 2] {
        let l = &profile.lambdas;
        let u = &profile.us;
        [
            &u[3] * &l[2] * &self.phi1 + &u[1] * &l[0] * &self.phi2 + &u[2] * &l[1] * &self.phi3,
            &u[2] * &l[3] * &self.phi1 + &u[0] * &l[1] * &self.phi2 + &u[1] * &l[2] * &self.phi3,
        ]
    }

    pub fn phi_product(&self) -> Scalar {
        &self.phi1 * &self.phi2
    }

    pub fn discriminant(&self) -> Scalar {
        &self.big_phi3 * &self.big_phi3 - int(4) * &self.big_phi1 * &self.big_phi2
    }

    /// Monomial coefficients `[c0, c1, c2]` of `r(t)`.
    pub fn r_monomial(&self) -> [Scalar; 3] {
        [
            self.big_phi2.clone(),
            &self.big_phi3 - int(2) * &self.big_phi2,
            &self.big_phi1 + &self.big_phi2 - &self.big_phi3,
        ]
    }

    /// Bernstein coefficients of `r(t)` on `[0, 1]`.
    pub fn r_bernstein(&self) -> [Scalar; 3] {
        [
            self.big_phi2.clone(),
            &self.big_phi3 / int(2),
            self.big_phi1.clone(),
        ]
    }

    pub fn eval_r(&self, t: &Scalar) -> Scalar {
        let [c0, c1, c2] = self.r_monomial();
        c0 + t * (c1 + t * c2)
    }

    pub fn eval_r_f64(&self, t: f64) -> f64 {
        let [c0, c1, c2] = self.r_monomial().map(|c| to_f64(&c));
        c0 + t * (c1 + t * c2)
    }

    pub fn is_conic(&self) -> bool {
        self.phi1.is_zero() && self.phi2.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EndpointSingularity {
    pub at_c0: bool,
    pub at_c3: bool,
}

impl EndpointSingularity {
    pub fn any(&self) -> bool {
        self.at_c0 || self.at_c3
    }
}

pub fn endpoint_singularity(ps: &PhiSet, profile: &GeometryProfile) -> EndpointSingularity {
    EndpointSingularity {
        at_c0: ps.phi2.is_zero() || profile.us[1].is_zero(),
        at_c3: ps.phi1.is_zero() || profile.us[2].is_zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Affine(Point2),
    AtInfinity,
}

impl Location {
    pub fn point(&self) -> Option<&Point2> {
        match self {
            Location::Affine(p) => Some(p),
            Location::AtInfinity => None,
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Affine(p) => write!(f, "{p}"),
            Location::AtInfinity => write!(f, "at-infinity"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoublePointKind {
    Crunode,
    Cusp,
    Acnode,
}

impl DoublePointKind {
    pub fn from_discriminant(d: &Scalar) -> Self {
        if d.is_positive() {
            DoublePointKind::Crunode
        } else if d.is_zero() {
            DoublePointKind::Cusp
        } else {
            DoublePointKind::Acnode
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DoublePointKind::Crunode => "crunode",
            DoublePointKind::Cusp => "cusp",
            DoublePointKind::Acnode => "acnode",
        }
    }
}

impl fmt::Display for DoublePointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Roots of `r(t)`; real roots are ordered `t1 <= t2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParameterRoots {
    Real(RealScalar, RealScalar),
    Complex { re: RealScalar, im: RealScalar },
    /// `r` is linear.
    Single(RealScalar),
    /// `r` is constant.
    NoFinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularityParameters {
    pub at_infinity: bool,
    pub roots: ParameterRoots,
}

pub fn singularity_parameters(ps: &PhiSet) -> SingularityParameters {
    let [c, b, a] = ps.r_monomial();
    if a.is_zero() {
        let roots = if b.is_zero() {
            ParameterRoots::NoFinite
        } else {
            ParameterRoots::Single(to_f64(&(-&c / &b)))
        };
        return SingularityParameters { at_infinity: true, roots };
    }
    let disc = ps.discriminant();
    let two_a = int(2) * &a;
    let roots = if let Some(r) = sqrt_exact(&disc) {
        let t1 = to_f64(&((-&b - &r) / &two_a));
        let t2 = to_f64(&((-&b + &r) / &two_a));
        ParameterRoots::Real(t1.min(t2), t1.max(t2))
    } else if disc.is_positive() {
        let (af, bf, cf) = (to_f64(&a), to_f64(&b), to_f64(&c));
        let sq = to_f64(&disc).sqrt();
        let q = -0.5 * (bf + bf.signum() * sq);
        let (t1, t2) = if q == 0.0 { (0.0, -bf / af) } else { (q / af, cf / q) };
        ParameterRoots::Real(t1.min(t2), t1.max(t2))
    } else {
        ParameterRoots::Complex {
            re: to_f64(&(-&b / &two_a)),
            im: (-to_f64(&disc)).sqrt() / to_f64(&two_a.abs()),
        }
    };
    SingularityParameters { at_infinity: false, roots }
}

/// Exactly one parameter of a self-intersection falls inside `[0, 1]`.
pub fn unwanted_check(ps: &PhiSet) -> bool {
    (&ps.big_phi1 * &ps.big_phi2).is_negative()
}

fn barycentric(points: [&Point2; 3], w: [Scalar; 3]) -> Option<Point2> {
    let d: Scalar = w.iter().sum();
    if d.is_zero() {
        return None;
    }
    let x: Scalar = points.iter().zip(&w).map(|(p, k)| &p.x * k).sum();
    let y: Scalar = points.iter().zip(&w).map(|(p, k)| &p.y * k).sum();
    Some(Point2::new(x / &d, y / d))
}

/// Locates the double point as a barycentric combination of three control
/// points, trying the `{c0, c2, c3}` frame first and `{c0, c1, c3}` second.
/// A frame whose three points are collinear is skipped.
pub fn double_point(profile: &GeometryProfile, ps: &PhiSet, p: &ControlPolygon) -> Result<Location> {
    if ps.is_conic() {
        return Err(Error::DegenerateInput("the curve is a conic"));
    }
    let u = &profile.us;
    let (f1, f2, f3) = (&ps.phi1, &ps.phi2, &ps.phi3);
    let c = &p.points;
    let frames = [
        (
            !profile.lambdas[1].is_zero(),
            [&c[0], &c[2], &c[3]],
            [f1 * f1 * &u[2] * &u[3], -(f1 * f2 * &u[1] * &u[2]), f2 * f3 * &u[1] * &u[1]],
        ),
        (
            !profile.lambdas[2].is_zero(),
            [&c[0], &c[1], &c[3]],
            [f1 * f3 * &u[2] * &u[2], -(f1 * f2 * &u[1] * &u[2]), f2 * f2 * &u[1] * &u[0]],
        ),
    ];
    let mut usable = false;
    for (ok, pts, w) in frames {
        if !ok {
            continue;
        }
        usable = true;
        if let Some(s) = barycentric(pts, w) {
            return Ok(Location::Affine(s));
        }
    }
    if usable {
        Ok(Location::AtInfinity)
    } else {
        Err(Error::DegenerateInput("both barycentric frames are collinear"))
    }
}

/// Two lines through `c0` and `c3` meeting at the double point, in two
/// equivalent forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitLines {
    pub s1_tilde: Line,
    pub s2_tilde: Line,
    pub s1_hat: Line,
    pub s2_hat: Line,
}

impl SplitLines {
    /// The four lines without checking where the double point is.
    pub fn compute(ic: &ImplicitCubic, ps: &PhiSet) -> Self {
        let u = &ic.us;
        let l03 = ic.line(0, 3);
        let comb = |ka: Scalar, la: Line, kb: Scalar| la.scale(&ka).add(&l03.scale(&-kb));
        SplitLines {
            s1_tilde: comb(&u[2] * &ps.phi1, ic.line(0, 2), &u[1] * &ps.phi3),
            s2_tilde: comb(&u[1] * &ps.phi2, ic.line(1, 3), &u[2] * &ps.phi3),
            s1_hat: comb(&u[2] * &ps.phi1, ic.line(0, 1), &u[0] * &ps.phi2),
            s2_hat: comb(&u[1] * &ps.phi2, ic.line(2, 3), &u[3] * &ps.phi1),
        }
    }

    /// Signs of the tilde lines at `p`.
    pub fn quadrant(&self, p: &Point2) -> (i8, i8) {
        (
            crate::scalar::sign(&self.s1_tilde.eval(p)),
            crate::scalar::sign(&self.s2_tilde.eval(p)),
        )
    }
}

pub fn split_lines(ic: &ImplicitCubic, ps: &PhiSet) -> Result<SplitLines> {
    let profile = ic.profile();
    let ends = endpoint_singularity(ps, &profile);
    if ends.any() {
        return Err(Error::EndpointSingularity {
            at_c0: ends.at_c0,
            at_c3: ends.at_c3,
        });
    }
    if double_point(&profile, ps, &ic.polygon)? == Location::AtInfinity {
        return Err(Error::PointAtInfinity);
    }
    Ok(SplitLines::compute(ic, ps))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DoublePoint {
    pub location: Location,
    pub kind: DoublePointKind,
    pub discriminant: Scalar,
    pub unwanted: bool,
    pub parameter_at_infinity: bool,
    pub parameters: ParameterRoots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitOmission {
    EndpointSingularity,
    AtInfinity,
}

impl SplitOmission {
    pub fn as_str(&self) -> &'static str {
        match self {
            SplitOmission::EndpointSingularity => "endpoint-singularity",
            SplitOmission::AtInfinity => "double-point-at-infinity",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularityReport {
    pub implicit: ImplicitCubic,
    pub phi: PhiSet,
    pub endpoint: EndpointSingularity,
    pub double_point: DoublePoint,
    pub split: std::result::Result<SplitLines, SplitOmission>,
}

impl SingularityReport {
    pub fn split_lines(&self) -> Option<&SplitLines> {
        self.split.as_ref().ok()
    }
}

/// Builds the full diagnosis of a non-degenerate cubic.
///
/// The unwanted flag is only raised when every weight is nonzero, neither
/// end point is singular, the double point is affine and no singular
/// parameter lies at infinity.
pub fn analyze(p: &ControlPolygon) -> Result<SingularityReport> {
    check_weights(p)?;
    let ic = implicitize(p)?;
    let profile = ic.profile();
    let phi = PhiSet::new(&profile);
    let endpoint = endpoint_singularity(&phi, &profile);
    let location = double_point(&profile, &phi, p)?;
    let params = singularity_parameters(&phi);
    let discriminant = phi.discriminant();
    let nonzero_weights = p.weights.iter().all(|w| !w.is_zero());
    let unwanted = nonzero_weights
        && !endpoint.any()
        && !params.at_infinity
        && location != Location::AtInfinity
        && unwanted_check(&phi);
    let split = if endpoint.any() {
        Err(SplitOmission::EndpointSingularity)
    } else if location == Location::AtInfinity {
        Err(SplitOmission::AtInfinity)
    } else {
        Ok(SplitLines::compute(&ic, &phi))
    };
    Ok(SingularityReport {
        double_point: DoublePoint {
            kind: DoublePointKind::from_discriminant(&discriminant),
            location,
            discriminant,
            unwanted,
            parameter_at_infinity: params.at_infinity,
            parameters: params.roots,
        },
        implicit: ic,
        phi,
        endpoint,
        split,
    })
}
