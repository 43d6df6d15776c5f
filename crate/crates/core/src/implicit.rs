//! The four-function implicit form `q = b0 K0 + b1 K1 + b2 K2 + b3 K3`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{AffineMap, ControlPolygon, GeometryProfile, Line, Point2};
use crate::power::{BiPoly, PowerCubic};
use crate::scalar::Scalar;
use crate::singularity::PhiSet;

/// Index pairs of the six stored lines, in storage order.
pub const LINE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Line factors of each basis function, with repetition.
pub const BASIS_FACTORS: [[(usize, usize); 3]; 4] = [
    [(0, 1), (1, 2), (2, 3)],
    [(0, 1), (1, 3), (1, 3)],
    [(0, 2), (0, 2), (2, 3)],
    [(0, 3), (0, 3), (0, 3)],
];

fn pair_slot(i: usize, j: usize) -> usize {
    LINE_PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .expect("pair with i < j")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMode {
    #[default]
    Direct,
    /// Evaluates only `L01`, `L12`, `L23` and rebuilds the rest; falls back
    /// to direct evaluation when `lambda_0` or `lambda_3` vanishes.
    Reduced,
}

/// Coefficients straight from signed areas and scaled weights.
pub fn coefficients(profile: &GeometryProfile) -> [Scalar; 4] {
    let l = &profile.lambdas;
    let u = &profile.us;
    let cu = profile.big_u();
    let cl = profile.big_lambda();
    let sq = |x: &Scalar| x * x;
    let cube = |x: &Scalar| x * x * x;
    [
        -(sq(&l[1]) * sq(&l[2]) * &cu - sq(&u[1]) * sq(&u[2]) * &cl),
        cube(&l[1]) * &l[3] * &cu - cube(&u[1]) * &u[3] * &cl,
        &l[0] * cube(&l[2]) * &cu - &u[0] * cube(&u[2]) * &cl,
        sq(&l[0]) * sq(&l[3]) * &cu - sq(&u[0]) * sq(&u[3]) * &cl,
    ]
}

/// The same coefficients rewritten through the phi quantities.
pub fn coefficients_from_phi(profile: &GeometryProfile, phi: &PhiSet) -> [Scalar; 4] {
    let l = &profile.lambdas;
    let u = &profile.us;
    [
        &phi.phi3 * &u[1] * &u[2] * &l[1] * &l[2],
        &phi.phi1 * &u[1] * &u[3] * &l[1] * &l[3],
        &phi.phi2 * &u[0] * &u[2] * &l[0] * &l[2],
        &phi.phi3 * &u[0] * &u[3] * &l[0] * &l[3],
    ]
}

/// Coefficients divided by `U * Lambda`, expressed as ratios.
pub fn normalized_coefficients(profile: &GeometryProfile) -> Result<[Scalar; 4]> {
    if profile.us.iter().any(Zero::is_zero) {
        return Err(Error::ZeroFactor("a scaled weight"));
    }
    if profile.lambdas.iter().any(Zero::is_zero) {
        return Err(Error::ZeroFactor("a signed area"));
    }
    let l = &profile.lambdas;
    let u = &profile.us;
    Ok([
        &u[1] * &u[2] / (&u[0] * &u[3]) - &l[1] * &l[2] / (&l[0] * &l[3]),
        &l[1] * &l[1] / (&l[0] * &l[2]) - &u[1] * &u[1] / (&u[0] * &u[2]),
        &l[2] * &l[2] / (&l[1] * &l[3]) - &u[2] * &u[2] / (&u[1] * &u[3]),
        &l[0] * &l[3] / (&l[1] * &l[2]) - &u[0] * &u[3] / (&u[1] * &u[2]),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitCubic {
    pub polygon: ControlPolygon,
    /// Indexed as [`LINE_PAIRS`].
    pub lines: [Line; 6],
    pub lambdas: [Scalar; 4],
    pub us: [Scalar; 4],
    pub b: [Scalar; 4],
    pub normalized_b: Option<[Scalar; 4]>,
    pub big_u: Scalar,
    pub big_lambda: Scalar,
}

/// Builds the implicit cubic of a polygon with no three collinear points.
pub fn implicitize(p: &ControlPolygon) -> Result<ImplicitCubic> {
    let profile = p.profile();
    if !profile.collinear_triples.is_empty() {
        return Err(Error::CollinearInput(profile.collinear_triples));
    }
    let b = coefficients(&profile);
    debug_assert_eq!(b, coefficients_from_phi(&profile, &PhiSet::new(&profile)));
    if b.iter().all(Zero::is_zero) {
        return Err(Error::ConicDegeneration);
    }
    let mut lines = Vec::with_capacity(6);
    for &(i, j) in &LINE_PAIRS {
        lines.push(p.line_through(i, j)?);
    }
    Ok(ImplicitCubic {
        polygon: p.clone(),
        lines: lines.try_into().expect("six lines"),
        normalized_b: normalized_coefficients(&profile).ok(),
        big_u: profile.big_u(),
        big_lambda: profile.big_lambda(),
        lambdas: profile.lambdas,
        us: profile.us,
        b,
    })
}

impl ImplicitCubic {
    /// `L_ij`, with `L_ji = -L_ij`.
    pub fn line(&self, i: usize, j: usize) -> Line {
        assert!(i != j && i < 4 && j < 4, "invalid line index");
        if i < j {
            self.lines[pair_slot(i, j)].clone()
        } else {
            self.lines[pair_slot(j, i)].neg()
        }
    }

    fn line_ref(&self, i: usize, j: usize) -> &Line {
        &self.lines[pair_slot(i, j)]
    }

    pub fn profile(&self) -> GeometryProfile {
        self.polygon.profile()
    }

    pub fn normalized_coefficients(&self) -> Result<[Scalar; 4]> {
        normalized_coefficients(&self.profile())
    }

    fn line_values(&self, pt: &Point2) -> [Scalar; 6] {
        std::array::from_fn(|k| self.lines[k].eval(pt))
    }

    fn reduced_line_values(&self, pt: &Point2) -> Result<[Scalar; 6]> {
        let l = &self.lambdas;
        if l[0].is_zero() || l[3].is_zero() {
            return Err(Error::ReducedModeUnavailable);
        }
        let l01 = self.line_ref(0, 1).eval(pt);
        let l12 = self.line_ref(1, 2).eval(pt);
        let l23 = self.line_ref(2, 3).eval(pt);
        let l02 = (&l[3] * &l23 - &l[1] * &l12) / &l[0];
        let l13 = (&l[0] * &l01 - &l[2] * &l12) / &l[3];
        let l03 = (&l[1] * &l[2] * &l12 - &l[0] * &l[1] * &l01 - &l[2] * &l[3] * &l23)
            / (&l[0] * &l[3]);
        Ok([l01, l02, l03, l12, l13, l23])
    }

    fn combine(&self, v: &[Scalar; 6]) -> Scalar {
        let mut acc = Scalar::zero();
        for (bi, factors) in self.b.iter().zip(BASIS_FACTORS.iter()) {
            let k: Scalar = factors.iter().map(|&(i, j)| &v[pair_slot(i, j)]).product();
            acc += bi * k;
        }
        acc
    }

    pub fn eval_direct(&self, pt: &Point2) -> Scalar {
        self.combine(&self.line_values(pt))
    }

    /// Strict reduced evaluation, without fallback.
    pub fn eval_reduced(&self, pt: &Point2) -> Result<Scalar> {
        Ok(self.combine(&self.reduced_line_values(pt)?))
    }

    pub fn eval(&self, pt: &Point2, mode: EvalMode) -> Scalar {
        match mode {
            EvalMode::Direct => self.eval_direct(pt),
            EvalMode::Reduced => self.eval_reduced(pt).unwrap_or_else(|_| self.eval_direct(pt)),
        }
    }

    pub fn eval_basis(&self, i: usize, pt: &Point2) -> Scalar {
        assert!(i < 4, "basis index out of range");
        BASIS_FACTORS[i].iter().map(|&(a, b)| self.line_ref(a, b).eval(pt)).product()
    }

    /// Product-rule gradient assembled from the line normals.
    pub fn gradient(&self, pt: &Point2) -> (Scalar, Scalar) {
        let v = self.line_values(pt);
        let mut gx = Scalar::zero();
        let mut gy = Scalar::zero();
        for (bi, factors) in self.b.iter().zip(BASIS_FACTORS.iter()) {
            for skip in 0..3 {
                let rest: Scalar = (0..3)
                    .filter(|&k| k != skip)
                    .map(|k| &v[pair_slot(factors[k].0, factors[k].1)])
                    .product();
                let n = self.line_ref(factors[skip].0, factors[skip].1);
                let w = bi * rest;
                gx += &w * &n.a;
                gy += w * &n.b;
            }
        }
        (gx, gy)
    }

    pub fn basis_poly(&self, i: usize) -> BiPoly {
        BASIS_FACTORS[i]
            .iter()
            .map(|&(a, b)| BiPoly::from_line(self.line_ref(a, b)))
            .fold(BiPoly::constant(Scalar::from_integer(1.into())), |acc, f| acc.mul(&f))
    }

    pub fn expand_power_basis(&self) -> PowerCubic {
        let q = (0..4).fold(BiPoly::zero(), |acc, i| acc.add(&self.basis_poly(i).scale(&self.b[i])));
        PowerCubic::from_poly(&q).expect("cubic")
    }
}

/// True iff mapping the points by `map` multiplies every coefficient by `det^4`.
pub fn affine_invariance_check(p: &ControlPolygon, map: &AffineMap) -> Result<bool> {
    let c = map.det();
    if c.is_zero() {
        return Err(Error::DegenerateInput("singular affine map"));
    }
    let before = implicitize(p)?;
    let after = implicitize(&p.map_points(map))?;
    let c4 = &c * &c * &c * &c;
    Ok(before.b.iter().zip(after.b.iter()).all(|(x, y)| x * &c4 == *y))
}
