//! Points, oriented lines, control polygons and their signed areas.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }

    pub fn dist_sq(&self, o: &Point2) -> Scalar {
        let dx = &self.x - &o.x;
        let dy = &self.y - &o.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The affine form `a*x + b*y + c`, stored exactly as constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        Line { a, b, c }
    }

    /// Line through `p` and `q`, oriented so that `L(r)` is the signed area
    /// determinant of (p, q, r).
    pub fn through(p: &Point2, q: &Point2) -> Self {
        Line {
            a: &p.y - &q.y,
            b: &q.x - &p.x,
            c: &p.x * &q.y - &p.y * &q.x,
        }
    }

    pub fn eval(&self, p: &Point2) -> Scalar {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    /// Homogeneous evaluation `a*X + b*Y + c*W`.
    pub fn eval_homogeneous(&self, x: &Scalar, y: &Scalar, w: &Scalar) -> Scalar {
        &self.a * x + &self.b * y + &self.c * w
    }

    pub fn gradient(&self) -> (Scalar, Scalar) {
        (self.a.clone(), self.b.clone())
    }

    pub fn gradient_norm_sq(&self) -> Scalar {
        &self.a * &self.a + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Line {
        Line::new(&self.a * k, &self.b * k, &self.c * k)
    }

    pub fn add(&self, o: &Line) -> Line {
        Line::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c)
    }

    pub fn neg(&self) -> Line {
        Line::new(-&self.a, -&self.b, -&self.c)
    }

    /// True when the coefficient vectors are parallel.
    pub fn is_multiple_of(&self, o: &Line) -> bool {
        (&self.a * &o.b - &self.b * &o.a).is_zero()
            && (&self.a * &o.c - &self.c * &o.a).is_zero()
            && (&self.b * &o.c - &self.c * &o.b).is_zero()
    }

    /// Returns `None` for parallel lines.
    pub fn intersect(&self, o: &Line) -> Option<Point2> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &o.c - &self.c * &o.b) / &det;
        let y = (&self.c * &o.a - &self.a * &o.c) / &det;
        Some(Point2::new(x, y))
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, k: &Scalar, var: &str, first: &mut bool) -> fmt::Result {
    if k.is_zero() {
        return Ok(());
    }
    let sep = match (*first, k.is_negative()) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    *first = false;
    let m = k.abs();
    if var.is_empty() {
        write!(f, "{sep}{m}")
    } else if m.is_one() {
        write!(f, "{sep}{var}")
    } else {
        write!(f, "{sep}{m}*{var}")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        fmt_term(f, &self.a, "x", &mut first)?;
        fmt_term(f, &self.b, "y", &mut first)?;
        fmt_term(f, &self.c, "", &mut first)?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A rational cubic in Bernstein form: four control points and four weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ControlPolygon {
    pub points: [Point2; 4],
    pub weights: [Scalar; 4],
}

/// Homogeneous point `(w*x, w*y, w)`.
pub type Homogeneous = (Scalar, Scalar, Scalar);

impl ControlPolygon {
    pub fn new(points: [Point2; 4], weights: [Scalar; 4]) -> Self {
        ControlPolygon { points, weights }
    }

    pub fn with_unit_weights(points: [Point2; 4]) -> Self {
        ControlPolygon::new(points, std::array::from_fn(|_| Scalar::one()))
    }

    pub fn line_through(&self, i: usize, j: usize) -> Result<Line> {
        assert!(i < 4 && j < 4, "control point index out of range");
        if self.points[i] == self.points[j] {
            return Err(Error::CoincidentPoints(i.min(j), i.max(j)));
        }
        Ok(Line::through(&self.points[i], &self.points[j]))
    }

    /// Determinant of the rows `(c_i, 1), (c_j, 1), (c_k, 1)`.
    pub fn lambda_triple(&self, i: usize, j: usize, k: usize) -> Scalar {
        Line::through(&self.points[i], &self.points[j]).eval(&self.points[k])
    }

    pub fn profile(&self) -> GeometryProfile {
        GeometryProfile::new(self)
    }

    /// `w(t)` together with the numerators of both coordinates.
    pub fn eval_homogeneous(&self, t: &Scalar) -> Homogeneous {
        let s = Scalar::one() - t;
        let basis = [
            &s * &s * &s,
            int(3) * &s * &s * t,
            int(3) * &s * t * t,
            t * t * t,
        ];
        let mut acc = (Scalar::zero(), Scalar::zero(), Scalar::zero());
        for (k, bk) in basis.iter().enumerate() {
            let wb = &self.weights[k] * bk;
            acc.0 += &wb * &self.points[k].x;
            acc.1 += &wb * &self.points[k].y;
            acc.2 += wb;
        }
        acc
    }

    pub fn eval(&self, t: &Scalar) -> Result<Point2> {
        let (x, y, w) = self.eval_homogeneous(t);
        if w.is_zero() {
            return Err(Error::ZeroDenominator(t.to_string()));
        }
        Ok(Point2::new(x / &w, y / w))
    }

    fn homogeneous_net(&self) -> [Homogeneous; 4] {
        std::array::from_fn(|k| {
            let w = &self.weights[k];
            (w * &self.points[k].x, w * &self.points[k].y, w.clone())
        })
    }

    fn from_homogeneous(net: &[Homogeneous; 4], t: &Scalar) -> Result<ControlPolygon> {
        let mut points = Vec::with_capacity(4);
        for (x, y, w) in net {
            if w.is_zero() {
                return Err(Error::ZeroDenominator(t.to_string()));
            }
            points.push(Point2::new(x / w, y / w));
        }
        let points: [Point2; 4] = points.try_into().expect("four points");
        Ok(ControlPolygon::new(points, std::array::from_fn(|k| net[k].2.clone())))
    }

    /// Control net of the same curve reparametrized over the local interval
    /// `[a, b]`, obtained by blossoming the homogeneous net.
    pub fn reparametrize(&self, a: &Scalar, b: &Scalar) -> Result<ControlPolygon> {
        let net = self.homogeneous_net();
        let blossom = |args: [&Scalar; 3]| -> Homogeneous {
            let mut level: Vec<Homogeneous> = net.to_vec();
            for t in args {
                let s = Scalar::one() - t;
                level = level
                    .windows(2)
                    .map(|p| {
                        (
                            &s * &p[0].0 + t * &p[1].0,
                            &s * &p[0].1 + t * &p[1].1,
                            &s * &p[0].2 + t * &p[1].2,
                        )
                    })
                    .collect();
            }
            level.pop().expect("cubic blossom")
        };
        let out = [
            blossom([a, a, a]),
            blossom([a, a, b]),
            blossom([a, b, b]),
            blossom([b, b, b]),
        ];
        ControlPolygon::from_homogeneous(&out, if a.is_zero() { b } else { a })
    }

    /// Rational de Casteljau split at `t`.
    pub fn subdivide(&self, t: &Scalar) -> Result<(ControlPolygon, ControlPolygon)> {
        let s = Scalar::one() - t;
        let lerp = |p: &Homogeneous, q: &Homogeneous| -> Homogeneous {
            (&s * &p.0 + t * &q.0, &s * &p.1 + t * &q.1, &s * &p.2 + t * &q.2)
        };
        let n0 = self.homogeneous_net();
        let n1 = [lerp(&n0[0], &n0[1]), lerp(&n0[1], &n0[2]), lerp(&n0[2], &n0[3])];
        let n2 = [lerp(&n1[0], &n1[1]), lerp(&n1[1], &n1[2])];
        let n3 = lerp(&n2[0], &n2[1]);
        let left = [n0[0].clone(), n1[0].clone(), n2[0].clone(), n3.clone()];
        let right = [n3, n2[1].clone(), n1[2].clone(), n0[3].clone()];
        Ok((
            ControlPolygon::from_homogeneous(&left, t)?,
            ControlPolygon::from_homogeneous(&right, t)?,
        ))
    }

    pub fn diagonal_points(&self) -> Result<DiagonalPoints> {
        let prof = self.profile();
        if !prof.collinear_triples.is_empty() {
            return Err(Error::CollinearInput(prof.collinear_triples));
        }
        let l = &prof.lambdas;
        let c = &self.points;
        let blend = |k: usize| -> Option<Point2> {
            let d = &l[0] + &l[k];
            if d.is_zero() {
                return None;
            }
            Some(Point2::new(
                (&l[0] * &c[0].x + &l[k] * &c[k].x) / &d,
                (&l[0] * &c[0].y + &l[k] * &c[k].y) / &d,
            ))
        };
        Ok(DiagonalPoints {
            m1: blend(1),
            m2: blend(2),
            m3: blend(3),
        })
    }

    pub fn map_points(&self, m: &AffineMap) -> ControlPolygon {
        ControlPolygon::new(
            std::array::from_fn(|k| m.apply(&self.points[k])),
            self.weights.clone(),
        )
    }

    pub fn scale_weights(&self, k: &Scalar) -> ControlPolygon {
        ControlPolygon::new(self.points.clone(), std::array::from_fn(|i| &self.weights[i] * k))
    }

    /// Axis-aligned bounds of the control points as `(min, max)`.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        let xs = self.points.iter().map(|p| &p.x);
        let ys = self.points.iter().map(|p| &p.y);
        (
            Point2::new(xs.clone().min().unwrap().clone(), ys.clone().min().unwrap().clone()),
            Point2::new(xs.max().unwrap().clone(), ys.max().unwrap().clone()),
        )
    }
}

/// Signed areas, scaled weights and the collinear/coincident structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryProfile {
    pub lambdas: [Scalar; 4],
    pub us: [Scalar; 4],
    pub collinear_triples: Vec<[usize; 3]>,
    pub coincident_pairs: Vec<(usize, usize)>,
}

impl GeometryProfile {
    pub fn new(p: &ControlPolygon) -> Self {
        let lambdas = [
            p.lambda_triple(3, 2, 1),
            p.lambda_triple(2, 3, 0),
            p.lambda_triple(1, 0, 3),
            p.lambda_triple(0, 1, 2),
        ];
        let w = &p.weights;
        let us = [w[0].clone(), int(3) * &w[1], int(3) * &w[2], w[3].clone()];
        let mut collinear_triples = Vec::new();
        for (i, l) in lambdas.iter().enumerate() {
            if l.is_zero() {
                let mut t = [0; 3];
                for (n, k) in (0..4).filter(|&k| k != i).enumerate() {
                    t[n] = k;
                }
                collinear_triples.push(t);
            }
        }
        collinear_triples.sort();
        let mut coincident_pairs = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if p.points[i] == p.points[j] {
                    coincident_pairs.push((i, j));
                }
            }
        }
        GeometryProfile {
            lambdas,
            us,
            collinear_triples,
            coincident_pairs,
        }
    }

    pub fn big_u(&self) -> Scalar {
        self.us.iter().product()
    }

    pub fn big_lambda(&self) -> Scalar {
        self.lambdas.iter().product()
    }

    pub fn is_collinear_free(&self) -> bool {
        self.collinear_triples.is_empty()
    }
}

/// Intersections of opposite sides and diagonals of the control polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPoints {
    /// On `L01` and `L23`.
    pub m1: Option<Point2>,
    /// On `L02` and `L13`.
    pub m2: Option<Point2>,
    /// On `L03` and `L12`.
    pub m3: Option<Point2>,
}

/// `x -> M x + t` with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub m: [[Scalar; 2]; 2],
    pub t: [Scalar; 2],
}

impl AffineMap {
    pub fn new(m: [[Scalar; 2]; 2], t: [Scalar; 2]) -> Self {
        AffineMap { m, t }
    }

    pub fn identity() -> Self {
        AffineMap::new(
            [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]],
            [Scalar::zero(), Scalar::zero()],
        )
    }

    pub fn scaling(k: Scalar) -> Self {
        AffineMap::new([[k.clone(), Scalar::zero()], [Scalar::zero(), k]], [Scalar::zero(), Scalar::zero()])
    }

    pub fn det(&self) -> Scalar {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }
}
