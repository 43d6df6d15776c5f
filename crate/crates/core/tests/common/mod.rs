//! Seeded random polygons and the worked examples, shared by the test targets.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratcubic::{int, ratio, AffineMap, ControlPolygon, Point2, Scalar};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weights {
    Unit,
    Positive,
    /// Nonzero, either sign.
    Signed,
}

pub fn rational(rng: &mut TestRng, num: i64, den: i64) -> Scalar {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn positive(rng: &mut TestRng) -> Scalar {
    ratio(rng.gen_range(1..=12), rng.gen_range(1..=6))
}

pub fn nonzero(rng: &mut TestRng) -> Scalar {
    let v = positive(rng);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

pub fn point(rng: &mut TestRng) -> Point2 {
    Point2::new(rational(rng, 24, 8), rational(rng, 24, 8))
}

pub fn weights(rng: &mut TestRng, kind: Weights) -> [Scalar; 4] {
    match kind {
        Weights::Unit => std::array::from_fn(|_| int(1)),
        Weights::Positive => std::array::from_fn(|_| positive(rng)),
        Weights::Signed => std::array::from_fn(|_| nonzero(rng)),
    }
}

/// A polygon with no three collinear control points.
pub fn polygon(rng: &mut TestRng, kind: Weights) -> ControlPolygon {
    loop {
        let pts: [Point2; 4] = std::array::from_fn(|_| point(rng));
        let p = ControlPolygon::new(pts, weights(rng, kind));
        if p.profile().collinear_triples.is_empty() {
            return p;
        }
    }
}

pub fn polygons(seed: u64, n: usize, kind: Weights) -> Vec<ControlPolygon> {
    let mut r = rng(seed);
    (0..n).map(|_| polygon(&mut r, kind)).collect()
}

/// A rational in `(0, 1)`.
pub fn unit_param(rng: &mut TestRng) -> Scalar {
    let d = rng.gen_range(2..=40);
    ratio(rng.gen_range(1..d), d)
}

/// A rational in `[-1, 2]`, off the unit interval too.
pub fn wide_param(rng: &mut TestRng) -> Scalar {
    ratio(rng.gen_range(-40..=80), 40)
}

pub fn affine(rng: &mut TestRng) -> AffineMap {
    loop {
        let m = [
            [rational(rng, 9, 5), rational(rng, 9, 5)],
            [rational(rng, 9, 5), rational(rng, 9, 5)],
        ];
        let a = AffineMap::new(m, [rational(rng, 9, 4), rational(rng, 9, 4)]);
        if a.det() != int(0) {
            return a;
        }
    }
}

fn pt(x: Scalar, y: Scalar) -> Point2 {
    Point2::new(x, y)
}

fn ints(c: [(i64, i64); 4]) -> ControlPolygon {
    ControlPolygon::with_unit_weights(c.map(|(x, y)| Point2::from_ints(x, y)))
}

pub fn example1() -> ControlPolygon {
    ints([(0, 0), (0, 1), (1, 1), (1, 0)])
}

pub fn example2() -> ControlPolygon {
    ints([(0, 0), (1, 1), (0, 1), (1, 0)])
}

pub fn example3() -> ControlPolygon {
    ints([(0, 0), (0, 1), (1, 0), (1, 1)])
}

/// The parabola.
pub fn example4() -> ControlPolygon {
    ControlPolygon::with_unit_weights([
        Point2::from_ints(0, 0),
        pt(ratio(1, 3), int(1)),
        pt(ratio(2, 3), int(1)),
        Point2::from_ints(1, 0),
    ])
}

/// `c0`, `c2`, `c3` collinear.
pub fn example5() -> ControlPolygon {
    ControlPolygon::with_unit_weights([
        Point2::from_ints(0, 0),
        Point2::from_ints(0, 1),
        pt(ratio(1, 2), int(0)),
        Point2::from_ints(1, 0),
    ])
}

/// The curve with a single parameter of its loop inside `[0, 1]`.
pub fn trimmed_loop() -> ControlPolygon {
    ControlPolygon::with_unit_weights([
        pt(ratio(1, 4), int(0)),
        pt(ratio(9, 8), ratio(1, 2)),
        pt(ratio(13, 16), ratio(3, 4)),
        pt(ratio(17, 32), ratio(19, 24)),
    ])
}

/// Points of the ellipse example; weights are not part of the data.
pub fn ellipse_points() -> [Point2; 4] {
    [
        pt(ratio(1, 2), int(0)),
        Point2::from_ints(0, 1),
        pt(int(1), ratio(1, 2)),
        Point2::from_ints(0, 0),
    ]
}

pub fn collinear_line() -> ControlPolygon {
    ints([(0, 0), (1, 1), (2, 2), (3, 3)])
}
