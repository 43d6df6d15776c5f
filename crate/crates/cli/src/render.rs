//! Sign-field rendering of an implicit form on a pixel grid.
//!
//! Every grid corner is classified by the exact sign of the implicit
//! polynomial; a cell whose corners disagree (or touch zero) is a boundary
//! cell and approximates the curve.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use ratcubic::scalar::to_f64;
use ratcubic::{analyze, int, ratio, BiPoly, ControlPolygon, ImplicitResult, Line, Scalar, SplitLines};

use crate::error::CliError;

pub const DEFAULT_GRID: (usize, usize) = (128, 128);
const CELL_PX: usize = 4;
const QUADRANT_SAMPLES: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Viewport {
    pub x0: Scalar,
    pub y0: Scalar,
    pub x1: Scalar,
    pub y1: Scalar,
}

impl Viewport {
    pub fn new(x0: Scalar, y0: Scalar, x1: Scalar, y1: Scalar) -> Result<Self, CliError> {
        if x0 >= x1 || y0 >= y1 {
            return Err(CliError::Usage(format!(
                "degenerate viewport {x0},{y0},{x1},{y1}"
            )));
        }
        Ok(Viewport { x0, y0, x1, y1 })
    }

    /// Control point bounding box grown by 10%, split evenly between sides.
    pub fn around(p: &ControlPolygon) -> Self {
        let (lo, hi) = p.bounding_box();
        let (mut dx, mut dy) = (&hi.x - &lo.x, &hi.y - &lo.y);
        if dx == int(0) {
            dx = if dy == int(0) { int(1) } else { dy.clone() };
        }
        if dy == int(0) {
            dy = dx.clone();
        }
        let (mx, my) = (&dx / int(20), &dy / int(20));
        let cx = (&lo.x + &hi.x) / int(2);
        let cy = (&lo.y + &hi.y) / int(2);
        let (hx, hy) = (&dx / int(2) + &mx, &dy / int(2) + &my);
        Viewport {
            x0: &cx - &hx,
            y0: &cy - &hy,
            x1: cx + hx,
            y1: cy + hy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub viewport: Viewport,
    pub width: usize,
    pub height: usize,
    pub show_polygon: bool,
    pub show_split: bool,
    pub shade: bool,
    pub restrict: bool,
}

impl RenderSpec {
    pub fn new(viewport: Viewport, width: usize, height: usize) -> Result<Self, CliError> {
        if width == 0 || height == 0 {
            return Err(CliError::Usage("grid must be at least 1x1".into()));
        }
        Ok(RenderSpec {
            viewport,
            width,
            height,
            show_polygon: true,
            show_split: true,
            shade: true,
            restrict: false,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderStats {
    pub boundary: usize,
    pub positive: usize,
    pub negative: usize,
    pub masked: usize,
    /// Boundary cells hidden by the mask.
    pub masked_boundary: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Negative,
    Positive,
    Boundary,
    Masked,
}

impl Cell {
    fn fill(self) -> &'static str {
        match self {
            Cell::Negative => "#d6e4f0",
            Cell::Positive => "#f3e0cf",
            Cell::Boundary => "#1b1f24",
            Cell::Masked => "#ececec",
        }
    }
}

/// A polynomial pulled back to the half-cell lattice and cleared of
/// denominators by a positive factor, so its signs are unchanged.
struct GridPoly {
    terms: Vec<(BigInt, u32, u32)>,
}

impl GridPoly {
    /// Lattice point `(i, j)` sits at `x0 + i (x1 - x0) / 2w`, `y1 - j (y1 - y0) / 2h`.
    fn new(q: &BiPoly, vp: &Viewport, w: usize, h: usize) -> Self {
        let su = (&vp.x1 - &vp.x0) / int(2 * w as i64);
        let sv = (&vp.y0 - &vp.y1) / int(2 * h as i64);
        let x = BiPoly::from_coeffs(vec![vp.x0.clone(), su, int(0)]);
        let y = BiPoly::from_coeffs(vec![vp.y1.clone(), int(0), sv]);
        let r = q.compose(&x, &y);
        let den = r
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut terms = Vec::new();
        let mut k = 0;
        'outer: for d in 0u32.. {
            for j in 0..=d {
                let Some(c) = r.coeffs().get(k) else { break 'outer };
                if !c.is_zero() {
                    terms.push((c.numer() * (&den / c.denom()), d - j, j));
                }
                k += 1;
            }
        }
        GridPoly { terms }
    }

    fn sign_at(&self, i: i64, j: i64) -> i8 {
        let v: BigInt = self
            .terms
            .iter()
            .map(|(c, a, b)| c * BigInt::from(i.pow(*a) * j.pow(*b)))
            .sum();
        match v.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

/// The implicit forms whose zero sets are drawn; the first one shades.
fn forms(res: &ImplicitResult) -> Vec<BiPoly> {
    match res {
        ImplicitResult::Cubic(ic) => vec![ic.expand_power_basis().to_poly()],
        ImplicitResult::Conic(q, _) => vec![q.power.to_poly()],
        ImplicitResult::Piecewise(pieces) => pieces.iter().flat_map(|pc| forms(&pc.result)).collect(),
    }
}

fn corner_signs(g: &GridPoly, spec: &RenderSpec) -> Vec<Vec<i8>> {
    (0..=spec.height as i64)
        .into_par_iter()
        .map(|j| (0..=spec.width as i64).map(|i| g.sign_at(2 * i, 2 * j)).collect())
        .collect()
}

/// Split-line quadrants visited by the curve segment over `[0, 1]`.
fn visited_quadrants(p: &ControlPolygon, s: &SplitLines) -> BTreeSet<(i8, i8)> {
    (1..QUADRANT_SAMPLES)
        .filter_map(|k| p.eval(&ratio(k, QUADRANT_SAMPLES)).ok())
        .map(|x| s.quadrant(&x))
        .filter(|&(a, b)| a != 0 && b != 0)
        .collect()
}

struct Mask {
    s1: GridPoly,
    s2: GridPoly,
    keep: BTreeSet<(i8, i8)>,
}

impl Mask {
    /// Decided at the centre of cell `(i, j)`.
    fn hides(&self, i: usize, j: usize) -> bool {
        let (u, v) = (2 * i as i64 + 1, 2 * j as i64 + 1);
        let q = (self.s1.sign_at(u, v), self.s2.sign_at(u, v));
        q.0 != 0 && q.1 != 0 && !self.keep.contains(&q)
    }
}

fn split_of(res: &ImplicitResult) -> Option<(SplitLines, bool)> {
    let ImplicitResult::Cubic(ic) = res else { return None };
    let rep = analyze(&ic.polygon).ok()?;
    let unwanted = rep.double_point.unwanted;
    rep.split.ok().map(|s| (s, unwanted))
}

/// World line clipped to the viewport, in SVG units.
fn clip(l: &Line, vp: &Viewport, w: f64, h: f64) -> Option<((f64, f64), (f64, f64))> {
    let (a, b, c) = (to_f64(&l.a), to_f64(&l.b), to_f64(&l.c));
    let (x0, y0, x1, y1) = (to_f64(&vp.x0), to_f64(&vp.y0), to_f64(&vp.x1), to_f64(&vp.y1));
    let mut hits = Vec::new();
    if b != 0.0 {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    let (first, last) = (*hits.first()?, *hits.last()?);
    let to_svg = |(x, y): (f64, f64)| ((x - x0) / (x1 - x0) * w, (y1 - y) / (y1 - y0) * h);
    Some((to_svg(first), to_svg(last)))
}

pub fn render(p: &ControlPolygon, res: &ImplicitResult, spec: &RenderSpec) -> (String, RenderStats) {
    let (w, h) = (spec.width, spec.height);
    let vp = &spec.viewport;
    let grids: Vec<Vec<Vec<i8>>> = forms(res)
        .iter()
        .map(|q| corner_signs(&GridPoly::new(q, vp, w, h), spec))
        .collect();
    let split = split_of(res);
    let mask = match (&split, spec.restrict) {
        (Some((s, true)), true) => Some(Mask {
            keep: visited_quadrants(p, s),
            s1: GridPoly::new(&BiPoly::from_line(&s.s1_tilde), vp, w, h),
            s2: GridPoly::new(&BiPoly::from_line(&s.s2_tilde), vp, w, h),
        }),
        _ => None,
    };

    let mut stats = RenderStats::default();
    let mut cells = vec![vec![Cell::Positive; w]; h];
    for j in 0..h {
        for i in 0..w {
            let crossing = grids.iter().any(|g| {
                let c = [g[j][i], g[j][i + 1], g[j + 1][i], g[j + 1][i + 1]];
                c.contains(&0) || c.iter().any(|&s| s != c[0])
            });
            let g = &grids[0];
            let total: i32 = [g[j][i], g[j][i + 1], g[j + 1][i], g[j + 1][i + 1]]
                .iter()
                .map(|&s| i32::from(s))
                .sum();
            let mut cell = if crossing {
                Cell::Boundary
            } else if total < 0 {
                Cell::Negative
            } else {
                Cell::Positive
            };
            if let Some(m) = &mask {
                if m.hides(i, j) {
                    stats.masked += 1;
                    stats.masked_boundary += usize::from(cell == Cell::Boundary);
                    cell = Cell::Masked;
                }
            }
            match cell {
                Cell::Boundary => stats.boundary += 1,
                Cell::Positive => stats.positive += 1,
                Cell::Negative => stats.negative += 1,
                Cell::Masked => {}
            }
            cells[j][i] = cell;
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {w} {h}" shape-rendering="crispEdges">"#,
        w * CELL_PX,
        h * CELL_PX
    );
    let _ = writeln!(
        svg,
        "<!-- grid {w}x{h}; viewport {},{},{},{}; boundary {}; masked {} -->",
        vp.x0, vp.y0, vp.x1, vp.y1, stats.boundary, stats.masked
    );
    let _ = writeln!(svg, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##);
    let _ = writeln!(svg, "<g id=\"cells\">");
    for (j, row) in cells.iter().enumerate() {
        let mut i = 0;
        while i < w {
            let c = row[i];
            let mut k = i + 1;
            while k < w && row[k] == c {
                k += 1;
            }
            if spec.shade || c != Cell::Positive && c != Cell::Negative {
                let _ = writeln!(
                    svg,
                    r#"<rect x="{i}" y="{j}" width="{}" height="1" fill="{}"/>"#,
                    k - i,
                    c.fill()
                );
            }
            i = k;
        }
    }
    let _ = writeln!(svg, "</g>");
    let (wf, hf) = (w as f64, h as f64);
    if spec.show_polygon {
        let (x0, y0, x1, y1) = (to_f64(&vp.x0), to_f64(&vp.y0), to_f64(&vp.x1), to_f64(&vp.y1));
        let pts: Vec<String> = p
            .points
            .iter()
            .map(|q| {
                let sx = (to_f64(&q.x) - x0) / (x1 - x0) * wf;
                let sy = (y1 - to_f64(&q.y)) / (y1 - y0) * hf;
                format!("{sx:.4},{sy:.4}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r##"<polyline id="polygon" points="{}" fill="none" stroke="#5a6b7b" stroke-width="0.4" stroke-dasharray="1 1"/>"##,
            pts.join(" ")
        );
    }
    if let (true, Some((s, _))) = (spec.show_split, &split) {
        let _ = writeln!(svg, "<g id=\"split\">");
        for l in [&s.s1_tilde, &s.s2_tilde] {
            if let Some(((ax, ay), (bx, by))) = clip(l, vp, wf, hf) {
                let _ = writeln!(
                    svg,
                    r##"<line x1="{ax:.4}" y1="{ay:.4}" x2="{bx:.4}" y2="{by:.4}" stroke="#b8322a" stroke-width="0.8"/>"##
                );
            }
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    (svg, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratcubic::{implicitize_any, Point2};

    fn square() -> ControlPolygon {
        ControlPolygon::with_unit_weights([
            Point2::from_ints(0, 0),
            Point2::from_ints(0, 1),
            Point2::from_ints(1, 1),
            Point2::from_ints(1, 0),
        ])
    }

    #[test]
    fn default_viewport_adds_ten_percent() {
        let v = Viewport::around(&square());
        assert_eq!(v, Viewport::new(ratio(-1, 20), ratio(-1, 20), ratio(21, 20), ratio(21, 20)).unwrap());
    }

    #[test]
    fn degenerate_specs_are_rejected() {
        assert!(Viewport::new(int(1), int(0), int(1), int(1)).is_err());
        assert!(RenderSpec::new(Viewport::around(&square()), 0, 4).is_err());
    }

    #[test]
    fn square_has_a_boundary() {
        let p = square();
        let res = implicitize_any(&p).unwrap();
        let spec = RenderSpec::new(Viewport::around(&p), 24, 24).unwrap();
        let (svg, stats) = render(&p, &res, &spec);
        assert!(stats.boundary > 0 && stats.positive > 0 && stats.negative > 0);
        assert_eq!(stats.boundary + stats.positive + stats.negative, 24 * 24);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains("id=\"split\""));
    }

    #[test]
    fn clipping_a_diagonal() {
        let vp = Viewport::new(int(0), int(0), int(1), int(1)).unwrap();
        let l = Line::new(int(1), int(-1), int(0));
        let ((ax, ay), (bx, by)) = clip(&l, &vp, 10.0, 10.0).unwrap();
        assert_eq!((ax, ay, bx, by), (0.0, 10.0, 10.0, 0.0));
    }
}
