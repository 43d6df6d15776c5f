//! Sylvester resultant implicitization, independent of the basis method.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::ControlPolygon;
use crate::power::{monomial_index, PowerCubic};
use crate::scalar::{int, Scalar};

use super::compose::curve_polys;
use super::unipoly::UniPoly;

/// Sylvester matrix of two polynomials given by formal coefficient lists
/// (constant term first).
pub fn sylvester(f: &[Scalar], g: &[Scalar]) -> Vec<Vec<Scalar>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut r = vec![Scalar::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            r[shift + k] = c.clone();
        }
        rows.push(r);
    }
    for shift in 0..m {
        let mut r = vec![Scalar::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            r[shift + k] = c.clone();
        }
        rows.push(r);
    }
    rows
}

/// Fraction-free Gaussian elimination on an integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact determinant of a rational matrix, clearing denominators row by row.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    if m.is_empty() {
        return Scalar::one();
    }
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            r.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    Scalar::new(bareiss_det(rows), scale)
}

pub fn resultant(f: &[Scalar], g: &[Scalar]) -> Scalar {
    det(&sylvester(f, g))
}

fn formal(p: &UniPoly, n: usize) -> Vec<Scalar> {
    let c = p.to_monomial();
    (0..=n).map(|k| c.coeffs().get(k).cloned().unwrap_or_else(Scalar::zero)).collect()
}

fn lagrange(nodes: &[Scalar], i: usize) -> UniPoly {
    let mut l = UniPoly::constant(Scalar::one());
    for (_, xj) in nodes.iter().enumerate().filter(|&(j, _)| j != i) {
        let factor = UniPoly::monomial(vec![-xj, Scalar::one()]);
        l = l.mul(&factor).scale(&(Scalar::one() / (&nodes[i] - xj)));
    }
    l
}

/// Eliminates `t` from `x w(t) - X(t)` and `y w(t) - Y(t)`.
///
/// Each polynomial keeps its true degree in `t`, so curves with a lower
/// degree parametrization eliminate correctly. The resultant has degree at
/// most three in each variable and a 4x4 grid of exact values fixes it.
pub fn resultant_implicitize(p: &ControlPolygon) -> Result<PowerCubic> {
    let [xp, yp, wp] = curve_polys(p);
    let deg = |a: &UniPoly, b: &UniPoly| a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let (df, dg) = (deg(&wp, &xp), deg(&wp, &yp));
    if df == 0 || dg == 0 {
        return Err(Error::DegenerateResultant);
    }
    let (wf, xs) = (formal(&wp, df), formal(&xp, df));
    let (wg, ys) = (formal(&wp, dg), formal(&yp, dg));
    let nodes: Vec<Scalar> = (-1..3).map(int).collect();
    let mut values = vec![vec![Scalar::zero(); 4]; 4];
    for (a, x) in nodes.iter().enumerate() {
        for (b, y) in nodes.iter().enumerate() {
            let f: Vec<Scalar> = wf.iter().zip(&xs).map(|(w, c)| x * w - c).collect();
            let g: Vec<Scalar> = wg.iter().zip(&ys).map(|(w, c)| y * w - c).collect();
            values[a][b] = resultant(&f, &g);
        }
    }
    let basis: Vec<UniPoly> = (0..4).map(|i| lagrange(&nodes, i)).collect();
    let mut grid = vec![vec![Scalar::zero(); 4]; 4];
    for (a, la) in basis.iter().enumerate() {
        for (b, lb) in basis.iter().enumerate() {
            let v = &values[a][b];
            if v.is_zero() {
                continue;
            }
            for (i, ci) in la.coeffs().iter().enumerate() {
                for (j, cj) in lb.coeffs().iter().enumerate() {
                    grid[i][j] += v * ci * cj;
                }
            }
        }
    }
    let mut out = PowerCubic::zero();
    for (i, row) in grid.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if i + j > 3 {
                if !c.is_zero() {
                    return Err(Error::Unsupported("resultant exceeds total degree three"));
                }
            } else {
                out.coeffs[monomial_index(i, j)] = c.clone();
            }
        }
    }
    if out.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    Ok(out.canonical())
}
