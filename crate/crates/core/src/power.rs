//! Bivariate polynomials in the monomial basis.
//!
//! Coefficients are stored by total degree, then by the power of `y`:
//! `1, x, y, x², xy, y², x³, x²y, xy², y³, ...`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::geometry::{Line, Point2};
use crate::scalar::{canonical, int, parse_scalar, ParseScalarError, Scalar};

/// Position of `x^i y^j`.
pub fn monomial_index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

fn monomial_of(k: usize) -> (usize, usize) {
    let mut d = 0;
    while (d + 1) * (d + 2) / 2 <= k {
        d += 1;
    }
    let j = k - d * (d + 1) / 2;
    (d - j, j)
}

fn len_for_degree(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Dense bivariate polynomial of arbitrary total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Scalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        BiPoly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_line(l: &Line) -> Self {
        BiPoly {
            coeffs: vec![l.c.clone(), l.a.clone(), l.b.clone()],
        }
        .trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        BiPoly { coeffs }.trimmed()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1).map(|k| {
            let (i, j) = monomial_of(k);
            i + j
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs.get(monomial_index(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        BiPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Scalar) -> BiPoly {
        BiPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let (Some(da), Some(db)) = (self.degree(), o.degree()) else {
            return BiPoly::zero();
        };
        let mut out = vec![Scalar::zero(); len_for_degree(da + db)];
        for (ka, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let (ia, ja) = monomial_of(ka);
            for (kb, b) in o.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let (ib, jb) = monomial_of(kb);
                out[monomial_index(ia + ib, ja + jb)] += a * b;
            }
        }
        BiPoly::from_coeffs(out)
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        (0..n).fold(BiPoly::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, p: &Point2) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (i, j) = monomial_of(k);
            acc += c * num_traits::pow(p.x.clone(), i) * num_traits::pow(p.y.clone(), j);
        }
        acc
    }

    /// `self(x(u, v), y(u, v))`.
    pub fn compose(&self, x: &BiPoly, y: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (i, j) = monomial_of(k);
            acc = acc.add(&x.pow(i as u32).mul(&y.pow(j as u32)).scale(c));
        }
        acc
    }

    pub fn d_dx(&self) -> BiPoly {
        let mut out = vec![Scalar::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            let (i, j) = monomial_of(k);
            if i > 0 {
                out[monomial_index(i - 1, j)] += c * int(i as i64);
            }
        }
        BiPoly::from_coeffs(out)
    }

    pub fn d_dy(&self) -> BiPoly {
        let mut out = vec![Scalar::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            let (i, j) = monomial_of(k);
            if j > 0 {
                out[monomial_index(i, j - 1)] += c * int(j as i64);
            }
        }
        BiPoly::from_coeffs(out)
    }

    fn padded<const N: usize>(&self) -> Option<[Scalar; N]> {
        if self.coeffs.len() > N {
            return None;
        }
        Some(std::array::from_fn(|k| self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)))
    }
}

/// Ratio `k` with `a = k * b`, if one exists and `b` is nonzero.
pub fn proportionality(a: &[Scalar], b: &[Scalar]) -> Option<Scalar> {
    let pivot = b.iter().position(|x| !x.is_zero())?;
    let k = &a[pivot] / &b[pivot];
    a.iter().zip(b).all(|(x, y)| *x == &k * y).then_some(k)
}

fn write_coeffs(f: &mut fmt::Formatter<'_>, c: &[Scalar]) -> fmt::Result {
    for (k, x) in c.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_coeffs<const N: usize>(s: &str) -> Result<[Scalar; N], ParseScalarError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(ParseScalarError(format!("expected {N} coefficients in {s:?}")));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(parse_scalar(p)?);
    }
    Ok(out.try_into().expect("length checked"))
}

macro_rules! power_form {
    ($name:ident, $n:literal, $deg:literal) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            pub coeffs: [Scalar; $n],
        }

        impl $name {
            pub fn new(coeffs: [Scalar; $n]) -> Self {
                $name { coeffs }
            }

            pub fn zero() -> Self {
                $name::new(std::array::from_fn(|_| Scalar::zero()))
            }

            /// `None` when the polynomial has higher degree.
            pub fn from_poly(p: &BiPoly) -> Option<Self> {
                p.padded::<$n>().map($name::new)
            }

            pub fn to_poly(&self) -> BiPoly {
                BiPoly::from_coeffs(self.coeffs.to_vec())
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(|c| c.is_zero())
            }

            pub fn eval(&self, p: &Point2) -> Scalar {
                self.to_poly().eval(p)
            }

            pub fn gradient(&self, p: &Point2) -> (Scalar, Scalar) {
                let q = self.to_poly();
                (q.d_dx().eval(p), q.d_dy().eval(p))
            }

            /// Primitive integer coefficients with positive leading entry.
            pub fn canonical(&self) -> Self {
                $name::new(canonical(&self.coeffs).try_into().expect("same length"))
            }

            /// Scale `k` with `self = k * reference`.
            pub fn scale_to(&self, reference: &Self) -> Option<Scalar> {
                proportionality(&self.coeffs, &reference.coeffs)
            }

            pub fn total_degree(&self) -> Option<usize> {
                self.to_poly().degree()
            }

            pub const DEGREE: usize = $deg;
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_coeffs(f, &self.coeffs)
            }
        }

        impl FromStr for $name {
            type Err = ParseScalarError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                parse_coeffs::<$n>(s).map($name::new)
            }
        }
    };
}

power_form!(PowerCubic, 10, 3);
power_form!(PowerConic, 6, 2);

impl PowerConic {
    pub fn to_cubic(&self) -> PowerCubic {
        PowerCubic::from_poly(&self.to_poly()).expect("degree two fits")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn index_layout() {
        let order = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
        for (k, &(i, j)) in order.iter().enumerate() {
            assert_eq!(monomial_index(i, j), k);
            assert_eq!(monomial_of(k), (i, j));
        }
    }

    #[test]
    fn products_and_derivatives() {
        let x = BiPoly::from_line(&Line::new(int(1), int(0), int(0)));
        let y1 = BiPoly::from_line(&Line::new(int(0), int(1), int(-1)));
        let p = x.mul(&y1).mul(&x);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coeff(2, 1), int(1));
        assert_eq!(p.coeff(2, 0), int(-1));
        assert_eq!(p.d_dx().coeff(1, 1), int(2));
        assert_eq!(p.d_dy().coeff(2, 0), int(1));
        assert!(p.add(&p.scale(&int(-1))).is_zero());
        let pt = Point2::new(ratio(1, 2), int(3));
        assert_eq!(p.eval(&pt), ratio(1, 2));
        assert_eq!(x.pow(3).coeff(3, 0), int(1));
    }

    #[test]
    fn composition_with_affine_maps() {
        // q = x^2 y - 3y + 1 at x = 2u + 1, y = v / 3
        let q = BiPoly::from_coeffs(vec![int(1), int(0), int(-3), int(0), int(0), int(0), int(0), int(1)]);
        let x = BiPoly::from_coeffs(vec![int(1), int(2), int(0)]);
        let y = BiPoly::from_coeffs(vec![int(0), int(0), ratio(1, 3)]);
        let r = q.compose(&x, &y);
        for (u, v) in [(0, 0), (1, 2), (-3, 5)] {
            let pt = Point2::from_ints(u, v);
            let img = Point2::new(int(2 * u + 1), ratio(v, 3));
            assert_eq!(r.eval(&pt), q.eval(&img));
        }
    }

    #[test]
    fn text_round_trip() {
        let c = PowerCubic::new(std::array::from_fn(|k| ratio(k as i64 - 4, 3)));
        let s = c.to_string();
        assert_eq!(s, "-4/3 -1 -2/3 -1/3 0 1/3 2/3 1 4/3 5/3");
        assert_eq!(s.parse::<PowerCubic>().unwrap(), c);
        assert!("1 2 3".parse::<PowerCubic>().is_err());
        assert_eq!(c.canonical().coeffs[0], int(4));
    }

    #[test]
    fn proportional_detection() {
        let a = [int(2), int(0), int(-4)];
        let b = [int(-1), int(0), int(2)];
        assert_eq!(proportionality(&a, &b), Some(int(-2)));
        assert_eq!(proportionality(&a, &[int(1), int(1), int(2)]), None);
        assert_eq!(proportionality(&a, &[int(0), int(0), int(0)]), None);
    }
}
