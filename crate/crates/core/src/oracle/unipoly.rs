use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyBasis {
    Monomial,
    /// Normalized Bernstein basis of degree `len - 1` on `[0, 1]`.
    Bernstein,
}

/// Dense univariate polynomial in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    basis: PolyBasis,
    coeffs: Vec<Scalar>,
}

fn binom(n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Scalar::from_integer(r)
}

impl UniPoly {
    pub fn monomial(coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly {
            basis: PolyBasis::Monomial,
            coeffs,
        };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn bernstein(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "Bernstein form needs a degree");
        UniPoly {
            basis: PolyBasis::Bernstein,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        UniPoly::monomial(vec![])
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::monomial(vec![c])
    }

    pub fn t() -> Self {
        UniPoly::monomial(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn one_minus_t() -> Self {
        UniPoly::monomial(vec![Scalar::one(), -Scalar::one()])
    }

    pub fn basis(&self) -> PolyBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Exact degree in monomial form; formal degree in Bernstein form.
    pub fn degree(&self) -> Option<usize> {
        match self.basis {
            PolyBasis::Monomial => self.coeffs.len().checked_sub(1),
            PolyBasis::Bernstein => Some(self.coeffs.len() - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_monomial(&self) -> UniPoly {
        match self.basis {
            PolyBasis::Monomial => self.clone(),
            PolyBasis::Bernstein => {
                let n = self.coeffs.len() - 1;
                let mut out = vec![Scalar::zero(); n + 1];
                for (k, c) in self.coeffs.iter().enumerate() {
                    let ck = c * binom(n, k);
                    for j in 0..=n - k {
                        let term = &ck * binom(n - k, j);
                        if j % 2 == 0 {
                            out[k + j] += term;
                        } else {
                            out[k + j] -= term;
                        }
                    }
                }
                UniPoly::monomial(out)
            }
        }
    }

    /// Bernstein form of degree `n`, or `None` when the degree exceeds `n`.
    pub fn to_bernstein(&self, n: usize) -> Option<UniPoly> {
        let m = self.to_monomial();
        if m.degree().is_some_and(|d| d > n) {
            return None;
        }
        let mut out = vec![Scalar::zero(); n + 1];
        for (j, c) in m.coeffs.iter().enumerate() {
            let cj = c / binom(n, j);
            for (k, o) in out.iter_mut().enumerate().skip(j) {
                *o += &cj * binom(k, j);
            }
        }
        Some(UniPoly::bernstein(out))
    }

    fn rebase(&self, like: PolyBasis, n: usize) -> UniPoly {
        match like {
            PolyBasis::Monomial => self.to_monomial(),
            PolyBasis::Bernstein => self.to_bernstein(n).expect("degree fits"),
        }
    }

    fn result_basis(&self, o: &UniPoly) -> PolyBasis {
        if self.basis == PolyBasis::Bernstein && o.basis == PolyBasis::Bernstein {
            PolyBasis::Bernstein
        } else {
            PolyBasis::Monomial
        }
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let (a, b) = (self.to_monomial(), o.to_monomial());
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = Scalar::zero();
        let sum = UniPoly::monomial(
            (0..n)
                .map(|k| a.coeffs.get(k).unwrap_or(&z) + b.coeffs.get(k).unwrap_or(&z))
                .collect(),
        );
        let deg = self.degree().unwrap_or(0).max(o.degree().unwrap_or(0));
        sum.rebase(self.result_basis(o), deg)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> UniPoly {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        match self.basis {
            PolyBasis::Monomial => UniPoly::monomial(coeffs),
            PolyBasis::Bernstein => UniPoly::bernstein(coeffs),
        }
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        let (a, b) = (self.to_monomial(), o.to_monomial());
        let mut out = vec![Scalar::zero(); (a.coeffs.len() + b.coeffs.len()).saturating_sub(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let prod = UniPoly::monomial(out);
        let deg = self.degree().unwrap_or(0) + o.degree().unwrap_or(0);
        prod.rebase(self.result_basis(o), deg)
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        (0..n).fold(UniPoly::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        let m = self.to_monomial();
        m.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    /// Quotient when `o` divides `self` exactly.
    pub fn div_exact(&self, o: &UniPoly) -> Option<UniPoly> {
        let mut rem = self.to_monomial().coeffs;
        let d = o.to_monomial();
        let dd = d.degree()?;
        if rem.len() < dd + 1 {
            return rem.iter().all(Zero::is_zero).then(UniPoly::zero);
        }
        let lead = &d.coeffs[dd];
        let mut q = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| UniPoly::monomial(q))
    }

    /// Equality as functions, regardless of basis.
    pub fn same_poly(&self, o: &UniPoly) -> bool {
        self.to_monomial() == o.to_monomial()
    }
}
