//! Independent verification: resultant elimination, symbolic compositions,
//! the independence determinant and the limiting weight configurations.

mod checks;
mod compose;
mod resultant;
mod unipoly;

pub use checks::{
    independence_determinant, independence_row_factor, limiting_basis_check, limiting_weights,
    roots_in_unit_interval, LimitCheck,
};
pub use compose::{
    basis_cofactors, cofactor_leading, compose_affine, compose_line, conic_composition, curve_polys,
    line_factor, vanishing_coefficients, verify_conic_composition, verify_vanishing_identity,
    LineComposition,
};
pub use resultant::{bareiss_det, det, resultant, resultant_implicitize, sylvester};
pub use unipoly::{PolyBasis, UniPoly};

use crate::error::Result;
use crate::geometry::ControlPolygon;
use crate::implicit::implicitize;
use crate::power::PowerCubic;
use num_traits::Zero;

use crate::scalar::Scalar;

/// Outcome of comparing two implicit polynomials up to a constant factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub matched: bool,
    /// `candidate = scale * reference` when matched.
    pub scale: Option<Scalar>,
    pub residual: Option<String>,
}

pub fn compare(candidate: &PowerCubic, reference: &PowerCubic) -> OracleVerdict {
    if let Some(k) = candidate.scale_to(reference).filter(|k| !k.is_zero()) {
        return OracleVerdict {
            matched: true,
            scale: Some(k),
            residual: None,
        };
    }
    let (a, b) = (candidate.canonical(), reference.canonical());
    let first = (0..10).find(|&k| a.coeffs[k] != b.coeffs[k]);
    OracleVerdict {
        matched: false,
        scale: None,
        residual: Some(match first {
            Some(k) => format!("monomial {k}: {} vs {}", a.coeffs[k], b.coeffs[k]),
            None => "reference is zero".to_string(),
        }),
    }
}

/// Basis expansion compared against resultant elimination.
pub fn cross_check(p: &ControlPolygon) -> Result<OracleVerdict> {
    let basis = implicitize(p)?.expand_power_basis();
    let reference = resultant_implicitize(p)?;
    Ok(compare(&basis, &reference))
}
