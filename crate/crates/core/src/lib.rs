//! Exact implicitization of planar rational cubic Bézier curves.
//!
//! A curve is given by four control points and four weights. Its implicit
//! equation is assembled from four products of the lines through pairs of
//! control points, with coefficients that depend only on signed areas and
//! weights. Everything runs in exact rational arithmetic; floating point
//! appears only for the roots of one quadratic and for cube roots of conic
//! weights.
//!
//! ```
//! use ratcubic::{implicitize, ControlPolygon, Point2, int};
//!
//! let p = ControlPolygon::with_unit_weights([
//!     Point2::from_ints(0, 0),
//!     Point2::from_ints(0, 1),
//!     Point2::from_ints(1, 1),
//!     Point2::from_ints(1, 0),
//! ]);
//! let q = implicitize(&p).unwrap();
//! assert_eq!(q.b, [int(72), int(-18), int(-18), int(8)]);
//! ```

pub mod degeneracy;
pub mod error;
pub mod geometry;
pub mod implicit;
pub mod oracle;
pub mod power;
pub mod scalar;
pub mod singularity;

pub use degeneracy::{
    check_weights, conic_class, conic_implicit, conic_weights_for_points, conic_weights_with_ratio,
    implicitize_any, implicitize_with, is_conic, ConicClass, ConicImplicit, ConicType, ConicWeights,
    ImplicitResult, Piece, ResolveOptions,
};
pub use error::{Error, Result};
pub use geometry::{AffineMap, ControlPolygon, DiagonalPoints, GeometryProfile, Line, Point2};
pub use implicit::{
    affine_invariance_check, coefficients, coefficients_from_phi, implicitize,
    normalized_coefficients, EvalMode, ImplicitCubic,
};
pub use power::{BiPoly, PowerConic, PowerCubic};
pub use scalar::{int, parse_scalar, ratio, RealScalar, Scalar};
pub use singularity::{
    analyze, double_point, endpoint_singularity, singularity_parameters, split_lines,
    unwanted_check, DoublePoint, DoublePointKind, EndpointSingularity, Location, ParameterRoots,
    PhiSet, SingularityReport, SplitLines, SplitOmission,
};
