use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("control points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("curve denominator vanishes at t = {0}")]
    ZeroDenominator(String),
    #[error("control points {0:?} are collinear")]
    CollinearInput(Vec<[usize; 3]>),
    #[error("all four coefficients vanish; the curve is a conic")]
    ConicDegeneration,
    #[error("normalization factor vanishes: {0} is zero")]
    ZeroFactor(&'static str),
    #[error("reduced evaluation needs lambda_0 and lambda_3 nonzero")]
    ReducedModeUnavailable,
    #[error("the double point sits on an end point (c0: {at_c0}, c3: {at_c3})")]
    EndpointSingularity { at_c0: bool, at_c3: bool },
    #[error("the double point lies at infinity")]
    PointAtInfinity,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("the curve is not a conic (phi_1 = {phi1}, phi_2 = {phi2})")]
    NotConic { phi1: String, phi2: String },
    #[error("subdivision did not remove collinearity: {0}")]
    UnresolvableDegeneracy(String),
    #[error("unsupported weights: {0}")]
    DegenerateWeights(&'static str),
    #[error("resultant vanishes identically")]
    DegenerateResultant,
    #[error("unsupported configuration: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
