//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gaussian exponent signs differ: s = {left} vs s = {right}")]
    ClassMismatch { left: i8, right: i8 },
    #[error("float scales differ ({left} vs {right}) where an exact operation requires equal scales")]
    ScaleMismatch { left: f64, right: f64 },
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("degree {n} lies in a gap of the admissible degree set; admissible: {admissible}")]
    DegreeGap { n: i64, admissible: String },
    #[error("index nu = {nu} is not admissible here; admissible: {admissible}")]
    InadmissibleNu { nu: i64, admissible: String },
    #[error("operation requires decaying states (s = -1), got s = {s}")]
    NonDecaying { s: i8 },
    #[error("potential is not finite at grid point x = {x}")]
    PoleOnGrid { x: f64 },
    #[error("requested {k} eigenvalues but the grid supports at most {max}")]
    TooManyLevels { k: usize, max: usize },
    #[error("grid too coarse: {m} subintervals, need at least {min}")]
    GridTooCoarse { m: usize, min: usize },
    #[error("quadrature error estimate {estimate:e} above the requested bound {bound:e}")]
    QuadratureNotConverged { estimate: f64, bound: f64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
