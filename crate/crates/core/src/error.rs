use thiserror::Error;

/// Failures raised by the arithmetic substrate, the curve models and the
/// construction pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("square root of a negative value")]
    NegativeInput,
    #[error("value is not a perfect square")]
    NotASquare,
    #[error("duplicate interpolation node")]
    DuplicateNode,
    #[error("expected {expected} interpolation samples, got {got}")]
    SampleCount { expected: usize, got: usize },
    #[error("degenerate curve: {0}")]
    DegenerateCurve(&'static str),
    #[error("denominator factor {factor} vanishes at c = {c}")]
    DenominatorVanishes { factor: &'static str, c: String },
    #[error("closed-form and linear-solve coefficients disagree")]
    RouteMismatch,
    #[error("quadric coefficients do not vanish at (1:1:1:1)")]
    SurfaceMissesBasePoint,
    #[error("degenerate chord: a1*u + a2*v + a3*w = 0")]
    DegenerateChord,
    #[error("singular quartic: 4I^3 - J^2 = 0")]
    SingularQuartic,
    #[error("points at infinity are not supported by the quartic model")]
    UnsupportedPoint,
    #[error("point lies in the exceptional locus of the birational map")]
    ExceptionalPoint,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("seed point has finite order")]
    FiniteOrder,
    #[error("multiplier j must be nonzero")]
    ZeroMultiplier,
    #[error("doubling count {0} outside 1..=8")]
    DoublingsOutOfRange(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
