use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("elements belong to different towers ({0} vs {1})")]
    TowerMismatch(String, String),

    #[error("division by zero in tower arithmetic")]
    DivisionByZero,

    #[error("degenerate radicand: cannot adjoin a square root of zero")]
    DegenerateRadicand,

    #[error("duplicate tower level label {0:?}")]
    DuplicateLabel(String),

    #[error("element does not embed: {0}")]
    BadEmbedding(String),

    #[error("curve roots must be pairwise distinct")]
    RepeatedRoots,

    #[error("degenerate working model: repeated cubic roots")]
    DegenerateModel,

    #[error("point ({0}, {1}) is not on the curve")]
    PointNotOnCurve(String, String),

    #[error("halving failed: {0}")]
    HalvingFailure(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("inconsistent automorphism image at level {0:?}: image^2 != mapped radicand")]
    InconsistentImage(String),

    #[error("automorphism unavailable: {0}")]
    AutomorphismUnavailable(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
