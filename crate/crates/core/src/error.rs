use thiserror::Error;

use crate::relcore::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground-set mismatch: {left} points vs {right} points")]
    GroundMismatch { left: usize, right: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid quasi-uniform space: {0}")]
    Invalid(Box<ValidationReport>),

    #[error("invalid ground set: {0}")]
    InvalidGround(String),

    #[error("space is not T0 (points {0} and {1} are indistinguishable)")]
    NotT0(usize, usize),

    #[error("space is not uniform (base relation {0} is not symmetric)")]
    NotUniform(usize),

    #[error("subset is not dense in the symmetrized topology (point {0} is missed)")]
    NotDense(usize),

    #[error("empty set where a nonempty one is required")]
    EmptySet,

    #[error("hypothesis violated at point {point}: no base entourage V has V(x) = {{x}} or V^-1(x) = {{x}}")]
    HypothesisViolated { point: usize },

    #[error("sequence does not converge to {target} within tolerance {tolerance} (last term off by {gap})")]
    NonConvergent {
        target: String,
        tolerance: String,
        gap: String,
    },

    #[error("filter base is not descending at position {0}")]
    NonDescending(usize),

    #[error("bounds too small: {0}")]
    BoundsTooSmall(String),

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEps(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("malformed caps: {0}")]
    MalformedCaps(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
