use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },

    #[error("division is not exact (relative residual {residual:e})")]
    NotDivisible { residual: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("matrices have a common eigenvector (tr of commutator = {trace})")]
    Reducible { trace: String },

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("point lies on an excluded hypersurface: {0}")]
    ExcludedHypersurface(String),

    #[error("theta is required for the X4 closed form")]
    MissingTheta,

    #[error("character does not lie on component {label}")]
    LabelMismatch { label: String },

    #[error("character does not match any irreducible component")]
    Unclassified,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
