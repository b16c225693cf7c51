use thiserror::Error;

/// Errors raised by the arithmetic, rewriting and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("reduction did not terminate within {steps} steps")]
    FuelExhausted { steps: usize },

    #[error("malformed reduction system: {0}")]
    MalformedSystem(String),

    #[error("precondition failed: {condition} ({detail})")]
    PreconditionFailed { condition: String, detail: String },

    #[error("extended system is not confluent: {0} unresolvable ambiguities")]
    NotConfluent(usize),

    #[error("condition failed: {0}")]
    ConditionFailed(String),

    #[error("product not determined by the known fusion rules: {0}")]
    Undetermined(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(condition: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::PreconditionFailed {
            condition: condition.into(),
            detail: detail.into(),
        }
    }
}
