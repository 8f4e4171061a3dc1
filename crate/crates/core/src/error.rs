use thiserror::Error;

/// Errors raised by state construction, measures and bound evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A bound was requested whose hypothesis does not hold for the given vector.
    #[error("bound hypothesis violated at index {index} (margin {margin:e})")]
    ConditionViolated { index: usize, margin: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
