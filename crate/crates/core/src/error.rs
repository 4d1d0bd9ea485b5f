use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input (vertex indices, degrees, weights).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text could not be decoded.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A random generator gave up after its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),

    /// The exact search hit its node budget before reaching a verdict.
    #[error("search budget of {budget} nodes exhausted")]
    SearchBudget { budget: u64 },

    /// The operation's precondition does not hold for the given state.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
