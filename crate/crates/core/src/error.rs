use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: argument must be at least 1")]
    ZeroArgument { op: &'static str },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("sequence is empty")]
    EmptySequence,

    #[error("term a_{n} is zero; its p-part is undefined")]
    ZeroEntry { n: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("shift {k} must be smaller than the sequence length {len}")]
    ShiftTooLarge { k: usize, len: usize },

    #[error("degenerate polynomial: det(M^{n} - I) = 0")]
    DegeneratePolynomial { n: usize },

    #[error("degenerate matrix: det(A^(c*{n}) - I) = 0")]
    DegenerateMatrix { n: usize },

    #[error("insufficient depth: need {needed}, have {available}")]
    InsufficientDepth { needed: usize, available: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
