use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: k = {k} must satisfy 0 <= k <= n = {n}")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("Beta function pole: B({p}, {q}) needs both arguments >= 1")]
    BetaPole { p: usize, q: usize },

    #[error("lambda = 1 is the pole of Y_n(lambda) = (-1)^n (2 n!/(lambda - 1)) (lambda^2/(lambda - 1))^n")]
    LambdaPole,

    #[error("degenerate interval: the Bernstein basis needs a != b")]
    DegenerateInterval,

    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },

    #[error("invalid rational {input:?} at position {position}: {reason}")]
    ParseRational { input: String, position: usize, reason: String },

    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),

    #[error("empty sample set: {0}")]
    EmptySamples(&'static str),

    #[error("sample t = -1 is excluded for identities with a 1/(1+t) factor")]
    ExcludedSample,

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
