use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("eigensolver did not converge within {0} rotations")]
    NoConvergence(usize),

    #[error("invalid dimension {0}")]
    BadDimension(usize),

    #[error("coefficients are not normalized (sum of squares = {0})")]
    NotNormalized(f64),

    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("basis is not unitary (max |V^dagger V - I| = {0:e})")]
    NotUnitary(f64),

    #[error("not a probability distribution: {0}")]
    NotDistribution(String),

    #[error("config error at line {line}, field `{field}`: {message}")]
    Config {
        line: usize,
        field: String,
        message: String,
    },

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("cannot parse `{token}`: {message}")]
    Token { token: String, message: String },

    #[error("{relation} violated: slack {slack:e} below -{tol:e}")]
    TheoremViolation {
        relation: String,
        slack: f64,
        tol: f64,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
