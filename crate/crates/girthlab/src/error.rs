use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unsupported matrix shape: {0}")]
    UnsupportedShape(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix is not invertible modulo {modulus}")]
    NotInvertible { modulus: u64 },

    #[error("degenerate generator set: {0}")]
    Degenerate(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// BFS ran out of its memory budget; `depth` levels were completed.
    #[error("memory budget of {budget_bytes} bytes exceeded after {visited} elements (depth {depth} reached)")]
    BudgetExceeded {
        budget_bytes: u64,
        visited: u64,
        depth: u32,
    },

    #[error("group order {order} exceeds limit {limit}")]
    OrderLimit { order: u64, limit: u64 },

    /// A replayed construction step produced a matrix other than the expected one.
    #[error("recipe step `{step}` mismatch: expected {expected}, got {actual}")]
    RecipeFailure {
        step: String,
        expected: String,
        actual: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } | Error::OrderLimit { .. } => 2,
            Error::RecipeFailure { .. } => 3,
            _ => 1,
        }
    }
}
