use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The search ran out of nodes; nothing may be concluded about nonexistence.
    #[error("search incomplete: node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },

    /// A construction produced output that failed its own verification.
    #[error("construction check failed: {0}")]
    Construction(String),

    #[error("cache line {line}: {reason}")]
    CorruptCache { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
