use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation would need more series coefficients than allowed.
    #[error("resource limit exceeded: {needed} needed, limit is {limit}")]
    ResourceLimit { needed: u64, limit: u64 },

    /// An arithmetic invariant that must hold by construction did not.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("degenerate linear system for m={m}, j={j}: no full-rank row set within {rows} rows")]
    DegenerateSystem { m: u32, j: u32, rows: usize },

    /// Numeric evidence contradicting the congruence theorem or its lemmas.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("cache integrity: {0}")]
    CacheIntegrity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
