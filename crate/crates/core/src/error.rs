use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(String),

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: String, modulus: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The brute-force shift search found zero or several alignments.
    /// This can only happen if the mod-10 tables are wrong.
    #[error("oracle failure for (k={k}, r={r}): {matches} alignments found")]
    OracleFailure { k: u32, r: u32, matches: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
