use thiserror::Error;

/// Errors reported by the library.
///
/// Internal invariant violations (a non-exact division inside a counting
/// formula, a malformed face lattice) are bugs, never valid-input behaviour,
/// and panic instead of surfacing here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation word {word:?}: expected each of 1..={n} exactly once")]
    InvalidPermutation { word: Vec<u32>, n: usize },

    #[error("reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: u32, rank: u32 },

    #[error("cannot parse subset {input:?}: {reason}")]
    SubsetParse { input: String, reason: String },

    #[error("{what} {requested} exceeds the enumeration guard {limit} (raise ORBITOPE_GUARD_N or pass --guard-n to override)")]
    GuardExceeded {
        what: &'static str,
        requested: u32,
        limit: u32,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a polytopal vector: {0}")]
    NotPolytopal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
