use std::collections::TryReserveError;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MergeError {
    #[error("worker count {0} is not a power of two")]
    ThreadCount(usize),

    #[error("size limit {0} is below the minimum of 2")]
    SizeLimit(usize),

    #[error("invalid merge job {start}..{middle}..{end} for an array of length {len}")]
    InvalidJob {
        start: usize,
        middle: usize,
        end: usize,
        len: usize,
    },

    /// The key range has no headroom for the sOptMov marker.
    #[error("key type cannot hold a marker for keys in [{min}, {max}]")]
    MarkerOverflow { min: String, max: String },

    #[error("cannot derive a marker from an empty range")]
    EmptyRange,

    #[error("failed to allocate merge buffer: {0}")]
    Alloc(#[from] TryReserveError),
}

pub type Result<T, E = MergeError> = std::result::Result<T, E>;
