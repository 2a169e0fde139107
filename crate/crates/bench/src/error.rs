use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("validation failed for {method} t={threads} elem_bytes={elem_bytes} size={size} split={split}: {reason}")]
    Validation {
        method: String,
        threads: usize,
        elem_bytes: usize,
        size: usize,
        split: f64,
        reason: String,
    },

    #[error("no {baseline} measurement for elem_bytes={elem_bytes} size={size} split={split:.2}")]
    MissingBaseline {
        baseline: String,
        elem_bytes: usize,
        size: usize,
        split: f64,
    },

    #[error(transparent)]
    Merge(#[from] inplace_merge::MergeError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl BenchError {
    /// Process exit code: 1 for failed validation, 2 for bad configuration or I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Validation { .. } | BenchError::Merge(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
