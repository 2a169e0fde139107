//! Benchmark harness for the in-place merge strategies: input generation,
//! the timing grid, the split-quality study and CSV output.

pub mod config;
pub mod error;
pub mod generate;
pub mod grid;
pub mod method;
pub mod quality;
pub mod report;

pub use config::{parse_list, parse_methods, parse_sizes, BenchConfig, SUPPORTED_ELEM_BYTES};
pub use error::{BenchError, Result};
pub use generate::{generate_input, generate_keys, split_point};
pub use grid::{expected_rows, run_grid, validate_grid};
pub use method::Method;
pub use quality::{largest_leaves, median_quality_study, relative_difference, QUALITY_THREADS};
pub use report::{
    read_csv, round_split, speedup_table, write_csv, BenchRecord, QualityRow, SpeedupRow,
};
