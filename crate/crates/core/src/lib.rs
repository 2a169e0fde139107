//! Parallel in-place merging of two adjacent sorted runs.
//!
//! The input is a slice whose halves `v[..middle]` and `v[middle..]` are each
//! sorted by key. Two parallel strategies split the pair into `t` independent
//! pairs and merge them concurrently, using `O(t)` extra space:
//!
//! * [`merge_soptmov`] plans every split first, then moves each element
//!   straight to its final pre-merge slot in one marker-assisted pass.
//! * [`merge_srecpar`] divides recursively, exchanging partitions with
//!   [linear](shift::linear_shift) or [circular](shift::circular_shift)
//!   shifting and spawning one task per division.
//!
//! Splits come from [`find_median`], a double binary search over both runs.
//! The sequential cores in [`seqmerge`] serve as leaf merges and baselines.
//!
//! Elements are anything implementing [`Keyed`]: primitive integers, or
//! fixed-width [`Record`]s made of an integer key and an opaque payload.
//!
//! ```
//! use inplace_merge::{merge_srecpar, ShiftKind};
//!
//! let mut v = vec![1, 4, 6, 9, 2, 3, 7, 8];
//! merge_srecpar(&mut v, 4, 2, ShiftKind::Linear).unwrap();
//! assert_eq!(v, [1, 2, 3, 4, 6, 7, 8, 9]);
//! ```

pub mod element;
pub mod error;
pub mod marker;
pub mod median;
pub mod pool;
pub mod seqmerge;
pub mod shift;
pub mod soptmov;
pub mod srecpar;

pub use element::{is_sorted_by_key, Keyed, MergeKey, Record};
pub use error::{MergeError, Result};
pub use marker::{derive_marker, MarkerCodec};
pub use median::{find_median, find_median_by, find_median_optimal, PivotPair};
pub use pool::{depth_limit, round_down_threads};
pub use seqmerge::{
    seq_merge_buffered, seq_merge_rotation, seq_merge_rotation_basic, LeafMerge, MergeJob,
};
pub use shift::{circular_shift, linear_shift, rotate_oracle, ShiftKind, ShiftStats};
pub use soptmov::{
    merge_soptmov, merge_soptmov_with, plan_intervals, plan_intervals_with, reorder_multi,
    IntervalPlan, OverflowPolicy, SOptMovConfig,
};
pub use srecpar::{division_trace, merge_srecpar, merge_srecpar_with, DivisionTrace, RecParConfig};

/// Default ordering key: a 4-byte signed integer.
pub type Key = i32;

/// Records of the widths used by the benchmark grid, named by total size in bytes.
pub type Record4 = Record<Key, 0>;
pub type Record64 = Record<Key, 60>;
pub type Record512 = Record<Key, 508>;
pub type Record1024 = Record<Key, 1020>;
pub type Record16384 = Record<Key, 16380>;
pub type Record65540 = Record<Key, 65536>;
