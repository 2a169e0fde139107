//! Worker pools, one per worker count, built on first use and kept for the
//! life of the process.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::error::{MergeError, Result};

/// Number of division levels for `threads` workers: `log2(threads)`.
///
/// Rejects zero and non-powers of two.
pub fn depth_limit(threads: usize) -> Result<u32> {
    if threads.is_power_of_two() {
        Ok(threads.trailing_zeros())
    } else {
        Err(MergeError::ThreadCount(threads))
    }
}

/// Largest power of two not above `threads` (at least 1).
pub fn round_down_threads(threads: usize) -> usize {
    if threads <= 1 {
        1
    } else {
        1 << (usize::BITS - 1 - threads.leading_zeros())
    }
}

pub(crate) fn pool(threads: usize) -> Arc<ThreadPool> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    pools
        .entry(threads)
        .or_insert_with(|| {
            Arc::new(
                ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .thread_name(move |i| format!("merge-{threads}-{i}"))
                    .build()
                    .expect("failed to spawn merge workers"),
            )
        })
        .clone()
}

/// Runs `op` on a pool of exactly `threads` workers; inline when `threads == 1`.
pub(crate) fn run_on<R, F>(threads: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    if threads <= 1 {
        op()
    } else {
        pool(threads).install(op)
    }
}
