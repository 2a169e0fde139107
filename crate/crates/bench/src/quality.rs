//! How far the double binary search's splits are from the best possible
//! ones, measured as the size of the largest leaf pair.

use inplace_merge::{find_median, find_median_optimal, plan_intervals_with, MergeJob};

use crate::error::Result;
use crate::generate::generate_keys;
use crate::report::QualityRow;

/// Worker counts the study covers.
pub const QUALITY_THREADS: [usize; 4] = [2, 4, 8, 16];

/// Largest leaf pair after splitting `keys` into `threads` pairs with
/// `find_median` and with the exhaustive optimum.
pub fn largest_leaves(keys: &[i32], middle: usize, threads: usize) -> Result<(usize, usize)> {
    let job = MergeJob::whole(keys.len(), middle);
    let fast = plan_intervals_with(keys, job, threads, find_median)?;
    let best = plan_intervals_with(keys, job, threads, find_median_optimal)?;
    Ok((fast.max_leaf_len(), best.max_leaf_len()))
}

/// `(max_fast - max_best) / max_best`, or 0 for an empty input.
pub fn relative_difference(max_fast: usize, max_best: usize) -> f64 {
    if max_best == 0 {
        return 0.0;
    }
    (max_fast as f64 - max_best as f64) / max_best as f64
}

/// For each worker count and size, the relative difference averaged over
/// `splits`. Inputs come from the benchmark generator with `seed`.
pub fn median_quality_study(sizes: &[usize], splits: &[f64], seed: u64) -> Result<Vec<QualityRow>> {
    let mut rows = Vec::with_capacity(QUALITY_THREADS.len() * sizes.len());
    for t in QUALITY_THREADS {
        for &size in sizes {
            let mut total = 0.0;
            for &split in splits {
                let (keys, middle) = generate_keys(size, split, seed);
                let (fast, best) = largest_leaves(&keys, middle, t)?;
                total += relative_difference(fast, best);
            }
            rows.push(QualityRow {
                t,
                size,
                rel_diff_findmedian: total / splits.len().max(1) as f64,
            });
        }
    }
    Ok(rows)
}
