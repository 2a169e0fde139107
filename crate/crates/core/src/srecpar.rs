//! The sRecPar strategy: recursive division, shifting as soon as a split is
//! known.
//!
//! Each division finds the pivots of the current pair, exchanges the two
//! center partitions `A1` and `B0` so the range reads `A0 B0 | A1 B1`, hands
//! `A1 B1` to a new task and keeps dividing `A0 B0` itself. After `log2 t`
//! levels (or once a range is no longer than `size_limit`) the worker merges
//! its leaf. All tasks are joined before returning.
//!
//! Divisions run in parallel, but elements may move several times; the final
//! layout equals the one sOptMov plans.

use std::sync::Mutex;

use crate::element::Keyed;
use crate::error::{MergeError, Result};
use crate::median::{find_median, PivotPair};
use crate::pool::{depth_limit, run_on};
use crate::seqmerge::{already_merged, LeafMerge, MergeJob};
use crate::shift::ShiftKind;

/// Ranges at or below this length are merged without further division.
pub const DEFAULT_SIZE_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecParConfig {
    pub shift: ShiftKind,
    /// Minimum range length to keep dividing; at least 2.
    pub size_limit: usize,
    pub leaf: LeafMerge,
}

impl Default for RecParConfig {
    fn default() -> Self {
        RecParConfig {
            shift: ShiftKind::Linear,
            size_limit: DEFAULT_SIZE_LIMIT,
            leaf: LeafMerge::default(),
        }
    }
}

impl RecParConfig {
    pub fn with_shift(shift: ShiftKind) -> Self {
        RecParConfig {
            shift,
            ..Default::default()
        }
    }

    fn check(&self) -> Result<()> {
        if self.size_limit < 2 {
            return Err(MergeError::SizeLimit(self.size_limit));
        }
        Ok(())
    }
}

/// One division step on `v = A | B`: exchange `A1` and `B0`.
///
/// Returns the pivots and the length of `A1`; afterwards `v[..a + b]` is the
/// pair `A0 | B0` split at `a`, and `v[a + b..]` is `A1 | B1` split at the
/// returned length.
#[inline]
fn divide_once<T: Keyed>(v: &mut [T], middle: usize, shift: ShiftKind) -> (PivotPair, usize) {
    let pivot = find_median(&v[..middle], &v[middle..]);
    let rest_a = middle - pivot.a;
    shift.apply(&mut v[pivot.a..middle + pivot.b], rest_a);
    (pivot, rest_a)
}

/// Merges `array[..middle]` and `array[middle..]` with `threads` workers
/// using the given partition exchange and default settings otherwise.
pub fn merge_srecpar<T: Keyed>(
    array: &mut [T],
    middle: usize,
    threads: usize,
    shift: ShiftKind,
) -> Result<()> {
    merge_srecpar_with(array, middle, threads, &RecParConfig::with_shift(shift))
}

pub fn merge_srecpar_with<T: Keyed>(
    array: &mut [T],
    middle: usize,
    threads: usize,
    config: &RecParConfig,
) -> Result<()> {
    let depth = depth_limit(threads)?;
    config.check()?;
    MergeJob::whole(array.len(), middle).check_bounds(array.len())?;
    debug_assert!(
        MergeJob::whole(array.len(), middle).runs_sorted(array),
        "input runs are not sorted"
    );
    if already_merged(array, middle) {
        return Ok(());
    }
    if depth == 0 {
        return config.leaf.merge(array, middle);
    }

    let first_error = Mutex::new(None);
    run_on(threads, || {
        rayon::scope(|s| divide(s, array, middle, 0, depth, *config, &first_error));
    });
    match first_error.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn divide<'s, T: Keyed>(
    scope: &rayon::Scope<'s>,
    mut v: &'s mut [T],
    mut middle: usize,
    mut level: u32,
    depth: u32,
    config: RecParConfig,
    first_error: &'s Mutex<Option<MergeError>>,
) {
    if middle == 0 || middle == v.len() {
        return;
    }
    while level != depth && v.len() > config.size_limit {
        let (pivot, rest_a) = divide_once(v, middle, config.shift);
        let (left, right) = std::mem::take(&mut v).split_at_mut(pivot.lower_len());
        level += 1;
        scope.spawn(move |s| divide(s, right, rest_a, level, depth, config, first_error));
        v = left;
        middle = pivot.a;
    }
    if let Err(e) = config.leaf.merge(v, middle) {
        first_error.lock().unwrap().get_or_insert(e);
    }
}

/// One division performed by sRecPar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionRecord {
    /// Depth of the pair being divided (0 for the whole job).
    pub level: u32,
    /// Position of the pair within its level, left to right.
    pub split: usize,
    pub pivot: PivotPair,
    /// The exchanged center region, `start..start + len_a + len_b`, where the
    /// first `len_a` elements are `A1` and the rest `B0`.
    pub shift_start: usize,
    pub shift_len_a: usize,
    pub shift_len_b: usize,
}

/// Result of replaying the division phase on a private copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionTrace<T> {
    pub records: Vec<DivisionRecord>,
    /// The array after all divisions, before any leaf merge.
    pub layout: Vec<T>,
    /// Leaf merges in index order.
    pub leaves: Vec<MergeJob>,
}

/// Replays sRecPar's divisions with a single worker on a copy of `array`.
///
/// Divisions happen exactly as in [`merge_srecpar_with`]; spawned pairs are
/// processed depth-first after the spawning worker's own chain.
pub fn division_trace<T: Keyed>(
    array: &[T],
    middle: usize,
    threads: usize,
    config: &RecParConfig,
) -> Result<DivisionTrace<T>> {
    let depth = depth_limit(threads)?;
    config.check()?;
    MergeJob::whole(array.len(), middle).check_bounds(array.len())?;

    let mut layout = array.to_vec();
    let mut records = Vec::new();
    let mut leaves = Vec::new();
    if already_merged(array, middle) {
        leaves.push(MergeJob::whole(array.len(), middle));
        return Ok(DivisionTrace {
            records,
            layout,
            leaves,
        });
    }

    // (job, level, split index)
    let mut pending = vec![(MergeJob::whole(array.len(), middle), 0u32, 0usize)];
    while let Some((job, mut level, mut split)) = pending.pop() {
        let (start, mut mid, mut end) = (job.start, job.middle, job.end);
        if start == mid || mid == end {
            leaves.push(job);
            continue;
        }
        while level != depth && end - start > config.size_limit {
            let (pivot, rest_a) = divide_once(&mut layout[start..end], mid - start, config.shift);
            records.push(DivisionRecord {
                level,
                split,
                pivot,
                shift_start: start + pivot.a,
                shift_len_a: rest_a,
                shift_len_b: pivot.b,
            });
            let cut = start + pivot.lower_len();
            pending.push((
                MergeJob::new(cut, cut + rest_a, end),
                level + 1,
                2 * split + 1,
            ));
            end = cut;
            mid = start + pivot.a;
            level += 1;
            split *= 2;
        }
        leaves.push(MergeJob::new(start, mid, end));
    }
    leaves.sort_by_key(|j| j.start);
    Ok(DivisionTrace {
        records,
        layout,
        leaves,
    })
}
