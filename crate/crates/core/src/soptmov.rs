//! The sOptMov strategy: minimum data movement, sequential division.
//!
//! 1. Find every split point first ([`plan_intervals`]), without moving data.
//!    This takes `t - 1` median searches over `log2 t` levels.
//! 2. Move every element straight to its pre-merge slot in one cycle-leader
//!    pass ([`reorder_multi`]), producing `A0 B0 A1 B1 ..`. Visited slots are
//!    flagged by a [`MarkerCodec`] inside the key itself, so no side table is
//!    needed.
//! 3. Merge the `t` pairs concurrently.
//!
//! Space beyond the array is the `O(t)` plan.

use std::ops::Range;

use crate::element::Keyed;
use crate::error::{MergeError, Result};
use crate::marker::{derive_marker, MarkerCodec};
use crate::median::{find_median, PivotPair};
use crate::pool::{depth_limit, run_on};
use crate::seqmerge::{already_merged, LeafMerge, MergeJob};
use crate::shift::{MoveObserver, ShiftKind, ShiftStats};
use crate::srecpar::{merge_srecpar_with, RecParConfig};

/// A pair of runs in original array coordinates. The two ranges are adjacent
/// only at the top level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunPair {
    pub a: Range<usize>,
    pub b: Range<usize>,
}

impl RunPair {
    pub fn len(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// Splits at `pivot`: `(A0, B0)` and `(A1, B1)`.
    pub fn split(&self, pivot: PivotPair) -> (RunPair, RunPair) {
        let a_cut = self.a.start + pivot.a;
        let b_cut = self.b.start + pivot.b;
        (
            RunPair {
                a: self.a.start..a_cut,
                b: self.b.start..b_cut,
            },
            RunPair {
                a: a_cut..self.a.end,
                b: b_cut..self.b.end,
            },
        )
    }
}

/// A contiguous slice of the source array, `src..src + len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub src: usize,
    pub len: usize,
}

/// Every split decided up front, plus the layout it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPlan {
    job: MergeJob,
    levels: Vec<Vec<RunPair>>,
    leaf_sources: Vec<Segment>,
    final_positions: Vec<MergeJob>,
}

impl IntervalPlan {
    pub fn job(&self) -> MergeJob {
        self.job
    }

    /// `levels()[d]` holds the `2^d` run pairs at depth `d`.
    pub fn levels(&self) -> &[Vec<RunPair>] {
        &self.levels
    }

    /// `A0, B0, A1, B1, ..` in source coordinates, in destination order.
    pub fn leaf_sources(&self) -> &[Segment] {
        &self.leaf_sources
    }

    /// The `t` leaf merges after reordering, contiguous and covering the job.
    pub fn final_positions(&self) -> &[MergeJob] {
        &self.final_positions
    }

    /// Largest leaf pair, in elements.
    pub fn max_leaf_len(&self) -> usize {
        self.final_positions
            .iter()
            .map(MergeJob::len)
            .max()
            .unwrap_or(0)
    }
}

/// Plans the division of `job` into `threads` pairs using [`find_median`].
pub fn plan_intervals<T: Keyed>(
    array: &[T],
    job: MergeJob,
    threads: usize,
) -> Result<IntervalPlan> {
    plan_intervals_with(array, job, threads, find_median)
}

/// [`plan_intervals`] with a caller-supplied split search, called exactly
/// `threads - 1` times.
pub fn plan_intervals_with<T, F>(
    array: &[T],
    job: MergeJob,
    threads: usize,
    mut split: F,
) -> Result<IntervalPlan>
where
    T: Keyed,
    F: FnMut(&[T], &[T]) -> PivotPair,
{
    let depth = depth_limit(threads)?;
    job.check_bounds(array.len())?;

    let mut levels = Vec::with_capacity(depth as usize + 1);
    levels.push(vec![RunPair {
        a: job.start..job.middle,
        b: job.middle..job.end,
    }]);
    for d in 0..depth as usize {
        let mut next = Vec::with_capacity(2 << d);
        for pair in &levels[d] {
            let pivot = split(&array[pair.a.clone()], &array[pair.b.clone()]);
            let (left, right) = pair.split(pivot);
            next.push(left);
            next.push(right);
        }
        levels.push(next);
    }

    let leaves = levels.last().expect("level 0 always exists");
    let mut leaf_sources = Vec::with_capacity(2 * leaves.len());
    let mut final_positions = Vec::with_capacity(leaves.len());
    let mut dst = job.start;
    for pair in leaves {
        leaf_sources.push(Segment {
            src: pair.a.start,
            len: pair.a.len(),
        });
        leaf_sources.push(Segment {
            src: pair.b.start,
            len: pair.b.len(),
        });
        let middle = dst + pair.a.len();
        let end = middle + pair.b.len();
        final_positions.push(MergeJob::new(dst, middle, end));
        dst = end;
    }
    debug_assert_eq!(dst, job.end);

    Ok(IntervalPlan {
        job,
        levels,
        leaf_sources,
        final_positions,
    })
}

/// Moves `plan`'s segments into their destination order in place.
///
/// Each element is written once, directly into its final slot. Slots filled
/// ahead of the scan are marked through `codec` and unmarked when the scan
/// reaches them, so no marks remain on return. Finding the source of a slot is
/// a binary search over the `2t` segments.
///
/// `codec` must cover every key in the job's range.
pub fn reorder_multi<T: Keyed>(
    array: &mut [T],
    plan: &IntervalPlan,
    codec: &MarkerCodec<T::Key>,
) -> Vec<MergeJob> {
    reorder_multi_observed(array, plan, codec, &mut ());
    plan.final_positions.clone()
}

/// [`reorder_multi`] reporting writes and cycles.
pub fn reorder_multi_counted<T: Keyed>(
    array: &mut [T],
    plan: &IntervalPlan,
    codec: &MarkerCodec<T::Key>,
) -> (Vec<MergeJob>, ShiftStats) {
    let mut stats = ShiftStats::default();
    reorder_multi_observed(array, plan, codec, &mut stats);
    (plan.final_positions.clone(), stats)
}

/// Destination-ordered segments, as (destination start, source start) pairs,
/// local to the job and without empty segments.
fn destination_table(plan: &IntervalPlan) -> Vec<(usize, usize)> {
    let base = plan.job.start;
    let mut dst = 0;
    plan.leaf_sources
        .iter()
        .filter_map(|seg| {
            let entry = (dst, seg.src - base);
            dst += seg.len;
            (seg.len > 0).then_some(entry)
        })
        .collect()
}

pub fn reorder_multi_observed<T: Keyed, O: MoveObserver>(
    array: &mut [T],
    plan: &IntervalPlan,
    codec: &MarkerCodec<T::Key>,
    observer: &mut O,
) {
    let job = plan.job;
    let region = &mut array[job.start..job.end];
    debug_assert!(region.iter().all(|x| codec.covers(x.key())));

    let table = destination_table(plan);
    // Source slot of the element that belongs at `dst`.
    let source_of = |dst: usize| {
        let seg = table.partition_point(|&(start, _)| start <= dst) - 1;
        let (dst_start, src_start) = table[seg];
        src_start + (dst - dst_start)
    };

    for i in 0..region.len() {
        let key = region[i].key();
        if codec.is_marked(key) {
            *region[i].key_mut() = codec.unmark(key);
            continue;
        }
        let mut src = source_of(i);
        if src == i {
            continue;
        }
        // Every slot on this cycle other than `i` lies ahead of the scan.
        let saved = region[i];
        let mut hole = i;
        let mut moved = 0;
        loop {
            region[hole] = region[src];
            if hole != i {
                let k = region[hole].key();
                *region[hole].key_mut() = codec.mark(k);
            }
            moved += 1;
            hole = src;
            src = source_of(hole);
            if src == i {
                break;
            }
        }
        let mut last = saved;
        *last.key_mut() = codec.mark(last.key());
        region[hole] = last;
        moved += 1;
        observer.written(moved);
        observer.cycle(i, moved);
    }
    debug_assert!(region.iter().all(|x| !codec.is_marked(x.key())));
}

/// What to do when the keys leave no room for a marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OverflowPolicy {
    /// Merge with sRecPar and linear shifting instead.
    #[default]
    Fallback,
    /// Return [`MergeError::MarkerOverflow`].
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SOptMovConfig {
    pub leaf: LeafMerge,
    pub on_overflow: OverflowPolicy,
}

/// Merges `array[..middle]` and `array[middle..]` with `threads` workers.
///
/// `threads` must be a power of two.
pub fn merge_soptmov<T: Keyed>(array: &mut [T], middle: usize, threads: usize) -> Result<()> {
    merge_soptmov_with(array, middle, threads, &SOptMovConfig::default())
}

pub fn merge_soptmov_with<T: Keyed>(
    array: &mut [T],
    middle: usize,
    threads: usize,
    config: &SOptMovConfig,
) -> Result<()> {
    depth_limit(threads)?;
    let job = MergeJob::whole(array.len(), middle);
    job.check_bounds(array.len())?;
    debug_assert!(job.runs_sorted(array), "input runs are not sorted");
    if already_merged(array, middle) {
        return Ok(());
    }

    let codec = match derive_marker(array, 0..array.len()) {
        Ok(codec) => codec,
        Err(MergeError::MarkerOverflow { .. })
            if config.on_overflow == OverflowPolicy::Fallback =>
        {
            let fallback = RecParConfig {
                shift: ShiftKind::Linear,
                leaf: config.leaf,
                ..RecParConfig::default()
            };
            return merge_srecpar_with(array, middle, threads, &fallback);
        }
        Err(e) => return Err(e),
    };

    let plan = plan_intervals(array, job, threads)?;
    let positions = reorder_multi(array, &plan, &codec);
    merge_leaves(array, &positions, threads, config.leaf)
}

/// Merges each of the contiguous `positions` concurrently, one task per leaf.
fn merge_leaves<T: Keyed>(
    array: &mut [T],
    positions: &[MergeJob],
    threads: usize,
    leaf: LeafMerge,
) -> Result<()> {
    if threads == 1 {
        return positions
            .iter()
            .try_for_each(|job| leaf.merge(&mut array[job.start..job.end], job.len_a()));
    }
    let first_error = std::sync::Mutex::new(None);
    run_on(threads, || {
        rayon::scope(|s| {
            let mut rest = &mut array[..];
            let mut offset = 0;
            for job in positions {
                debug_assert_eq!(job.start, offset);
                let (chunk, tail) = std::mem::take(&mut rest).split_at_mut(job.len());
                rest = tail;
                offset = job.end;
                let first_error = &first_error;
                let middle = job.len_a();
                s.spawn(move |_| {
                    if let Err(e) = leaf.merge(chunk, middle) {
                        first_error.lock().unwrap().get_or_insert(e);
                    }
                });
            }
        })
    });
    match first_error.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
