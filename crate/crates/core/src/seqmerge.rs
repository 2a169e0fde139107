//! Sequential merge cores.
//!
//! These run at the leaves of both parallel strategies and serve as the
//! sequential baselines. All of them merge `v[..middle]` with `v[middle..]`,
//! where both halves are individually sorted by key.

use crate::element::{key_le, Keyed};
use crate::error::{MergeError, Result};
use crate::median::find_median;
use crate::shift::ShiftKind;

/// Two adjacent sorted runs `array[start..middle]` and `array[middle..end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MergeJob {
    pub start: usize,
    pub middle: usize,
    pub end: usize,
}

impl MergeJob {
    pub const fn new(start: usize, middle: usize, end: usize) -> Self {
        MergeJob { start, middle, end }
    }

    /// A job covering a whole slice split at `middle`.
    pub const fn whole(len: usize, middle: usize) -> Self {
        MergeJob::new(0, middle, len)
    }

    pub const fn len(&self) -> usize {
        self.end - self.start
    }

    pub const fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub const fn len_a(&self) -> usize {
        self.middle - self.start
    }

    pub const fn len_b(&self) -> usize {
        self.end - self.middle
    }

    /// Checks `start <= middle <= end <= len`.
    pub fn check_bounds(&self, len: usize) -> Result<()> {
        if self.start <= self.middle && self.middle <= self.end && self.end <= len {
            Ok(())
        } else {
            Err(MergeError::InvalidJob {
                start: self.start,
                middle: self.middle,
                end: self.end,
                len,
            })
        }
    }

    /// True if both runs of `array` are sorted. Linear; meant for debug checks.
    pub fn runs_sorted<T: Keyed>(&self, array: &[T]) -> bool {
        crate::element::is_sorted_by_key(&array[self.start..self.middle])
            && crate::element::is_sorted_by_key(&array[self.middle..self.end])
    }
}

/// True when there is nothing to merge: a run is empty or the runs are
/// already in order across the boundary.
#[inline]
pub(crate) fn already_merged<T: Keyed>(v: &[T], middle: usize) -> bool {
    middle == 0 || middle >= v.len() || key_le(&v[middle - 1], &v[middle])
}

/// Ranges at most this long go straight to the rotation loop. Above it the
/// range is first bisected with [`find_median`] and a shift, so the quadratic
/// cost of the loop stays bounded.
pub const ROTATION_CUTOFF: usize = 128;

/// In-place merge by repeated partition exchange. O(1) auxiliary space.
///
/// Ranges longer than [`ROTATION_CUTOFF`] are split into two independent
/// pairs with [`find_median`] and `shift`, recursing on the smaller pair and
/// iterating on the larger one; short ranges use
/// [`seq_merge_rotation_basic`].
pub fn seq_merge_rotation<T: Keyed>(v: &mut [T], middle: usize, shift: ShiftKind) {
    assert!(middle <= v.len(), "middle out of range");
    let mut v = v;
    let mut middle = middle;
    loop {
        if already_merged(v, middle) {
            return;
        }
        if v.len() <= ROTATION_CUTOFF {
            break;
        }
        let p = find_median(&v[..middle], &v[middle..]);
        let lower = p.lower_len();
        if lower == 0 || lower == v.len() {
            break;
        }
        let rest_a = middle - p.a;
        shift.apply(&mut v[p.a..middle + p.b], rest_a);
        let (left, right) = std::mem::take(&mut v).split_at_mut(lower);
        if left.len() <= right.len() {
            seq_merge_rotation(left, p.a, shift);
            v = right;
            middle = rest_a;
        } else {
            seq_merge_rotation(right, rest_a, shift);
            v = left;
            middle = p.a;
        }
    }
    seq_merge_rotation_basic(v, middle, shift);
}

/// The plain rotation merge, `O(|A|^2 + |B|)` element moves.
///
/// Repeats until a run is exhausted: skip the prefix of `A` that is not
/// greater than `B[0]`, find the run `B[..k]` strictly below the new `A[0]`,
/// and exchange `A` with that run using `shift`. `B[..k]` is then final and
/// the problem shrinks to `A | B[k..]`.
pub fn seq_merge_rotation_basic<T: Keyed>(v: &mut [T], middle: usize, shift: ShiftKind) {
    assert!(middle <= v.len(), "middle out of range");
    let (mut a_start, mut b_start) = (0, middle);
    let end = v.len();
    while a_start < b_start && b_start < end {
        let first_b = v[b_start].key();
        a_start += v[a_start..b_start].partition_point(|x| x.key() <= first_b);
        if a_start == b_start {
            break;
        }
        let first_a = v[a_start].key();
        // first_b < first_a here, so k >= 1
        let k = v[b_start..end].partition_point(|x| x.key() < first_a);
        shift.apply(&mut v[a_start..b_start + k], b_start - a_start);
        a_start += k;
        b_start += k;
    }
}

/// Classic merge through an external buffer of `min(|A|, |B|)` elements.
///
/// `scratch` is cleared and may be reused across calls. Stable.
pub fn seq_merge_buffered<T: Keyed>(
    v: &mut [T],
    middle: usize,
    scratch: &mut Vec<T>,
) -> Result<()> {
    assert!(middle <= v.len(), "middle out of range");
    if already_merged(v, middle) {
        return Ok(());
    }
    let len = v.len();
    scratch.clear();
    if middle <= len - middle {
        scratch.try_reserve(middle)?;
        scratch.extend_from_slice(&v[..middle]);
        let (mut i, mut j, mut out) = (0, middle, 0);
        while i < middle && j < len {
            if v[j].key() < scratch[i].key() {
                v[out] = v[j];
                j += 1;
            } else {
                v[out] = scratch[i];
                i += 1;
            }
            out += 1;
        }
        v[out..out + (middle - i)].copy_from_slice(&scratch[i..]);
    } else {
        let len_b = len - middle;
        scratch.try_reserve(len_b)?;
        scratch.extend_from_slice(&v[middle..]);
        let (mut i, mut j, mut out) = (middle, len_b, len);
        while i > 0 && j > 0 {
            out -= 1;
            if scratch[j - 1].key() < v[i - 1].key() {
                v[out] = v[i - 1];
                i -= 1;
            } else {
                v[out] = scratch[j - 1];
                j -= 1;
            }
        }
        v[..j].copy_from_slice(&scratch[..j]);
    }
    Ok(())
}

/// The sequential core used for leaf merges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafMerge {
    /// [`seq_merge_rotation`] with the given partition exchange.
    Rotation(ShiftKind),
    /// [`seq_merge_buffered`] with a buffer allocated per call.
    Buffered,
}

impl Default for LeafMerge {
    fn default() -> Self {
        LeafMerge::Rotation(ShiftKind::Linear)
    }
}

impl LeafMerge {
    pub fn merge<T: Keyed>(self, v: &mut [T], middle: usize) -> Result<()> {
        match self {
            LeafMerge::Rotation(shift) => {
                seq_merge_rotation(v, middle, shift);
                Ok(())
            }
            LeafMerge::Buffered => seq_merge_buffered(v, middle, &mut Vec::new()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_cores(input: &[i32], middle: usize) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for shift in [ShiftKind::Linear, ShiftKind::Circular] {
            let mut v = input.to_vec();
            seq_merge_rotation(&mut v, middle, shift);
            out.push(v);
            let mut v = input.to_vec();
            seq_merge_rotation_basic(&mut v, middle, shift);
            out.push(v);
        }
        let mut v = input.to_vec();
        seq_merge_buffered(&mut v, middle, &mut Vec::new()).unwrap();
        out.push(v);
        out
    }

    #[test]
    fn interleaved() {
        for v in all_cores(&[1, 3, 5, 2, 4, 6], 3) {
            assert_eq!(v, [1, 2, 3, 4, 5, 6]);
        }
    }

    #[test]
    fn presorted_untouched() {
        for v in all_cores(&[1, 2, 3, 4], 2) {
            assert_eq!(v, [1, 2, 3, 4]);
        }
    }

    #[test]
    fn single_pair_and_empty_runs() {
        for v in all_cores(&[2, 1], 1) {
            assert_eq!(v, [1, 2]);
        }
        for v in all_cores(&[3, 4, 5], 0) {
            assert_eq!(v, [3, 4, 5]);
        }
        for v in all_cores(&[], 0) {
            assert!(v.is_empty());
        }
    }

    #[test]
    fn buffered_both_orientations_are_stable() {
        use crate::element::Record;
        let mk = |k: i32, tag: u8| Record::<i32, 4>::new(k, [tag; 4]);
        // short A, long B
        let mut v = vec![mk(2, 0), mk(1, 1), mk(2, 1), mk(3, 1)];
        seq_merge_buffered(&mut v, 1, &mut Vec::new()).unwrap();
        let tags: Vec<_> = v.iter().map(|r| (r.key, r.payload[0])).collect();
        assert_eq!(tags, [(1, 1), (2, 0), (2, 1), (3, 1)]);
        // long A, short B
        let mut v = vec![mk(1, 0), mk(2, 0), mk(3, 0), mk(2, 1)];
        seq_merge_buffered(&mut v, 3, &mut Vec::new()).unwrap();
        let tags: Vec<_> = v.iter().map(|r| (r.key, r.payload[0])).collect();
        assert_eq!(tags, [(1, 0), (2, 0), (2, 1), (3, 0)]);
    }

    #[test]
    fn large_inverted_runs_hit_the_bisection() {
        let mut v: Vec<i32> = (1000..2000).chain(0..1000).collect();
        seq_merge_rotation(&mut v, 1000, ShiftKind::Linear);
        assert!(v.iter().copied().eq(0..2000));
    }

    #[test]
    fn job_bounds() {
        assert!(MergeJob::new(0, 2, 4).check_bounds(4).is_ok());
        assert!(MergeJob::new(0, 5, 4).check_bounds(4).is_err());
        assert!(MergeJob::new(0, 2, 5).check_bounds(4).is_err());
        let job = MergeJob::new(1, 3, 6);
        assert_eq!((job.len(), job.len_a(), job.len_b()), (5, 2, 3));
    }
}
