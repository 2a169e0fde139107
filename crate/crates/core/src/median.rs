//! Split points for a pair of sorted runs.
//!
//! Given runs `A` and `B`, a [`PivotPair`] `(a, b)` cuts them into `A0 = A[..a]`,
//! `A1 = A[a..]`, `B0 = B[..b]`, `B1 = B[b..]` such that `A0 <= B1` and
//! `B0 <= A1`. The pairs `(A0, B0)` and `(A1, B1)` can then be merged
//! independently, one after the other in memory.

use std::cmp::Ordering;

use crate::element::Keyed;

/// Split offsets into two sorted runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PivotPair {
    /// Offset into the first run, `0..=|A|`.
    pub a: usize,
    /// Offset into the second run, `0..=|B|`.
    pub b: usize,
}

impl PivotPair {
    pub const fn new(a: usize, b: usize) -> Self {
        PivotPair { a, b }
    }

    /// Number of elements that land in the lower pair `(A0, B0)`.
    pub const fn lower_len(&self) -> usize {
        self.a + self.b
    }

    /// `|(|A0| + |B0|) - (|A1| + |B1|)|` for runs of the given lengths.
    pub fn imbalance(&self, len_a: usize, len_b: usize) -> usize {
        let lower = self.lower_len();
        let upper = len_a + len_b - lower;
        lower.abs_diff(upper)
    }

    /// Checks the bounds and both ordering constraints by direct comparison.
    pub fn is_valid_for<T: Keyed>(&self, a: &[T], b: &[T]) -> bool {
        if self.a > a.len() || self.b > b.len() {
            return false;
        }
        // Runs are sorted, so comparing the boundary elements suffices.
        let a0_le_b1 = self.a == 0 || self.b == b.len() || a[self.a - 1].key() <= b[self.b].key();
        let b0_le_a1 = self.b == 0 || self.a == a.len() || b[self.b - 1].key() <= a[self.a].key();
        a0_le_b1 && b0_le_a1
    }
}

/// Double binary search for a balanced split of two sorted runs.
///
/// Runs in `O(log |A| + log |B|)` comparisons. If the runs are already in
/// order (`A <= B`) the result is `(|A|, 0)`; if they are fully inverted
/// (`A > B`) it is `(0, |B|)`. Both leave nothing to merge after the
/// partitions are exchanged.
pub fn find_median<T: Keyed>(a: &[T], b: &[T]) -> PivotPair {
    find_median_by(a, b, |x, y| x.key().cmp(&y.key()))
}

/// [`find_median`] with a caller-supplied comparator.
///
/// The comparator is called at most once per loop iteration plus twice for
/// the fast paths, so counting its calls counts comparisons.
pub fn find_median_by<T, F>(a: &[T], b: &[T], mut cmp: F) -> PivotPair
where
    F: FnMut(&T, &T) -> Ordering,
{
    let (len_a, len_b) = (a.len(), b.len());
    if len_a == 0 || len_b == 0 || cmp(&a[len_a - 1], &b[0]) != Ordering::Greater {
        return PivotPair::new(len_a, 0);
    }
    if cmp(&a[0], &b[len_b - 1]) == Ordering::Greater {
        return PivotPair::new(0, len_b);
    }

    let (mut left_a, mut limit_a) = (0, len_a);
    let (mut left_b, mut limit_b) = (0, len_b);

    while left_a < limit_a && left_b < limit_b {
        let pa = (limit_a - left_a) / 2 + left_a;
        let pb = (limit_b - left_b) / 2 + left_b;
        let lower = pa + pb;
        let upper = (len_a - pa) + (len_b - pb);
        match cmp(&a[pa], &b[pb]) {
            Ordering::Equal => break,
            Ordering::Less => {
                if lower < upper {
                    left_a = pa + 1;
                } else {
                    limit_b = pb;
                }
            }
            Ordering::Greater => {
                if lower < upper {
                    left_b = pb + 1;
                } else {
                    limit_a = pa;
                }
            }
        }
    }

    PivotPair::new(
        (limit_a - left_a) / 2 + left_a,
        (limit_b - left_b) / 2 + left_b,
    )
}

/// The most balanced valid split, found by trying every pivot in `A`.
///
/// For each `a`, the admissible `b` form an interval found by binary search in
/// `B`; the one closest to half the total is kept. `O(|A| log |B|)`. Among
/// equally balanced pairs the smallest `a`, then the smallest `b`, wins.
pub fn find_median_optimal<T: Keyed>(a: &[T], b: &[T]) -> PivotPair {
    let total = a.len() + b.len();
    let mut best = PivotPair::new(0, 0);
    let mut best_imbalance = usize::MAX;

    for pa in 0..=a.len() {
        // A[pa-1] <= B[pb..] and B[..pb] <= A[pa..]
        let lo = if pa == 0 {
            0
        } else {
            let k = a[pa - 1].key();
            b.partition_point(|x| x.key() < k)
        };
        let hi = if pa == a.len() {
            b.len()
        } else {
            let k = a[pa].key();
            b.partition_point(|x| x.key() <= k)
        };
        debug_assert!(lo <= hi);

        let ideal = (total / 2).saturating_sub(pa);
        let pb = ideal.clamp(lo, hi);
        let candidate = PivotPair::new(pa, pb);
        let imbalance = candidate.imbalance(a.len(), b.len());
        if imbalance < best_imbalance {
            best = candidate;
            best_imbalance = imbalance;
            if imbalance == 0 {
                break;
            }
        }
    }
    best
}
