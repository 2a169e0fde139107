//! In-place exchange of two adjacent partitions: `A | B` becomes `B | A`.
//!
//! Two strategies are provided:
//!
//! * **Linear shifting** swaps the smaller partition into its final place with
//!   contiguous sweeps, then repeats on what is left of the larger one. It may
//!   touch an element more than once (up to `2 (|A| + |B|)` swaps) but every
//!   access is a forward streaming pass.
//! * **Circular shifting** follows the permutation cycles `i -> i + |B|` (for
//!   `i` in `A`) and `i -> i - |A|` (for `i` in `B`). There are exactly
//!   `gcd(|A|, |B|)` cycles, started at indexes `0, 1, ..`, each of
//!   `(|A| + |B|) / gcd` elements, so every element is written exactly once,
//!   at the price of scattered accesses.
//!
//! Both have observed variants that report what they did through a
//! [`MoveObserver`]. The plain functions use the `()` observer, which compiles
//! to nothing.

/// Receives move events from the shift and reorder routines.
pub trait MoveObserver {
    /// `n` element pair swaps were performed.
    fn swapped(&mut self, _n: usize) {}
    /// `n` elements were written to their final position.
    fn written(&mut self, _n: usize) {}
    /// A move cycle starting at `start` placed `len` elements.
    fn cycle(&mut self, _start: usize, _len: usize) {}
}

impl MoveObserver for () {}

/// Counters collected by the observed shift variants.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ShiftStats {
    /// Element pair swaps (linear shifting only).
    pub swaps: usize,
    /// Element writes. A swap counts as two.
    pub writes: usize,
    /// Move cycles executed (circular shifting and reordering).
    pub cycles: usize,
}

impl MoveObserver for ShiftStats {
    fn swapped(&mut self, n: usize) {
        self.swaps += n;
        self.writes += 2 * n;
    }

    fn written(&mut self, n: usize) {
        self.writes += n;
    }

    fn cycle(&mut self, _start: usize, _len: usize) {
        self.cycles += 1;
    }
}

/// Which partition exchange to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ShiftKind {
    #[default]
    Linear,
    Circular,
}

impl ShiftKind {
    /// Exchanges `region[..len_a]` with `region[len_a..]`.
    #[inline]
    pub fn apply<T: Copy>(self, region: &mut [T], len_a: usize) {
        self.apply_observed(region, len_a, &mut ());
    }

    pub fn apply_observed<T: Copy, O: MoveObserver>(
        self,
        region: &mut [T],
        len_a: usize,
        observer: &mut O,
    ) {
        match self {
            ShiftKind::Linear => linear_shift_observed(region, len_a, observer),
            ShiftKind::Circular => circular_shift_observed(region, len_a, observer),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ShiftKind::Linear => "linear",
            ShiftKind::Circular => "circular",
        }
    }
}

/// Exchanges `region[..len_a]` and `region[len_a..]` with contiguous sweeps.
///
/// # Panics
///
/// If `len_a > region.len()`.
#[inline]
pub fn linear_shift<T: Copy>(region: &mut [T], len_a: usize) {
    linear_shift_observed(region, len_a, &mut ());
}

/// [`linear_shift`] reporting its swaps.
pub fn linear_shift_counted<T: Copy>(region: &mut [T], len_a: usize) -> ShiftStats {
    let mut stats = ShiftStats::default();
    linear_shift_observed(region, len_a, &mut stats);
    stats
}

pub fn linear_shift_observed<T: Copy, O: MoveObserver>(
    region: &mut [T],
    len_a: usize,
    observer: &mut O,
) {
    assert!(len_a <= region.len(), "partition longer than region");
    // Invariant: region[lo..hi] is `X | Y` with |X| = len_x, and must become `Y | X`.
    // Everything outside [lo, hi) is already final.
    let (mut lo, mut hi, mut len_x) = (0, region.len(), len_a);
    loop {
        let len_y = hi - lo - len_x;
        if len_x == 0 || len_y == 0 {
            break;
        }
        if len_x <= len_y {
            // X Y0 Y1 -> Y1 Y0 X, with |Y1| = |X|. X is final; Y1 Y0 remains.
            let (head, tail) = region[lo..hi].split_at_mut(hi - lo - len_x);
            head[..len_x].swap_with_slice(tail);
            observer.swapped(len_x);
            hi -= len_x;
        } else {
            // X0 X1 Y -> Y X1 X0, with |X0| = |Y|. Y is final; X1 X0 remains.
            let (head, tail) = region[lo..hi].split_at_mut(hi - lo - len_y);
            head[..len_y].swap_with_slice(tail);
            observer.swapped(len_y);
            lo += len_y;
            len_x -= len_y;
        }
    }
}

/// Exchanges `region[..len_a]` and `region[len_a..]` following permutation
/// cycles, with a single element of temporary storage.
///
/// # Panics
///
/// If `len_a > region.len()`.
#[inline]
pub fn circular_shift<T: Copy>(region: &mut [T], len_a: usize) {
    circular_shift_observed(region, len_a, &mut ());
}

/// [`circular_shift`] reporting its writes and cycles.
pub fn circular_shift_counted<T: Copy>(region: &mut [T], len_a: usize) -> ShiftStats {
    let mut stats = ShiftStats::default();
    circular_shift_observed(region, len_a, &mut stats);
    stats
}

pub fn circular_shift_observed<T: Copy, O: MoveObserver>(
    region: &mut [T],
    len_a: usize,
    observer: &mut O,
) {
    assert!(len_a <= region.len(), "partition longer than region");
    let len_b = region.len() - len_a;
    if len_a == 0 || len_b == 0 {
        return;
    }
    let cycles = gcd(len_a, len_b);
    let cycle_len = region.len() / cycles;
    for start in 0..cycles {
        // Walk the cycle backwards: fill the hole with the element that belongs there.
        let saved = region[start];
        let mut hole = start;
        loop {
            let source = if hole < len_b {
                hole + len_a
            } else {
                hole - len_b
            };
            if source == start {
                break;
            }
            region[hole] = region[source];
            hole = source;
        }
        region[hole] = saved;
        observer.written(cycle_len);
        observer.cycle(start, cycle_len);
    }
}

/// Builds `B | A` by copying. Ground truth for both shifts.
pub fn rotate_oracle<T: Clone>(region: &[T], len_a: usize) -> Vec<T> {
    let (a, b) = region.split_at(len_a);
    b.iter().chain(a).cloned().collect()
}

/// Greatest common divisor, with `gcd(0, n) = n`.
pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
