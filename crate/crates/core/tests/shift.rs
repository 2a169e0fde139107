mod common;

use common::*;
use inplace_merge::shift::{circular_shift_counted, gcd, linear_shift_counted, MoveObserver};
use inplace_merge::{circular_shift, linear_shift, rotate_oracle, ShiftKind};
use proptest::prelude::*;

fn region(len_a: usize, len_b: usize) -> Vec<Rec> {
    let keys: Vec<i32> = (0..(len_a + len_b) as i32).map(|k| k * 7 % 13).collect();
    records(&keys)
}

#[test]
fn both_shifts_match_oracle_on_grid() {
    for len_a in 0..=48 {
        for len_b in 0..=48 {
            let input = region(len_a, len_b);
            let expected = rotate_oracle(&input, len_a);

            let mut v = input.clone();
            linear_shift(&mut v, len_a);
            assert_eq!(v, expected, "linear {len_a}/{len_b}");

            let mut v = input.clone();
            circular_shift(&mut v, len_a);
            assert_eq!(v, expected, "circular {len_a}/{len_b}");
        }
    }
}

#[derive(Default)]
struct CycleLog {
    starts: Vec<usize>,
    lengths: Vec<usize>,
    writes: usize,
}

impl MoveObserver for CycleLog {
    fn written(&mut self, n: usize) {
        self.writes += n;
    }

    fn cycle(&mut self, start: usize, len: usize) {
        self.starts.push(start);
        self.lengths.push(len);
    }
}

#[test]
fn circular_cycle_law() {
    for len_a in 1..=64 {
        for len_b in 1..=64 {
            let n = len_a + len_b;
            let g = gcd(len_a, len_b);
            let mut v: Vec<u32> = (0..n as u32).collect();
            let mut log = CycleLog::default();
            ShiftKind::Circular.apply_observed(&mut v, len_a, &mut log);
            assert_eq!(log.starts, (0..g).collect::<Vec<_>>(), "{len_a}/{len_b}");
            assert!(log.lengths.iter().all(|&l| l == n / g));
            assert_eq!(log.writes, n);

            let mut w: Vec<u32> = (0..n as u32).collect();
            let stats = circular_shift_counted(&mut w, len_a);
            assert_eq!(stats.cycles, g);
            assert_eq!(stats.writes, n);
            assert_eq!(stats.swaps, 0);
            assert_eq!(v, w);
        }
    }
}

#[test]
fn linear_swap_bounds() {
    for len_a in 0..=64 {
        for len_b in 0..=64 {
            let mut v: Vec<u32> = (0..(len_a + len_b) as u32).collect();
            let stats = linear_shift_counted(&mut v, len_a);
            assert!(stats.swaps <= 2 * (len_a + len_b));
            assert_eq!(stats.cycles, 0);
            if len_a == len_b {
                assert_eq!(stats.swaps, len_a);
            }
        }
    }
}

#[test]
fn shifts_stay_inside_their_region() {
    // sentinels on both sides of the region must survive
    for (len_a, len_b) in [(0, 5), (5, 0), (3, 9), (9, 3), (7, 7), (1, 30), (30, 1)] {
        for kind in [ShiftKind::Linear, ShiftKind::Circular] {
            let mut v = vec![-1; 4];
            v.extend(0..(len_a + len_b) as i32);
            v.extend([-2; 4]);
            let expected = rotate_oracle(&v[4..4 + len_a + len_b], len_a);
            kind.apply(&mut v[4..4 + len_a + len_b], len_a);
            assert_eq!(&v[..4], &[-1; 4]);
            assert_eq!(&v[v.len() - 4..], &[-2; 4]);
            assert_eq!(&v[4..v.len() - 4], &expected[..]);
        }
    }
}

proptest! {
    #[test]
    fn random_regions_match_oracle(
        keys in prop::collection::vec(any::<i32>(), 0..300),
        cut in any::<prop::sample::Index>(),
    ) {
        let input = records(&keys);
        let len_a = cut.index(input.len() + 1);
        let expected = rotate_oracle(&input, len_a);
        let mut lin = input.clone();
        linear_shift(&mut lin, len_a);
        let mut circ = input;
        circular_shift(&mut circ, len_a);
        prop_assert_eq!(&lin, &expected);
        prop_assert_eq!(&circ, &expected);
    }
}
