#![allow(dead_code)]

use inplace_merge::{PivotPair, Record};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Rec = Record<i32, 4>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A sorted run of `len` keys drawn from `0..range` (duplicates likely when range is small).
pub fn sorted_run(rng: &mut StdRng, len: usize, range: i32) -> Vec<i32> {
    let mut v: Vec<i32> = (0..len).map(|_| rng.gen_range(0..range.max(1))).collect();
    v.sort_unstable();
    v
}

/// Two sorted runs concatenated, with payloads tagging the origin index.
pub fn records(keys: &[i32]) -> Vec<Rec> {
    keys.iter()
        .enumerate()
        .map(|(i, &k)| Rec::new(k, (i as u32).to_le_bytes()))
        .collect()
}

/// Random instance: (array, middle). Sizes and key ranges vary widely.
pub fn instance(rng: &mut StdRng, max_len: usize) -> (Vec<Rec>, usize) {
    let len = rng.gen_range(0..=max_len);
    let middle = match rng.gen_range(0..4) {
        0 => len / 4,
        1 => len / 2,
        2 => 3 * len / 4,
        _ => rng.gen_range(0..=len),
    };
    let range = *[2, 16, 1000, 1 << 20].get(rng.gen_range(0..4)).unwrap();
    let mut keys = sorted_run(rng, middle, range);
    keys.extend(sorted_run(rng, len - middle, range));
    (records(&keys), middle)
}

/// Keys sorted by a trusted comparison sort.
pub fn sorted_keys(v: &[Rec]) -> Vec<i32> {
    let mut k: Vec<i32> = v.iter().map(|r| r.key).collect();
    k.sort();
    k
}

/// Full (key, payload) multiset, canonically ordered.
pub fn multiset(v: &[Rec]) -> Vec<(i32, [u8; 4])> {
    let mut m: Vec<_> = v.iter().map(|r| (r.key, r.payload)).collect();
    m.sort();
    m
}

pub fn assert_merged(before: &[Rec], after: &[Rec], what: &str) {
    let keys: Vec<i32> = after.iter().map(|r| r.key).collect();
    assert_eq!(keys, sorted_keys(before), "{what}: not sorted");
    assert_eq!(
        multiset(after),
        multiset(before),
        "{what}: elements changed"
    );
}

/// Every valid pivot pair by direct comparison of all element pairs.
pub fn brute_valid(a: &[i32], b: &[i32], pa: usize, pb: usize) -> bool {
    a[..pa].iter().all(|x| b[pb..].iter().all(|y| x <= y))
        && b[..pb].iter().all(|x| a[pa..].iter().all(|y| x <= y))
}

/// Most balanced valid pair by exhaustive enumeration, smallest a then b on ties.
pub fn brute_optimal(a: &[i32], b: &[i32]) -> PivotPair {
    let total = a.len() + b.len();
    let mut best: Option<(usize, PivotPair)> = None;
    for pa in 0..=a.len() {
        for pb in 0..=b.len() {
            if !brute_valid(a, b, pa, pb) {
                continue;
            }
            let imbalance = (2 * (pa + pb)).abs_diff(total);
            if best.is_none_or(|(i, _)| imbalance < i) {
                best = Some((imbalance, PivotPair::new(pa, pb)));
            }
        }
    }
    best.unwrap().1
}
