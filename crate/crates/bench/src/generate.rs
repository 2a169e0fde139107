//! Benchmark inputs: two runs, each grown by `x[i] = x[i-1] + 5 u`, `u` uniform
//! in `[0, 1)`, from `x[0] = 0`, with keys truncated to integers.

use inplace_merge::Record;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Position of the run boundary: `round(size * split)`.
pub fn split_point(size: usize, split: f64) -> usize {
    ((size as f64 * split).round() as usize).min(size)
}

fn push_run(rng: &mut ChaCha8Rng, len: usize, out: &mut Vec<i32>) {
    let mut x = 0.0f64;
    for i in 0..len {
        if i > 0 {
            x += rng.gen::<f64>() * 5.0;
        }
        out.push(x as i32);
    }
}

/// Keys of both runs and the boundary index. Deterministic in `seed`.
pub fn generate_keys(size: usize, split: f64, seed: u64) -> (Vec<i32>, usize) {
    let middle = split_point(size, split);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys = Vec::with_capacity(size);
    push_run(&mut rng, middle, &mut keys);
    push_run(&mut rng, size - middle, &mut keys);
    (keys, middle)
}

/// Full records for the given width. Keys do not depend on `PAD`; payloads
/// come from a separate stream of the same seed.
pub fn generate_input<const PAD: usize>(
    size: usize,
    split: f64,
    seed: u64,
) -> (Vec<Record<i32, PAD>>, usize) {
    let (keys, middle) = generate_keys(size, split, seed);
    let mut payload_rng = ChaCha8Rng::seed_from_u64(seed);
    payload_rng.set_stream(1);
    let mut out = Vec::with_capacity(size);
    for key in keys {
        let mut rec = Record::from_key(key);
        payload_rng.fill_bytes(&mut rec.payload);
        out.push(rec);
    }
    (out, middle)
}
