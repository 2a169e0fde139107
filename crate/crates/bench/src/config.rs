use std::path::PathBuf;

use inplace_merge::round_down_threads;

use crate::error::{BenchError, Result};
use crate::method::Method;

/// Record widths the harness can instantiate.
pub const SUPPORTED_ELEM_BYTES: [usize; 12] =
    [4, 8, 16, 32, 64, 128, 256, 512, 1024, 4096, 16384, 65540];

pub const DEFAULT_ELEM_BYTES: [usize; 6] = [4, 64, 512, 1024, 16384, 65540];
pub const DEFAULT_SPLITS: [f64; 3] = [0.25, 0.5, 0.75];
pub const DEFAULT_THREADS: [usize; 2] = [8, 16];
pub const DEFAULT_REPS: usize = 50;
/// Cells whose array would exceed this many bytes are skipped.
pub const DEFAULT_MAX_BYTES: usize = 1 << 30;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub elem_bytes: Vec<usize>,
    pub splits: Vec<f64>,
    pub methods: Vec<Method>,
    pub threads: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub max_bytes: usize,
    /// One untimed repetition per cell before measuring.
    pub warmup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: powers_of_two(4, 1 << 22),
            elem_bytes: DEFAULT_ELEM_BYTES.to_vec(),
            splits: DEFAULT_SPLITS.to_vec(),
            methods: Method::ALL.to_vec(),
            threads: DEFAULT_THREADS.to_vec(),
            reps: DEFAULT_REPS,
            seed: 0,
            out: PathBuf::from("results.csv"),
            max_bytes: DEFAULT_MAX_BYTES,
            warmup: true,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(BenchError::Config(msg));
        if let Some(&b) = self
            .elem_bytes
            .iter()
            .find(|b| !SUPPORTED_ELEM_BYTES.contains(b))
        {
            return fail(format!(
                "unsupported element width {b} bytes (supported: {SUPPORTED_ELEM_BYTES:?})"
            ));
        }
        if let Some(s) = self.splits.iter().find(|s| !(**s > 0.0 && **s < 1.0)) {
            return fail(format!("split {s} is not inside (0, 1)"));
        }
        if self.reps == 0 {
            return fail("reps must be at least 1".into());
        }
        if self.threads.contains(&0) {
            return fail("thread counts must be at least 1".into());
        }
        if self.methods.is_empty()
            || self.sizes.is_empty()
            || self.splits.is_empty()
            || self.elem_bytes.is_empty()
        {
            return fail("empty grid dimension".into());
        }
        if self.threads.is_empty() && self.methods.iter().any(|m| m.is_parallel()) {
            return fail("parallel methods need at least one thread count".into());
        }
        Ok(())
    }

    /// Worker counts a method runs with: `[1]` for sequential methods,
    /// otherwise the configured counts rounded down to powers of two, deduplicated.
    pub fn threads_for(&self, method: Method) -> Vec<usize> {
        if !method.is_parallel() {
            return vec![1];
        }
        let mut out: Vec<usize> = self
            .threads
            .iter()
            .map(|&t| round_down_threads(t))
            .collect();
        out.dedup();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `start, 2 start, 4 start, ..` up to and including `end`.
pub fn powers_of_two(start: usize, end: usize) -> Vec<usize> {
    std::iter::successors(Some(start), |&s| s.checked_mul(2))
        .take_while(|&s| s <= end)
        .collect()
}

fn parse_count(s: &str) -> Result<usize> {
    let s = s.trim();
    let bad = || BenchError::Config(format!("cannot parse size `{s}`"));
    if let Some((base, exp)) = s.split_once('^') {
        let base: usize = base.trim().parse().map_err(|_| bad())?;
        let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
        base.checked_pow(exp).ok_or_else(bad)
    } else {
        s.parse().map_err(|_| bad())
    }
}

/// Parses `2^2..2^22` (doubling from start to end) or a comma list such as
/// `1000,2^10,4096`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (parse_count(lo)?, parse_count(hi)?);
        if lo == 0 || lo > hi {
            return Err(BenchError::Config(format!("bad size range `{s}`")));
        }
        return Ok(powers_of_two(lo, hi));
    }
    s.split(',').map(parse_count).collect()
}

pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|item| {
            item.trim()
                .parse()
                .map_err(|_| BenchError::Config(format!("cannot parse {what} `{item}`")))
        })
        .collect()
}

pub fn parse_methods(s: &str) -> Result<Vec<Method>> {
    if s.trim() == "all" {
        return Ok(Method::ALL.to_vec());
    }
    s.split(',').map(str::parse).collect()
}
