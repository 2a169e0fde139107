//! The measurement grid: every (width, size, split, method, threads) cell,
//! timed over repeated merges of the same generated input.

use std::time::Instant;

use inplace_merge::{is_sorted_by_key, Record};
use log::{debug, info, warn};

use crate::config::BenchConfig;
use crate::error::{BenchError, Result};
use crate::generate::generate_input;
use crate::method::Method;
use crate::report::{round_split, BenchRecord};

/// Order-independent digest of a record: equal multisets of records give
/// equal sums.
fn record_digest<const PAD: usize>(r: &Record<i32, PAD>) -> u64 {
    let mut h = (r.key as u32 as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for chunk in r.payload.chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        h = (h ^ u64::from_le_bytes(word)).wrapping_mul(0x100_0000_01b3);
    }
    h ^ (h >> 29)
}

fn digest<const PAD: usize>(v: &[Record<i32, PAD>]) -> u64 {
    v.iter().map(record_digest).fold(0, u64::wrapping_add)
}

/// What a correct merge of one input must produce.
struct Expected {
    keys: Vec<i32>,
    digest: u64,
}

impl Expected {
    fn of<const PAD: usize>(input: &[Record<i32, PAD>]) -> Self {
        let mut keys: Vec<i32> = input.iter().map(|r| r.key).collect();
        keys.sort_unstable();
        Expected {
            keys,
            digest: digest(input),
        }
    }

    /// Describes the first difference between `out` and the expected result.
    fn check<const PAD: usize>(&self, out: &[Record<i32, PAD>]) -> Option<String> {
        if !is_sorted_by_key(out) {
            let i = out
                .windows(2)
                .position(|w| w[0].key > w[1].key)
                .unwrap_or(0);
            return Some(format!("output not sorted at index {i}"));
        }
        if let Some(i) = out.iter().zip(&self.keys).position(|(r, &k)| r.key != k) {
            return Some(format!(
                "key multiset differs from input (first at index {i})"
            ));
        }
        if digest(out) != self.digest {
            return Some("payloads were not carried with their keys".into());
        }
        None
    }
}

struct Cell<'a> {
    method: Method,
    threads: usize,
    elem_bytes: usize,
    size: usize,
    split: f64,
    reps: usize,
    warmup: bool,
    expected: &'a Expected,
}

impl Cell<'_> {
    fn failure(&self, reason: String) -> BenchError {
        BenchError::Validation {
            method: self.method.name().to_string(),
            threads: self.threads,
            elem_bytes: self.elem_bytes,
            size: self.size,
            split: self.split,
            reason,
        }
    }

    /// Runs all repetitions of the cell, checking each result.
    fn measure<const PAD: usize>(
        &self,
        master: &[Record<i32, PAD>],
        middle: usize,
        work: &mut [Record<i32, PAD>],
    ) -> Result<BenchRecord> {
        let mut times = Vec::with_capacity(self.reps);
        for rep in 0..self.reps + usize::from(self.warmup) {
            work.copy_from_slice(master);
            let start = Instant::now();
            let outcome = self.method.run(work, middle, self.threads);
            let elapsed = start.elapsed();
            outcome.map_err(|e| self.failure(e.to_string()))?;
            if let Some(reason) = self.expected.check(work) {
                return Err(self.failure(reason));
            }
            if rep > 0 || !self.warmup {
                times.push(elapsed.as_nanos() as u64);
            }
        }
        let min_ns = *times.iter().min().expect("reps >= 1");
        let max_ns = *times.iter().max().expect("reps >= 1");
        let mean = times.iter().map(|&t| t as f64).sum::<f64>() / times.len() as f64;
        Ok(BenchRecord {
            method: self.method.name().to_string(),
            threads: self.threads,
            elem_bytes: self.elem_bytes,
            size: self.size,
            split: round_split(self.split),
            mean_ns: mean.clamp(min_ns as f64, max_ns as f64),
            min_ns,
            max_ns,
        })
    }
}

fn run_width<const PAD: usize>(
    config: &BenchConfig,
    elem_bytes: usize,
    out: &mut Vec<BenchRecord>,
) -> Result<()> {
    debug_assert_eq!(std::mem::size_of::<Record<i32, PAD>>(), elem_bytes);
    for &size in &config.sizes {
        let bytes = size.saturating_mul(elem_bytes);
        if bytes > config.max_bytes {
            warn!("skipping size={size} elem_bytes={elem_bytes}: {bytes} bytes exceeds the {} byte cap", config.max_bytes);
            continue;
        }
        for &split in &config.splits {
            let (master, middle) = generate_input::<PAD>(size, split, config.seed);
            let expected = Expected::of(&master);
            let mut work = master.clone();
            for &method in &config.methods {
                for threads in config.threads_for(method) {
                    let cell = Cell {
                        method,
                        threads,
                        elem_bytes,
                        size,
                        split,
                        reps: config.reps,
                        warmup: config.warmup,
                        expected: &expected,
                    };
                    let record = cell.measure(&master, middle, &mut work)?;
                    debug!("{record:?}");
                    out.push(record);
                }
            }
        }
        info!("elem_bytes={elem_bytes} size={size} done");
    }
    Ok(())
}

macro_rules! dispatch_width {
    ($bytes:expr, $config:expr, $out:expr; $($width:literal => $pad:literal),* $(,)?) => {
        match $bytes {
            $($width => run_width::<$pad>($config, $width, $out),)*
            other => Err(BenchError::Config(format!("unsupported element width {other} bytes"))),
        }
    };
}

/// Runs every cell of the grid in order: element width, size, split, method,
/// worker count. Each repetition merges a fresh copy of the cell's input and
/// is checked for sortedness, key multiset and payload integrity; the first
/// failure aborts the run.
pub fn run_grid(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let mut out = Vec::new();
    for &elem_bytes in &config.elem_bytes {
        dispatch_width!(elem_bytes, config, &mut out;
            4 => 0, 8 => 4, 16 => 12, 32 => 28, 64 => 60, 128 => 124, 256 => 252,
            512 => 508, 1024 => 1020, 4096 => 4092, 16384 => 16380, 65540 => 65536,
        )?;
    }
    Ok(out)
}

/// Number of records a full run of `config` produces, ignoring the byte cap.
pub fn expected_rows(config: &BenchConfig) -> usize {
    let per_cell: usize = config
        .methods
        .iter()
        .map(|&m| config.threads_for(m).len())
        .sum();
    per_cell * config.elem_bytes.len() * config.sizes.len() * config.splits.len()
}

/// Runs every cell once without warm-up, keeping only the checks.
pub fn validate_grid(config: &BenchConfig) -> Result<usize> {
    config.validate()?;
    let quick = BenchConfig {
        reps: 1,
        warmup: false,
        ..config.clone()
    };
    run_grid(&quick).map(|rows| rows.len())
}
