//! CSV rows and derived tables.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{BenchError, Result};

fn two_decimals<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:.2}"))
}

/// Rounds a split fraction to the two decimals kept in the CSV.
pub fn round_split(split: f64) -> f64 {
    (split * 100.0).round() / 100.0
}

/// One measured grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub method: String,
    pub threads: usize,
    pub elem_bytes: usize,
    pub size: usize,
    #[serde(serialize_with = "two_decimals")]
    pub split: f64,
    pub mean_ns: f64,
    pub min_ns: u64,
    pub max_ns: u64,
}

/// One row of the median-quality study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityRow {
    pub t: usize,
    pub size: usize,
    pub rel_diff_findmedian: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeedupRow {
    pub method: String,
    pub threads: usize,
    pub elem_bytes: usize,
    pub size: usize,
    pub speedup: f64,
}

/// Writes rows with a header line, LF line endings.
pub fn write_csv<W: Write, R: Serialize>(out: W, rows: &[R]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<Rd: Read, R: for<'de> Deserialize<'de>>(input: Rd) -> Result<Vec<R>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(BenchError::from)
}

/// Speedup of every record over `baseline`, with split configurations averaged.
///
/// For each (method, threads, elem_bytes, size) the mean times are averaged
/// over splits for both the method and the baseline, and the speedup is
/// `baseline / method`. Every split a method was measured at must have a
/// baseline measurement.
pub fn speedup_table(records: &[BenchRecord], baseline: &str) -> Result<Vec<SpeedupRow>> {
    let split_key = |s: f64| (s * 100.0).round() as i64;
    let base: BTreeMap<(usize, usize, i64), f64> = records
        .iter()
        .filter(|r| r.method == baseline)
        .map(|r| ((r.elem_bytes, r.size, split_key(r.split)), r.mean_ns))
        .collect();

    // (method, threads, elem_bytes, size) -> (sum method, sum baseline)
    type CellKey = (String, usize, usize, usize);
    let mut cells: BTreeMap<CellKey, (f64, f64)> = BTreeMap::new();
    for r in records {
        let b = *base
            .get(&(r.elem_bytes, r.size, split_key(r.split)))
            .ok_or_else(|| BenchError::MissingBaseline {
                baseline: baseline.to_string(),
                elem_bytes: r.elem_bytes,
                size: r.size,
                split: r.split,
            })?;
        let cell = cells
            .entry((r.method.clone(), r.threads, r.elem_bytes, r.size))
            .or_insert((0.0, 0.0));
        cell.0 += r.mean_ns;
        cell.1 += b;
    }

    Ok(cells
        .into_iter()
        .map(|((method, threads, elem_bytes, size), (m, b))| SpeedupRow {
            method,
            threads,
            elem_bytes,
            size,
            speedup: if m > 0.0 { b / m } else { f64::INFINITY },
        })
        .collect())
}
