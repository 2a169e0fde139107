use std::fs::File;

use merge_bench::{
    read_csv, round_split, speedup_table, write_csv, BenchError, BenchRecord, QualityRow,
};
use proptest::prelude::*;

fn fixture() -> Vec<BenchRecord> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/sample.csv");
    read_csv(File::open(path).unwrap()).unwrap()
}

fn speedup_of(rows: &[merge_bench::SpeedupRow], method: &str, elem_bytes: usize) -> f64 {
    rows.iter()
        .find(|r| r.method == method && r.elem_bytes == elem_bytes)
        .unwrap()
        .speedup
}

#[test]
fn fixture_speedups_match_hand_computation() {
    let rows = speedup_table(&fixture(), "seq-rotation").unwrap();
    // baseline mean over splits: 4 bytes -> (1000 + 3000) / 2 = 2000, 64 bytes -> 8000
    assert_eq!(speedup_of(&rows, "seq-rotation", 4), 1.0);
    assert_eq!(speedup_of(&rows, "seq-buffered", 4), 2000.0 / 1000.0);
    assert_eq!(speedup_of(&rows, "soptmov", 4), 2000.0 / 500.0);
    assert_eq!(speedup_of(&rows, "soptmov", 64), 8000.0 / 2000.0);
    assert_eq!(speedup_of(&rows, "srecpar-ls", 4), 2000.0 / 4000.0);
    assert_eq!(rows.len(), 6);
}

#[test]
fn fixture_rewrites_identically() {
    let records = fixture();
    let mut buf = Vec::new();
    write_csv(&mut buf, &records).unwrap();
    let original = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/sample.csv"
    ))
    .unwrap();
    assert_eq!(String::from_utf8(buf).unwrap(), original);
}

#[test]
fn missing_baseline_names_the_cell() {
    let records: Vec<BenchRecord> = fixture()
        .into_iter()
        .filter(|r| !(r.method == "seq-rotation" && r.elem_bytes == 64))
        .collect();
    let err = speedup_table(&records, "seq-rotation").unwrap_err();
    match err {
        BenchError::MissingBaseline {
            elem_bytes, size, ..
        } => assert_eq!((elem_bytes, size), (64, 1024)),
        other => panic!("unexpected error {other}"),
    }
}

fn arb_record() -> impl Strategy<Value = BenchRecord> {
    let methods = prop::sample::select(vec![
        "seq-rotation",
        "seq-buffered",
        "soptmov",
        "srecpar-ls",
        "srecpar-cs",
    ]);
    (
        methods,
        1usize..64,
        4usize..70000,
        0usize..1 << 22,
        1u32..100,
        0u64..1 << 40,
        0u64..1 << 20,
        0.0f64..1.0,
    )
        .prop_map(
            |(method, threads, elem_bytes, size, pct, min_ns, spread, frac)| {
                let max_ns = min_ns + spread;
                BenchRecord {
                    method: method.to_string(),
                    threads,
                    elem_bytes,
                    size,
                    split: round_split(pct as f64 / 100.0),
                    mean_ns: min_ns as f64 + frac * spread as f64,
                    min_ns,
                    max_ns,
                }
            },
        )
}

proptest! {
    #[test]
    fn records_round_trip(records in prop::collection::vec(arb_record(), 0..20)) {
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        prop_assert!(!text.contains('\r'));
        let back: Vec<BenchRecord> = read_csv(text.as_bytes()).unwrap();
        prop_assert_eq!(back, records);
    }

    #[test]
    fn quality_rows_round_trip(t in 1usize..32, size in 0usize..1 << 20, rel in -1.0f64..10.0) {
        let rows = vec![QualityRow { t, size, rel_diff_findmedian: rel }];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let back: Vec<QualityRow> = read_csv(buf.as_slice()).unwrap();
        prop_assert_eq!(back, rows);
    }
}
