use std::process::Command;

use merge_bench::{read_csv, BenchRecord, QualityRow};

fn bench() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_merge-bench"));
    cmd.env("RUST_LOG", "warn");
    cmd
}

#[test]
fn writes_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("results.csv");
    let speedup = dir.path().join("speedup.csv");
    let status = bench()
        .args([
            "--sizes",
            "2^4..2^6",
            "--elem-bytes",
            "4,64",
            "--threads",
            "2",
            "--reps",
            "2",
        ])
        .arg("--out")
        .arg(&out)
        .arg("--speedup-out")
        .arg(&speedup)
        .status()
        .unwrap();
    assert!(status.success());
    let rows: Vec<BenchRecord> = read_csv(std::fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(rows.len(), 5 * 2 * 3 * 3);
    let text = std::fs::read_to_string(&speedup).unwrap();
    assert!(text.starts_with("method,threads,elem_bytes,size,speedup\n"));
}

#[test]
fn median_quality_study_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("quality.csv");
    let status = bench()
        .args(["--study", "median-quality", "--sizes", "2^8..2^10"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let rows: Vec<QualityRow> = read_csv(std::fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(rows.len(), 4 * 3);
    assert!(rows
        .iter()
        .filter(|r| r.t == 2)
        .all(|r| r.rel_diff_findmedian >= -1e-9));
}

#[test]
fn validate_only_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never.csv");
    let output = bench()
        .args([
            "--validate-only",
            "--sizes",
            "100,1000",
            "--elem-bytes",
            "4",
            "--threads",
            "4",
        ])
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("validated"));
    assert!(!out.exists());
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        &["--elem-bytes", "3"][..],
        &["--splits", "0"],
        &["--methods", "bubble"],
        &["--sizes", "2^x"],
        &["--reps", "0"],
        &["--no-such-flag"],
    ] {
        let status = bench()
            .args(args)
            .arg("--validate-only")
            .output()
            .unwrap()
            .status;
        assert_eq!(status.code(), Some(2), "{args:?}");
    }
}
