use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use log::info;

use merge_bench::config::{DEFAULT_MAX_BYTES, DEFAULT_REPS};
use merge_bench::{
    median_quality_study, parse_list, parse_methods, parse_sizes, run_grid, speedup_table,
    validate_grid, write_csv, BenchConfig, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Study {
    /// Relative size of the largest leaf pair, double binary search vs. optimum.
    MedianQuality,
}

/// Times the in-place merge methods over a grid of sizes, element widths and
/// split positions, and writes one CSV row per cell.
#[derive(Debug, Parser)]
#[command(name = "merge-bench", version)]
struct Cli {
    /// Total element counts: `2^2..2^22` (doubling) or a comma list.
    #[arg(long)]
    sizes: Option<String>,

    /// Record widths in bytes, comma separated.
    #[arg(long, default_value = "4,64,512,1024,16384,65540")]
    elem_bytes: String,

    /// Fractions of the array taken by the first run.
    #[arg(long, default_value = "0.25,0.5,0.75")]
    splits: String,

    /// Methods to run, comma separated, or `all`.
    #[arg(long, default_value = "all")]
    methods: String,

    /// Worker counts for the parallel methods, rounded down to powers of two.
    #[arg(long, default_value = "8,16")]
    threads: String,

    #[arg(long, default_value_t = DEFAULT_REPS)]
    reps: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value = "results.csv")]
    out: PathBuf,

    /// Also write split-averaged speedups over seq-rotation to this file.
    #[arg(long)]
    speedup_out: Option<PathBuf>,

    /// Skip cells whose array would exceed this many bytes.
    #[arg(long, default_value_t = DEFAULT_MAX_BYTES)]
    max_bytes: usize,

    /// Skip the untimed warm-up repetition.
    #[arg(long)]
    no_warmup: bool,

    /// Run a study instead of the timing grid.
    #[arg(long, value_enum)]
    study: Option<Study>,

    /// Merge every cell once and check the results; write nothing.
    #[arg(long)]
    validate_only: bool,
}

fn config_from(cli: &Cli) -> Result<BenchConfig> {
    let defaults = BenchConfig::default();
    Ok(BenchConfig {
        sizes: match &cli.sizes {
            Some(s) => parse_sizes(s)?,
            None => defaults.sizes,
        },
        elem_bytes: parse_list(&cli.elem_bytes, "element width")?,
        splits: parse_list(&cli.splits, "split")?,
        methods: parse_methods(&cli.methods)?,
        threads: parse_list(&cli.threads, "thread count")?,
        reps: cli.reps,
        seed: cli.seed,
        out: cli.out.clone(),
        max_bytes: cli.max_bytes,
        warmup: !cli.no_warmup,
    })
}

fn run(cli: Cli) -> Result<()> {
    let mut config = config_from(&cli)?;

    if let Some(Study::MedianQuality) = cli.study {
        if cli.sizes.is_none() {
            config.sizes = parse_sizes("2^8..2^16")?;
        }
        config.validate()?;
        let rows = median_quality_study(&config.sizes, &config.splits, config.seed)?;
        write_csv(BufWriter::new(File::create(&config.out)?), &rows)?;
        info!("wrote {} rows to {}", rows.len(), config.out.display());
        return Ok(());
    }

    if cli.validate_only {
        let cells = validate_grid(&config)?;
        println!("{cells} cells validated");
        return Ok(());
    }

    let records = run_grid(&config)?;
    write_csv(BufWriter::new(File::create(&config.out)?), &records)?;
    info!("wrote {} rows to {}", records.len(), config.out.display());

    if let Some(path) = &cli.speedup_out {
        let table = speedup_table(&records, "seq-rotation")?;
        write_csv(BufWriter::new(File::create(path)?), &table)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
