use std::path::PathBuf;
use std::str::FromStr;

use bigmeans_suite::Algorithm;
use clap::{Args, Parser, Subcommand};
use data_io::MatrixFormat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "VLS_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "vls-bench",
    version,
    about = "Sample-restart clustering: run, benchmark, and verify against an exhaustive oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Cluster a dataset file and persist result, labels, and history.
    Cluster(ClusterArgs),
    /// Benchmark an algorithm against full-data restarts on synthetic data.
    Bench(BenchArgs),
    /// Check the stack against the exhaustive small-instance oracle.
    Verify(VerifyArgs),
}

/// An inclusive `LO:HI` range argument.
#[derive(Debug, Clone, Copy)]
pub struct RangeArg {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected LO:HI, got '{s}'"))?;
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("cannot parse '{t}' as an integer"))
        };
        Ok(RangeArg {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

#[derive(Args)]
pub struct ClusterArgs {
    /// Input matrix file.
    #[arg(long, value_name = "PATH")]
    pub data: PathBuf,
    /// Input tokenization: csv or whitespace.
    #[arg(long, value_name = "FMT", default_value = "csv")]
    pub format: MatrixFormat,
    /// Skip the first non-blank input line.
    #[arg(long)]
    pub skip_header: bool,
    /// Number of clusters.
    #[arg(long, value_name = "P")]
    pub clusters: usize,
    /// Algorithm: bigmeans, bigoptima, or bigvns.
    #[arg(long, value_name = "NAME")]
    pub algo: Algorithm,
    /// Fixed sample size (bigmeans, bigvns).
    #[arg(long, value_name = "S")]
    pub sample_size: Option<usize>,
    /// Sample size range (bigoptima).
    #[arg(long, value_name = "LO:HI")]
    pub sample_range: Option<RangeArg>,
    /// Iteration budget.
    #[arg(long, value_name = "T")]
    pub iters: u64,
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "W", default_value_t = 1)]
    pub workers: u32,
    /// Result document path; labels and history sit next to it.
    /// Defaults to result.json under VLS_OUT_DIR (or the working directory).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Solution-shake power range (bigvns only; default 0:min(2, P)).
    #[arg(long, value_name = "LO:HI")]
    pub shake_range: Option<RangeArg>,
    /// Compare candidate and incumbent on the fresh sample instead of the
    /// recorded best value.
    #[arg(long)]
    pub reevaluate: bool,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Number of mixture components.
    #[arg(long, default_value_t = 5)]
    pub centers: usize,
    /// Component standard deviation.
    #[arg(long, default_value_t = 0.05)]
    pub sigma: f64,
    /// Grid spacing between component centers.
    #[arg(long, default_value_t = 0.125)]
    pub spacing: f64,
    #[arg(long, default_value_t = 2000)]
    pub points_per_center: usize,
    /// Number of clusters; defaults to the center count.
    #[arg(long)]
    pub clusters: Option<usize>,
    #[arg(long, default_value = "bigmeans")]
    pub algo: Algorithm,
    #[arg(long, default_value_t = 500)]
    pub sample_size: usize,
    #[arg(long, value_name = "LO:HI")]
    pub sample_range: Option<RangeArg>,
    #[arg(long, default_value_t = 100)]
    pub iters: u64,
    /// Number of seeded repetitions.
    #[arg(long, default_value_t = 10)]
    pub seeds: u32,
    /// Full-data restarts per baseline run.
    #[arg(long, default_value_t = 10)]
    pub baseline_restarts: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: u32,
    #[arg(long, value_name = "LO:HI")]
    pub shake_range: Option<RangeArg>,
    /// Output directory for summary and per-run histories.
    #[arg(long, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Corrupt one computed objective to prove the harness catches it.
    #[arg(long, hide = true)]
    pub self_test_corrupt: bool,
}

/// CLI-level failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<data_io::IoError> for CliError {
    fn from(err: data_io::IoError) -> Self {
        CliError::Failure(err.to_string())
    }
}

impl From<bigmeans_suite::SuiteError> for CliError {
    fn from(err: bigmeans_suite::SuiteError) -> Self {
        match err {
            bigmeans_suite::SuiteError::InvalidConfig(msg) => CliError::Usage(msg),
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cluster(args) => crate::cluster::run(&args),
        Command::Bench(args) => crate::bench::run(&args),
        Command::Verify(args) => crate::verify::run(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

/// Default output path: `result.json` under [`OUT_DIR_ENV`] or the working
/// directory.
pub fn default_out_path() -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => PathBuf::from(dir).join("result.json"),
        None => PathBuf::from("result.json"),
    }
}
