//! Argument parsing and subcommands of the `noncross` binary.

pub mod commands;
pub mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "noncross", version, about = "Uniform random non-crossing configurations of a convex polygon")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw uniform configurations and write them as JSON lines or SVG.
    Sample(SampleArgs),
    /// Exact or asymptotic number of configurations.
    Count(CountArgs),
    /// Monte Carlo report of one statistic, optionally tested against a limit law.
    Stats(StatsArgs),
    /// Largest face or vertex degree against its concentration window along a grid of sizes.
    Concentration(ConcentrationArgs),
    /// Run the acceptance battery.
    Test(TestArgs),
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// dissection, triangulation, dissection-A, nct, pair-partition, partition or nc-graph.
    #[arg(long)]
    pub model: String,
    /// Face degrees for dissection-A: `all`, `k+` or a comma-separated list.
    #[arg(long)]
    pub degrees: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleFormat {
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Size parameter of the model.
    #[arg(long)]
    pub n: usize,
    /// Number of independent samples; replica j uses the stream j.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SampleFormat::Json)]
    pub format: SampleFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    Exact,
    Asymptotic,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Size parameter; required in exact mode.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = CountMode::Exact)]
    pub mode: CountMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// root-vertex, max-vertex, root-face, max-face, longest-chord, intersections or height.
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// root-vertex, root-face, root-degree or longest-chord-cdf.
    #[arg(long)]
    pub limit: Option<String>,
    /// Angle fractions of the two points separated by the counted chords.
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.6)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConcentrationArgs {
    /// face or vertex.
    #[arg(long)]
    pub kind: String,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',', default_values_t = [500, 2000, 8000])]
    pub grid: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Comma-separated groups: enumeration, asymptotics, uniformity,
    /// local-limits, scaling, concentration, structure.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

/// Failures, each with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Infeasible(String),
    Io(String),
    AcceptanceFailed,
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Infeasible(_) => 2,
            Self::Io(_) => 3,
            Self::AcceptanceFailed => 4,
        }
    }
}

/// Sizes the global thread pool from `NONCROSS_THREADS` when it is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("NONCROSS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("NONCROSS_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs one parsed command line.
pub fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Sample(a) => commands::sample(&a),
        Command::Count(a) => commands::count(&a),
        Command::Stats(a) => commands::stats(&a),
        Command::Concentration(a) => commands::concentration(&a),
        Command::Test(a) => commands::test(&a),
    }
}
