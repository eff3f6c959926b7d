//! `partcolor`: generate instances, run the coloring pipelines and the
//! semi-random recovery algorithms, query exact oracles, verify colorings
//! and run benchmark sweeps.
//!
//! Exit codes: 0 when every certification passes, 1 when one fails, 2 on
//! bad parameters or unreadable input, 3 when the relaxation solver stalls.

mod bench;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Param(String),
    #[error("{0}")]
    Io(String),
    #[error("solver stalled: {0}")]
    Stall(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Param(_) | CliError::Io(_) => 2,
            CliError::Stall(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "partcolor",
    version,
    about = "Coloring partially 2- and 3-colorable graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every report-producing subcommand.
#[derive(Args, Clone, Debug)]
pub struct ReportOpts {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Add wall-clock timings to the report (makes it non-reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Clone, Debug)]
pub struct SolverOpts {
    /// Embedding dimension (default: about sqrt(2n)).
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = 1e-4)]
    pub feas_tol: f64,
    #[arg(long, default_value_t = 50_000)]
    pub max_iters: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a semi-random planted instance.
    Generate(GenerateArgs),
    /// Partial 3-coloring through the relaxation pipeline.
    Color3(PipelineArgs),
    /// Partial 2-coloring through the relaxation pipeline.
    Color2(PipelineArgs),
    /// Semi-random 3-coloring recovery.
    Random3(RandomArgs),
    /// Semi-random 2-coloring recovery.
    Random2(RandomArgs),
    /// Color a graph with no odd cycle of length at most --ell.
    ColorOddfree(OddfreeArgs),
    /// Exact answers on small graphs.
    Oracle(OracleArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Run a seeded benchmark suite and emit CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub eps: f64,
    /// Probability of each random good-bad edge.
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Bad subgraph: empty, gnp:Q, clique, or file:PATH holding a full
    /// adversary JSON (which then also fixes --good and --extra).
    #[arg(long, default_value = "empty")]
    pub adv: String,
    /// Good subgraph: partite:Q or stars:S.
    #[arg(long, default_value = "partite:0.5")]
    pub good: String,
    /// Extra good-bad edges: none or random:Q.
    #[arg(long, default_value = "none")]
    pub extra: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// DIMACS output path.
    #[arg(long)]
    pub graph_out: PathBuf,
    /// Ground-truth sidecar path (default: <graph-out>.truth.json).
    #[arg(long)]
    pub truth_out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Args)]
pub struct PipelineArgs {
    /// DIMACS input ("-" for stdin).
    pub graph: PathBuf,
    #[arg(long)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.1)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Degree threshold for peeling (3 colors only; default ceil(n^(3/4))).
    #[arg(long)]
    pub delta: Option<usize>,
    #[command(flatten)]
    pub solver: SolverOpts,
    /// Also write the coloring JSON here.
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Args)]
pub struct RandomArgs {
    pub graph: PathBuf,
    /// Fraction of bad vertices assumed; see --sweep when unknown.
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    pub eps: Option<f64>,
    /// Try a grid of eps values and keep the run that colors the most vertices.
    #[arg(long)]
    pub sweep: bool,
    /// Color exponent of the 3-colorer (3 colors only).
    #[arg(long, default_value_t = 0.5)]
    pub theta: f64,
    /// Ground-truth sidecar written by `generate`, for certification.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Args)]
pub struct OddfreeArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Query {
    Chromatic,
    InducedColorable,
    OddGirth,
    DisjointOddCycles,
    Mis,
    VertexCover,
    Matching,
}

#[derive(Args)]
pub struct OracleArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub query: Query,
    /// Color count for induced-colorable.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Cycle length bound for disjoint-odd-cycles.
    #[arg(long, default_value_t = 5)]
    pub ell: usize,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// Coloring JSON: {"colors": {...}, "discarded": [...], "num_colors": k}.
    pub coloring: PathBuf,
    #[arg(long)]
    pub max_colors: Option<usize>,
    #[arg(long)]
    pub max_discarded: Option<usize>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: bench::Suite,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exit 1 unless at least this many trials succeed.
    #[arg(long)]
    pub min_success: Option<usize>,
    /// CSV path (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(a) => commands::generate(argv, a),
        Command::Color3(a) => commands::pipeline(argv, a, 3),
        Command::Color2(a) => commands::pipeline(argv, a, 2),
        Command::Random3(a) => commands::random3(argv, a),
        Command::Random2(a) => commands::random2(argv, a),
        Command::ColorOddfree(a) => commands::color_oddfree(argv, a),
        Command::Oracle(a) => commands::oracle(argv, a),
        Command::Verify(a) => commands::verify(argv, a),
        Command::Bench(a) => bench::run(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
