use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "robin-rod",
    version,
    about = "Extremal heat sources on a rod with Robin ends"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the rod for a step source read from JSON.
    Solve(SolveArgs),
    /// Print the sharp bound and its extremal source.
    Bound(BoundArgs),
    /// Check the closed-form bounds against the brute-force oracles.
    Verify(VerifyArgs),
    /// Emit figure data.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    Fig1a,
    Fig1b,
    Fig2,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// Ground heat.
    #[arg(long = "m", allow_negative_numbers = true)]
    pub ground: f64,
    /// Top heat.
    #[arg(long = "M", allow_negative_numbers = true)]
    pub top: f64,
    /// Average heat.
    #[arg(long = "s", allow_negative_numbers = true)]
    pub average: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n_cells: Option<usize>,
    #[arg(long)]
    pub n_grid: Option<usize>,
    #[arg(long)]
    pub n_samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Step source as `{"breakpoints": [...], "values": [...]}`.
    #[arg(long)]
    pub source: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub theorem: u8,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub x0: f64,
    /// Also run the matching oracle and fill in `oracle_estimate`.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub knobs: OracleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), conflicts_with = "all")]
    pub theorem: Option<u8>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub x0: f64,
    #[command(flatten)]
    pub knobs: OracleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub kind: FigureKind,
    /// Robin parameter for fig1b.
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long = "m", default_value_t = 1.0, allow_negative_numbers = true)]
    pub ground: f64,
    #[arg(long = "M", default_value_t = 3.0, allow_negative_numbers = true)]
    pub top: f64,
    #[arg(long = "s", default_value_t = 1.4, allow_negative_numbers = true)]
    pub average: f64,
    /// `l,delta,alpha` triple for fig2; repeatable.
    #[arg(long = "curve", allow_hyphen_values = true)]
    pub curves: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}
