//! Command-line front end for `pathcover-core`.
//!
//! Every command builds a [`RunReport`]; `--json` prints it, otherwise a
//! short text rendering is printed. Exit status is 0 when every check
//! passed, 1 when some check failed, and 2 on errors.

mod commands;
mod report;

use std::io::BufRead;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use report::{Check, RunReport};

#[derive(Debug, Parser)]
#[command(name = "pathcover-lab", version, about = "Path and cycle cover numbers of small graphs")]
pub struct Cli {
    /// Print the full JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest order the exact solvers accept (defaults: 18 for pc/pp, 16
    /// for cc/cp, unlimited for alpha and ham).
    #[arg(long, global = true)]
    pub max_order_exact: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph6 encoding of a family member, e.g. `F2(3,3)`.
    Gen { spec: String },
    /// Compute graph invariants with witnesses.
    Invariants(InvariantsArgs),
    /// Test graphs for induced copies of family members.
    Free(FreeArgs),
    /// Build a certified bounded path cover or partition.
    Cover(CoverArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print seeded random graphs in graph6.
    Sample(SampleArgs),
}

/// Graph arguments: family specs or graph6 strings. Without any, graph6
/// lines are read from standard input.
#[derive(Debug, Args)]
pub struct GraphArgs {
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    Alpha,
    Pc,
    Pp,
    Cc,
    Cp,
    Ham,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Which invariants to compute (comma separated; default all).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub which: Vec<Invariant>,
}

#[derive(Debug, Args)]
pub struct FreeArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// A forbidden graph (spec or graph6); repeat for a family.
    #[arg(long = "family", short = 'f', required = true)]
    pub family: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverMode {
    Cover,
    Partition,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Parameter of the forbidden family.
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = CoverMode::Cover)]
    pub mode: CoverMode,
    /// Test the forbidden-subgraph hypothesis before constructing.
    #[arg(long)]
    pub check_freeness: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Exact extremal values of the named families.
    Lemmas,
    /// Inequalities on seeded random graphs.
    Random,
    /// Brute-force Ramsey base case and the upper-bound recursion.
    Ramsey,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Number of random graphs (random suite only).
    #[arg(long, default_value_t = 500)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub order: usize,
    /// Edge probability as a decimal or `a/b`.
    #[arg(long)]
    pub edge_prob: String,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Skip disconnected draws.
    #[arg(long)]
    pub connected_only: bool,
    /// Always include the path 0-1-...-(order-1).
    #[arg(long)]
    pub backbone: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pathcover_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("reading standard input: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// A finished command: the report and its text rendering.
#[derive(Debug)]
pub struct Output {
    pub report: RunReport,
    pub text: String,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Result<Output, CliError> {
    use commands::*;
    match &cli.command {
        Command::Gen { spec } => gen(spec),
        Command::Invariants(args) => invariants(cli, args, stdin),
        Command::Free(args) => free(args, stdin),
        Command::Cover(args) => cover(args, stdin),
        Command::Verify(args) => verify(cli, args),
        Command::Sample(args) => sample(cli, args),
    }
}
