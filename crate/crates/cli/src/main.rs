mod build;
mod certify;
mod check;
mod enumerate;
mod io;
mod screen;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::io::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "hadwiger2",
    version,
    about = "Graphs with independence number two: constructions, certificates and conjecture checks"
)]
pub struct Cli {
    /// Seed for every randomised step.
    #[arg(long, env = "HADWIGER2_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    /// Search budget (nodes or moves, depending on the search).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Read graph6 input from this file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named graph family and print it as graph6.
    Build(BuildArgs),
    /// Check one conjecture on every input graph.
    Check(CheckArgs),
    /// Run a check over all connected graphs with α ≤ 2 up to some order.
    Enumerate(EnumerateArgs),
    /// Produce and verify a clique-cover certificate.
    Certify(CertifyArgs),
    /// Evaluate the counterexample properties on every input graph.
    Screen,
}

/// Parameters shared by the family constructors.
#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Point of the Steiner system used by the Gewirtz graph.
    #[arg(long)]
    pub point: Option<usize>,
    /// Cyclic factor orders of an abelian group, e.g. `7` or `4,4`.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<usize>,
    /// Connection set as group indices.
    #[arg(long, value_delimiter = ',')]
    pub connection: Vec<usize>,
    /// Per-vertex multiplicities for `inflate`.
    #[arg(long, value_delimiter = ',')]
    pub mult: Vec<usize>,
    /// Uniform multiplicity for `inflate`.
    #[arg(long)]
    pub uniform: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub params: Params,
    /// Output the complement instead.
    #[arg(long)]
    pub complement: bool,
    /// Write one label per vertex to this file.
    #[arg(long, value_name = "FILE")]
    pub labels: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub conjecture: String,
    /// Number of seagulls for `seagulls`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Extra graph6 patterns for `unavoidable`.
    #[arg(long, value_name = "FILE")]
    pub patterns: Option<PathBuf>,
    /// Write witnesses to this file.
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub min_n: usize,
    #[arg(long, default_value = "none")]
    pub check: String,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// `clebsch`, `mesner`, `kneser`, `cover4` or `verify`.
    #[arg(long)]
    pub kind: String,
    #[command(flatten)]
    pub params: Params,
    /// Certificate to check with `--kind verify`.
    #[arg(long, value_name = "FILE")]
    pub cert: Option<PathBuf>,
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Build(a) => build::run(cli, a),
        Command::Check(a) => check::run(cli, a),
        Command::Enumerate(a) => enumerate::run(cli, a),
        Command::Certify(a) => certify::run(cli, a),
        Command::Screen => screen::run(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
