//! `broomkit`: build, color, check and verify rainbow-broom-free colorings.
//!
//! Exit status: 0 when a claim holds, a graph is rainbow-free or a value was
//! computed; 1 when a counterexample or rainbow copy was found; 2 on usage
//! errors or refused instances.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "broomkit", version, about = "Rainbow broom constructions and verifiers")]
struct Cli {
    /// Include wall-clock timings in reports (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a construction and report its edge count against the slope.
    Construct(ConstructArgs),
    /// Look for a rainbow broom in a colored graph file.
    Check(CheckArgs),
    /// Properly edge-color a graph file with a bounded number of colors.
    Color(ColorArgs),
    /// Exhaustively or randomly verify a finite claim.
    Verify(VerifyArgs),
    /// Compute ex*(n, B_{k,l}) by brute force.
    Exstar(ExstarArgs),
    /// List the good subgraphs of K_{k+1}.
    EnumerateGood(EnumerateGoodArgs),
}

#[derive(Debug, Args)]
pub(crate) struct Output {
    /// Emit DOT instead of JSON.
    #[arg(long)]
    dot: bool,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("regime").required(true).args(["odd", "even_small", "even_large", "jr"])))]
pub(crate) struct ConstructArgs {
    /// Disjoint 1-factorized K_{k+1} (odd k).
    #[arg(long)]
    odd: bool,
    /// Disjoint (k-1)-colored K_k (k in {2, 4}).
    #[arg(long)]
    even_small: bool,
    /// Disjoint k-colored good subgraphs of K_{k+1} (even k >= 6).
    #[arg(long)]
    even_large: bool,
    /// K_{k+1} minus one color class; contains a rainbow B_{k,2}.
    #[arg(long)]
    jr: bool,
    /// Vertex count (ignored with --jr, which always has k+1 vertices).
    #[arg(short, long, required_unless_present = "jr")]
    n: Option<usize>,
    #[arg(short, long)]
    k: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub(crate) struct CheckArgs {
    /// Colored graph JSON, or `-` for standard input.
    file: PathBuf,
    #[arg(short, long)]
    k: usize,
    /// Handle length of the broom.
    #[arg(short = 'l', long = "handle", default_value_t = 2)]
    handle: usize,
}

#[derive(Debug, Args)]
pub(crate) struct ColorArgs {
    /// Graph JSON, or `-` for standard input.
    file: PathBuf,
    /// Color budget.
    #[arg(short, long)]
    k: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub(crate) enum Claim {
    /// Rainbow B_{k,2} iff a degree k-1 vertex, over k^2/2-edge subgraphs of K_{k+1}.
    #[value(name = "no-k-minus-1")]
    NoKMinus1,
    /// Every k^2/2-edge subgraph of K_{k+1} is k-edge-colorable.
    Plantholt,
    /// Good subgraphs of K_{k+1} exist exactly when k >= 6.
    GoodSubgraphs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").args(["exhaustive", "sampled"])))]
pub(crate) struct VerifyArgs {
    #[arg(value_enum)]
    claim: Claim,
    #[arg(short, long)]
    k: usize,
    /// Check every instance (default).
    #[arg(long)]
    exhaustive: bool,
    /// Check this many random instances instead.
    #[arg(long, value_name = "COUNT")]
    sampled: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "sampled")]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub(crate) enum Mode {
    Full,
    Pruned,
}

#[derive(Debug, Args)]
pub(crate) struct ExstarArgs {
    #[arg(short, long)]
    n: usize,
    #[arg(short, long)]
    k: usize,
    #[arg(short = 'l', long = "handle", default_value_t = 2)]
    handle: usize,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
}

#[derive(Debug, Args)]
pub(crate) struct EnumerateGoodArgs {
    #[arg(short, long)]
    k: usize,
    /// Keep one representative per isomorphism class.
    #[arg(long)]
    up_to_iso: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Check(a) => commands::check(a),
        Command::Color(a) => commands::color(a),
        Command::Verify(a) => commands::verify(a, cli.timing),
        Command::Exstar(a) => commands::exstar(a, cli.timing),
        Command::EnumerateGood(a) => commands::enumerate_good(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
