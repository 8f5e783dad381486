//! `sdw`: analysis, bridge, Gleason and covering-radius commands for
//! binary self-dual codes.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sdw_core::config::{DEFAULT_ENUM_BUDGET, DEFAULT_SYNDROME_BUDGET};
use sdw_core::{Budget, Error};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "sdw", version, about = "Binary self-dual code workbench")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Maximum number of codewords visited by exhaustive enumeration.
    #[arg(long, global = true, env = "SDW_BUDGET_ENUM", default_value_t = DEFAULT_ENUM_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_enum: u64,
    /// Maximum number of syndrome-table entries.
    #[arg(long, global = true, default_value_t = DEFAULT_SYNDROME_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_synd: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for produced code files.
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
}

impl GlobalOpts {
    pub fn budget(&self) -> Budget {
        Budget::new(self.budget_enum, self.budget_synd).expect("clap rejects zero budgets")
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters, minimum weight, extremality and enumerator of a code.
    Analyze { path: PathBuf },
    /// Move between extremal doubly even and s-extremal codes of length 24k+8.
    Bridge(BridgeArgs),
    /// Solve the Gleason system for s-extremal enumerators.
    Gleason(GleasonArgs),
    /// Covering radius and coset-leader weight census.
    Covering {
        path: PathBuf,
        /// Write the syndrome table to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Parse a code file and print it as generator rows.
    Parse { path: PathBuf },
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["census", "v", "reverse"]))]
pub struct BridgeArgs {
    pub path: PathBuf,
    /// One neighbor per minimum-weight coset of the doubly even input.
    #[arg(long)]
    pub census: bool,
    /// Coset vector, inline (`{1,5,..}` or a 0/1 string) or a file.
    #[arg(long)]
    pub v: Option<String>,
    /// Treat the input as s-extremal and produce its doubly even neighbors.
    #[arg(long)]
    pub reverse: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "8")]
    Eight,
    #[value(name = "16")]
    Sixteen,
}

#[derive(Args, Debug)]
pub struct GleasonArgs {
    /// Length residue mod 24.
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// A single `k` or an inclusive range `a..b`.
    #[arg(long)]
    pub k: String,
    /// Include wall-clock times in scan output.
    #[arg(long)]
    pub timing: bool,
}

/// Exit status for input that could not be read or parsed.
const EXIT_INPUT: u8 = 2;

fn is_input_error(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(
            Error::Parse(_)
                | Error::Io(_)
                | Error::CoordinateOutOfRange { .. }
                | Error::DuplicateCoordinate(_)
        )
    ) || e.downcast_ref::<commands::UsageError>().is_some()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Analyze { path } => commands::analyze(g, path),
        Command::Bridge(args) => commands::bridge(g, args),
        Command::Gleason(args) => commands::gleason(args),
        Command::Covering { path, dump } => commands::covering(g, path, dump.as_deref()),
        Command::Parse { path } => commands::parse(g, path),
    };
    match outcome.and_then(|r| Ok(r.emit(g.format).map(|()| r.ok)?)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_input_error(&e) {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
