//! `cfc`: generate, color, probe, verify and benchmark conflict-free
//! colorings from the command line.
//!
//! Exit codes: 0 when every requested check passed, 1 when a check
//! failed or a search ended indeterminate, 2 for usage errors and
//! malformed input files.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod bench;
mod color;
mod gen;
mod io;
mod oracle;
mod verify_cmd;

#[derive(Parser)]
#[command(name = "cfc", version, about = "Conflict-free list coloring toolbox")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit instance families and list assignments in the text formats
    Gen(gen::GenArgs),
    /// Exact chromatic numbers, list colorings and choosability probes
    Oracle(oracle::OracleArgs),
    /// Randomized colorers, raw and composed
    Color(color::ColorArgs),
    /// Independently re-check a coloring against an instance
    Verify(verify_cmd::VerifyArgs),
    /// Run a plan file and append one CSV row per (instance, seed)
    Bench(bench::BenchArgs),
}

/// A command's unhappy endings, separated by exit code.
pub enum Failure {
    /// Bad flags or malformed inputs; exit 2.
    Usage(String),
    /// A requested check did not pass; exit 1.
    Check(String),
}

pub type CmdResult = Result<(), Failure>;

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<cf_core::CoreError> for Failure {
    fn from(e: cf_core::CoreError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<cf_gen::GenError> for Failure {
    fn from(e: cf_gen::GenError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(args) => gen::run(args),
        Cmd::Oracle(args) => oracle::run(args),
        Cmd::Color(args) => color::run(args),
        Cmd::Verify(args) => verify_cmd::run(args),
        Cmd::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
