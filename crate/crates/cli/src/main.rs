//! `uqd`: experiment runner and verification harness for bias-class
//! discrimination through a universal QRAM query interface.
//!
//! Subcommands cover the whole pipeline: Monte Carlo discrimination
//! experiments (`single`, `multi`), closed-form verification suites
//! (`verify`), query-count scaling (`scan`), Chernoff exponents
//! (`chernoff`), and dense matrix dumps (`ensemble`, `collective`).
//!
//! Exit codes: 0 success, 1 verification/confidence failure, 2 usage error.

mod cmd;
mod env_caps;
mod output;
mod parallel;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "uqd",
    version,
    about = "Bias-class discrimination experiments over a universal QRAM query interface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-copy Helstrom discrimination Monte Carlo
    Single(cmd::single::Args),
    /// Multi-query likelihood-ratio-test Monte Carlo
    Multi(cmd::multi::Args),
    /// Closed-form vs brute-force verification suites
    Verify(cmd::verify::Args),
    /// Query counts needed across a bias-gap grid
    Scan(cmd::scan::Args),
    /// Chernoff information over all weight pairs
    Chernoff(cmd::chernoff::Args),
    /// Dense ensemble state of one weight class
    Ensemble(cmd::ensemble::Args),
    /// Trace distances between t-copy ensemble states
    Collective(cmd::collective::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Single(args) => cmd::single::run(&args),
        Command::Multi(args) => cmd::multi::run(&args),
        Command::Verify(args) => cmd::verify::run(&args),
        Command::Scan(args) => cmd::scan::run(&args),
        Command::Chernoff(args) => cmd::chernoff::run(&args),
        Command::Ensemble(args) => cmd::ensemble::run(&args),
        Command::Collective(args) => cmd::collective::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("run `uqd <command> --help` for usage");
            ExitCode::from(2)
        }
    }
}
