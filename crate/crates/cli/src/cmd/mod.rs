//! Subcommand implementations and shared argument groups.

pub mod chernoff;
pub mod collective;
pub mod ensemble;
pub mod multi;
pub mod scan;
pub mod single;
pub mod verify;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use uqd_core::boolean::BiasHypothesis;
use uqd_core::{Error, Result};

use crate::output::{emit, Format};

pub type CmdResult = std::result::Result<ExitCode, Box<dyn std::error::Error>>;

/// A pair of exact-weight hypotheses on the same register.
#[derive(Debug, clap::Args)]
pub struct PairArgs {
    /// Address qubits n; the memory has N = 2^n cells
    #[arg(long = "n-qubits")]
    pub n_qubits: u32,
    /// Weight (number of ones) under hypothesis 0
    #[arg(long)]
    pub m0: usize,
    /// Weight under hypothesis 1
    #[arg(long)]
    pub m1: usize,
}

impl PairArgs {
    pub fn hypotheses(&self) -> Result<(BiasHypothesis, BiasHypothesis)> {
        let n_addr = address_count(self.n_qubits)?;
        Ok((
            BiasHypothesis::new(n_addr, self.m0)?,
            BiasHypothesis::new(n_addr, self.m1)?,
        ))
    }
}

pub fn address_count(n_qubits: u32) -> Result<usize> {
    if !(1..=20).contains(&n_qubits) {
        return Err(Error::ParameterOutOfRange {
            name: "n-qubits".into(),
            value: f64::from(n_qubits),
        });
    }
    Ok(1usize << n_qubits)
}

/// Output destination and format.
#[derive(Debug, clap::Args)]
pub struct OutArgs {
    /// Write the result table to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Table format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl OutArgs {
    pub fn emit(&self, content: &str) -> io::Result<()> {
        emit(self.out.as_deref(), content)
    }
}

pub fn pass_fail(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
