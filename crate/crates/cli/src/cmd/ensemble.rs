//! `uqd ensemble`: dense dump of one induced ensemble state.

use uqd_core::boolean::BiasHypothesis;
use uqd_core::ensemble::{densify, ensemble_closed_form};

use super::{address_count, CmdResult, OutArgs};
use crate::env_caps::caps_from_env;
use crate::output::render_matrix;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Address qubits n
    #[arg(long = "n-qubits")]
    pub n_qubits: u32,
    /// Weight of the dumped class
    #[arg(long)]
    pub m0: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn run(args: &Args) -> CmdResult {
    let n_addr = address_count(args.n_qubits)?;
    let h = BiasHypothesis::new(n_addr, args.m0)?;
    let rho = densify(&ensemble_closed_form(&h), &caps_from_env())?;
    args.out.emit(&render_matrix(rho.matrix(), args.out.format))?;
    eprintln!(
        "ensemble state N={} m={}: mu^2={} lambda_perp={}",
        n_addr,
        args.m0,
        h.mu_sq(),
        ensemble_closed_form(&h).lambda_perp()
    );
    Ok(std::process::ExitCode::SUCCESS)
}
