//! `uqd chernoff`: Chernoff information over all weight pairs at one size.

use uqd_core::boolean::BiasHypothesis;
use uqd_core::discrimination::chernoff_information;

use super::{address_count, CmdResult, OutArgs};
use crate::output::Table;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Address qubits n; the grid covers all weight pairs on N = 2^n cells
    #[arg(long = "n-qubits")]
    pub n_qubits: u32,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn run(args: &Args) -> CmdResult {
    let n_addr = address_count(args.n_qubits)?;
    let mut table = Table::new(vec![
        "m0", "m1", "mu_sq0", "mu_sq1", "s_star", "xi_nats", "boundary",
    ]);
    for m0 in 0..=n_addr {
        for m1 in 0..=n_addr {
            let q0 = BiasHypothesis::new(n_addr, m0)?.mu_sq();
            let q1 = BiasHypothesis::new(n_addr, m1)?.mu_sq();
            let r = chernoff_information(q0, q1)?;
            table.push(vec![
                m0.into(),
                m1.into(),
                q0.into(),
                q1.into(),
                r.s_star.into(),
                r.xi.into(),
                r.boundary_case.into(),
            ]);
        }
    }
    args.out.emit(&table.render(args.out.format))?;
    eprintln!(
        "chernoff table for N={n_addr}: {} weight pairs",
        (n_addr + 1) * (n_addr + 1)
    );
    Ok(std::process::ExitCode::SUCCESS)
}
