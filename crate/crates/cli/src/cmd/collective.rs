//! `uqd collective`: t-copy trace distances vs the separable strategy.
//!
//! The t-copy ensemble states need not factor, so a collective Helstrom
//! measurement could in principle beat measuring copies one at a time; this
//! tabulates both sides. Whether the gap is ever realizable is an open
//! question; these are data points, not a proof.

use uqd_core::discrimination::{
    chernoff_bound, chernoff_information, exact_bayes_error,
};
use uqd_core::ensemble::collective_trace_distance;

use super::{CmdResult, OutArgs, PairArgs};
use crate::env_caps::caps_from_env;
use crate::output::Table;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Largest copy count; the table covers t = 1..=t
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub t: u32,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn run(args: &Args) -> CmdResult {
    let (h0, h1) = args.pair.hypotheses()?;
    let caps = caps_from_env();
    let n_addr = h0.address_count();
    let xi = chernoff_information(h0.mu_sq(), h1.mu_sq())?.xi;

    let mut table = Table::new(vec![
        "t",
        "dim",
        "collective_trace_distance",
        "collective_error",
        "separable_error",
        "separable_bound",
    ]);
    for t in 1..=args.t {
        let distance =
            collective_trace_distance(n_addr, h0.weight(), h1.weight(), t, &caps)?;
        let separable = exact_bayes_error(&h0, &h1, t)?;
        table.push(vec![
            t.into(),
            n_addr.pow(t).into(),
            distance.into(),
            ((1.0 - distance) / 2.0).into(),
            separable.into(),
            chernoff_bound(t, xi).into(),
        ]);
        eprintln!(
            "t={t}: collective D={distance:.6}, collective err={:.6e}, separable err={:.6e}",
            (1.0 - distance) / 2.0,
            separable
        );
    }
    args.out.emit(&table.render(args.out.format))?;
    Ok(std::process::ExitCode::SUCCESS)
}
