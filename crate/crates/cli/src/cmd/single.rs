//! `uqd single`: single-copy Helstrom discrimination Monte Carlo.

use uqd_core::ensemble::trace_distance_closed;

use super::{pass_fail, CmdResult, OutArgs, PairArgs};
use crate::output::Table;
use crate::parallel;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Monte Carlo trials
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Master seed; trial i uses ChaCha8 stream i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn run(args: &Args) -> CmdResult {
    let (h0, h1) = args.pair.hypotheses()?;
    let delta = trace_distance_closed(&h0, &h1)?;
    let report = parallel::single_copy(&h0, &h1, args.trials, args.seed)?;

    let mut table = Table::new(vec![
        "n_addr",
        "m0",
        "m1",
        "delta",
        "theoretical_success",
        "empirical_success",
        "ci_half_width",
        "trials",
        "seed",
    ]);
    table.push(vec![
        h0.address_count().into(),
        h0.weight().into(),
        h1.weight().into(),
        delta.into(),
        report.theoretical_success.into(),
        report.empirical_success.into(),
        report.confidence_half_width.into(),
        report.trials.into(),
        report.seed.into(),
    ]);
    args.out.emit(&table.render(args.out.format))?;

    let ok = report.within_confidence();
    eprintln!(
        "single-copy N={} m0={} m1={}: delta={:.6} theory={:.6} empirical={:.6} (+/-{:.6}, {} trials, seed {}) -> {}",
        h0.address_count(),
        h0.weight(),
        h1.weight(),
        delta,
        report.theoretical_success,
        report.empirical_success,
        report.confidence_half_width,
        report.trials,
        report.seed,
        if ok { "PASS" } else { "FAIL" },
    );
    Ok(pass_fail(ok))
}
