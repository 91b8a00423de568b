//! `uqd multi`: multi-query discrimination with the count LRT.

use crate::output::{Table, Value};
use crate::parallel;

use super::{pass_fail, CmdResult, OutArgs, PairArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Queries per trial against the same sampled memory
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub t: u32,
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
    let report = parallel::multi_query(&h0, &h1, args.t, args.trials, args.seed)?;

    let mut table = Table::new(vec![
        "n_addr",
        "m0",
        "m1",
        "t",
        "k_star",
        "degenerate",
        "exact_error",
        "chernoff_bound",
        "empirical_error",
        "ci_half_width",
        "trials",
        "seed",
    ]);
    let k_star: Value = match report.rule.k_star() {
        Some(k) => i64::from(k).into(),
        None => (-1i64).into(),
    };
    table.push(vec![
        h0.address_count().into(),
        h0.weight().into(),
        h1.weight().into(),
        report.t.into(),
        k_star,
        report.rule.is_degenerate().into(),
        report.exact_error.into(),
        report.chernoff_bound.into(),
        report.empirical_error.into(),
        report.confidence_half_width.into(),
        report.trials.into(),
        report.seed.into(),
    ]);
    args.out.emit(&table.render(args.out.format))?;

    if report.rule.is_degenerate() {
        eprintln!(
            "warning: mu^2 is identical under both hypotheses; the count carries no information"
        );
    }
    let ok = report.within_confidence() && report.bound_holds();
    eprintln!(
        "multi-query N={} m0={} m1={} t={}: exact={:.6e} bound={:.6e} empirical={:.6e} (+/-{:.6e}, {} trials, seed {}) -> {}",
        h0.address_count(),
        h0.weight(),
        h1.weight(),
        report.t,
        report.exact_error,
        report.chernoff_bound,
        report.empirical_error,
        report.confidence_half_width,
        report.trials,
        report.seed,
        if ok { "PASS" } else { "FAIL" },
    );
    Ok(pass_fail(ok))
}
