//! Parallel Monte Carlo runners.
//!
//! Trials are pure functions of `(seed, trial_index)` and aggregation is a
//! commutative count, so these produce bit-identical reports to the serial
//! runners in `uqd_core::discrimination` under any thread count.

use rayon::prelude::*;

use uqd_core::boolean::BiasHypothesis;
use uqd_core::discrimination::{
    lrt_threshold, multi_query_trial_wrong, single_copy_trial_correct, summarize_multi_query,
    summarize_single_copy, DiscriminationReport, MultiQueryReport,
};
use uqd_core::Result;

pub fn single_copy(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    trials: u64,
    seed: u64,
) -> Result<DiscriminationReport> {
    // validate the pair before burning CPU on trials
    lrt_threshold(h0, h1, 1)?;
    let successes = (0..trials)
        .into_par_iter()
        .filter(|&trial| single_copy_trial_correct(h0, h1, seed, trial))
        .count() as u64;
    summarize_single_copy(h0, h1, successes, trials, seed)
}

pub fn multi_query(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    t: u32,
    trials: u64,
    seed: u64,
) -> Result<MultiQueryReport> {
    let rule = lrt_threshold(h0, h1, t)?;
    let wrong = (0..trials)
        .into_par_iter()
        .filter(|&trial| multi_query_trial_wrong(h0, h1, &rule, t, seed, trial))
        .count() as u64;
    summarize_multi_query(h0, h1, t, wrong, trials, seed)
}
