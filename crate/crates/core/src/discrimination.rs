//! Discrimination protocols between two exact-weight hypotheses.
//!
//! Single-copy: one query, Hadamard, measure; the outcome is `plus` (all
//! zeros, projecting onto `|+>`) with probability exactly `mu^2` whatever the
//! concrete table, so deciding the larger-`mu^2` hypothesis on `plus`
//! achieves the Helstrom success probability `(1 + Delta)/2`.
//!
//! Multi-query with the memory held fixed: the same measurement applied to
//! `t` fresh queries gives a count `k ~ Binomial(t, mu^2)` (queries are
//! conditionally i.i.d. given the sampled table), so the Bayes-optimal
//! post-processing is a threshold likelihood-ratio test on `k`, with exact
//! error computable by binomial sums and an exponent given by the classical
//! Chernoff information between the two Bernoulli outcome laws.
//!
//! Everything is deterministic given a seed: trial `i` of an experiment uses
//! stream `i` of a ChaCha8 generator seeded with the master seed, so serial
//! and parallel execution produce identical counts.

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean::{sample_from_hypothesis, BiasHypothesis};
use crate::ensemble::helstrom_success;
use crate::error::{Error, Result};
use crate::statevector::{address_state, hadamard_transform, sample_outcome};
use crate::stats::binomial_pmf;

/// Outcome of the two-outcome address measurement `{|+><+|, Pi_perp}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureOutcome {
    /// Computational outcome `0^n` after the Hadamard, i.e. projection on `|+>`.
    Plus,
    /// Any other outcome.
    Perp,
}

/// A binary decision, with a flag for chance-level (`mu_0^2 = mu_1^2`) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    /// Chosen hypothesis: 0 or 1.
    pub index: usize,
    /// Set when the two hypotheses are information-theoretically identical
    /// in this model; the decision is then the fixed convention "0".
    pub degenerate: bool,
}

/// Count statistic from `t` queries: the number of `plus` outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountStatistic {
    pub t: u32,
    pub k: u32,
}

/// Per-trial generator: stream `trial` of a ChaCha8 seeded with `seed`.
///
/// Streams are independent, so trials can run in any order (or in parallel)
/// and still reproduce bit-identical results.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One full single-query measurement against a freshly sampled table:
/// sample `f` from the class, build the address state, Hadamard, measure.
///
/// The marginal probability of `Plus` is exactly `mu^2`.
pub fn single_query_trial<R: Rng + ?Sized>(
    true_h: &BiasHypothesis,
    rng: &mut R,
) -> MeasureOutcome {
    let f = sample_from_hypothesis(true_h, rng);
    let transformed = hadamard_transform(&address_state(&f));
    if sample_outcome(&transformed, rng) == 0 {
        MeasureOutcome::Plus
    } else {
        MeasureOutcome::Perp
    }
}

/// `t` measurements against a *single* sampled table (the persistent-memory
/// model: `f` is drawn once, the queries are conditionally i.i.d.).
pub fn count_plus_outcomes<R: Rng + ?Sized>(
    true_h: &BiasHypothesis,
    t: u32,
    rng: &mut R,
) -> CountStatistic {
    let f = sample_from_hypothesis(true_h, rng);
    let transformed = hadamard_transform(&address_state(&f));
    let mut k = 0;
    for _ in 0..t {
        if sample_outcome(&transformed, rng) == 0 {
            k += 1;
        }
    }
    CountStatistic { t, k }
}

/// Single-copy Helstrom decision: the larger-`mu^2` hypothesis on `Plus`,
/// the other on `Perp`. Ties (identical `mu^2`) decide 0 with the degeneracy
/// flag set.
pub fn decide_single_copy(
    outcome: MeasureOutcome,
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
) -> Decision {
    let (q0, q1) = (h0.mu_sq(), h1.mu_sq());
    if q0 == q1 {
        return Decision {
            index: 0,
            degenerate: true,
        };
    }
    let high = usize::from(q1 > q0);
    let index = match outcome {
        MeasureOutcome::Plus => high,
        MeasureOutcome::Perp => 1 - high,
    };
    Decision {
        index,
        degenerate: false,
    }
}

/// Report for a Monte Carlo discrimination experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminationReport {
    pub theoretical_success: f64,
    pub empirical_success: f64,
    pub trials: u64,
    /// Three-sigma binomial half-width `3 sqrt(P(1-P)/trials)` around the
    /// theoretical value.
    pub confidence_half_width: f64,
    pub seed: u64,
}

impl DiscriminationReport {
    /// Whether the empirical rate sits inside the three-sigma band.
    pub fn within_confidence(&self) -> bool {
        (self.empirical_success - self.theoretical_success).abs() <= self.confidence_half_width
    }
}

/// One single-copy trial: uniform true hypothesis, one query, Helstrom
/// decision. Returns whether the decision was correct. Pure in
/// `(seed, trial)`, so callers may fan trials out across threads.
pub fn single_copy_trial_correct(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    seed: u64,
    trial: u64,
) -> bool {
    let mut rng = trial_rng(seed, trial);
    let truth = rng.gen_range(0..2usize);
    let true_h = if truth == 0 { h0 } else { h1 };
    let outcome = single_query_trial(true_h, &mut rng);
    decide_single_copy(outcome, h0, h1).index == truth
}

/// Builds the report from a success count (shared by the serial runner here
/// and any parallel runner).
pub fn summarize_single_copy(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    successes: u64,
    trials: u64,
    seed: u64,
) -> Result<DiscriminationReport> {
    let p = helstrom_success(h0, h1)?;
    Ok(DiscriminationReport {
        theoretical_success: p,
        empirical_success: successes as f64 / trials as f64,
        trials,
        confidence_half_width: 3.0 * libm::sqrt(p * (1.0 - p) / trials as f64),
        seed,
    })
}

/// Full single-copy Monte Carlo experiment (serial).
pub fn run_single_copy_experiment(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    trials: u64,
    seed: u64,
) -> Result<DiscriminationReport> {
    // fail early on mismatched hypotheses
    helstrom_success(h0, h1)?;
    let successes = (0..trials)
        .filter(|&trial| single_copy_trial_correct(h0, h1, seed, trial))
        .count() as u64;
    summarize_single_copy(h0, h1, successes, trials, seed)
}

/// Histogram of the `plus` count over `trials` runs of the persistent-memory
/// protocol; entry `k` counts trials with exactly `k` plus outcomes.
///
/// The total-variation distance to `Binomial(t, mu^2)` vanishes with trials.
pub fn multi_query_counts(h: &BiasHypothesis, t: u32, trials: u64, seed: u64) -> Vec<u64> {
    let mut hist = alloc::vec![0u64; t as usize + 1];
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let stat = count_plus_outcomes(h, t, &mut rng);
        hist[stat.k as usize] += 1;
    }
    hist
}

/// The equal-prior likelihood-ratio test on the plus count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrtRule {
    /// `mu_0^2 = mu_1^2`: the count carries no information; decide 0 always.
    Degenerate,
    /// Decide hypothesis `high` iff `k >= k_star`, the other otherwise.
    Threshold { k_star: u32, high: usize },
}

impl LrtRule {
    pub fn decide(&self, k: u32) -> Decision {
        match *self {
            LrtRule::Degenerate => Decision {
                index: 0,
                degenerate: true,
            },
            LrtRule::Threshold { k_star, high } => Decision {
                index: if k >= k_star { high } else { 1 - high },
                degenerate: false,
            },
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, LrtRule::Degenerate)
    }

    pub fn k_star(&self) -> Option<u32> {
        match *self {
            LrtRule::Degenerate => None,
            LrtRule::Threshold { k_star, .. } => Some(k_star),
        }
    }
}

fn validate_bernoulli(name: &str, q: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::ParameterOutOfRange {
            name: String::from(name),
            value: q,
        });
    }
    Ok(())
}

/// Likelihood-ratio threshold for `Bernoulli(q0)` vs `Bernoulli(q1)` counts
/// over `t` draws, equal priors.
///
/// The ratio is monotone in `k`, so the test is "decide the larger-`q`
/// hypothesis iff `k >= k_star`" with `k_star` the smallest count whose
/// ratio reaches 1. Comparison runs in the log domain with a `1e-12` margin;
/// exact ties go to the larger-`q` side.
pub fn lrt_threshold_bernoulli(q0: f64, q1: f64, t: u32) -> Result<LrtRule> {
    validate_bernoulli("q0", q0)?;
    validate_bernoulli("q1", q1)?;
    if q0 == q1 {
        return Ok(LrtRule::Degenerate);
    }
    let high = usize::from(q1 > q0);
    let (q_lo, q_hi) = if high == 1 { (q0, q1) } else { (q1, q0) };

    // Degenerate endpoints: a single plus outcome is impossible under
    // q_lo = 0, and a single perp outcome impossible under q_hi = 1.
    let k_star = if q_lo == 0.0 {
        1
    } else if q_hi == 1.0 {
        t
    } else {
        let slope_plus = libm::log(q_hi) - libm::log(q_lo); // > 0
        let slope_perp = libm::log(1.0 - q_hi) - libm::log(1.0 - q_lo); // < 0
        let mut k_star = t + 1;
        for k in 0..=t {
            let log_ratio = f64::from(k) * slope_plus + f64::from(t - k) * slope_perp;
            if log_ratio >= -1e-12 {
                k_star = k;
                break;
            }
        }
        k_star
    };
    Ok(LrtRule::Threshold { k_star, high })
}

/// [`lrt_threshold_bernoulli`] on the hypotheses' `mu^2` parameters.
pub fn lrt_threshold(h0: &BiasHypothesis, h1: &BiasHypothesis, t: u32) -> Result<LrtRule> {
    if h0.address_count() != h1.address_count() {
        return Err(Error::DimensionMismatch(
            h0.address_count(),
            h1.address_count(),
        ));
    }
    lrt_threshold_bernoulli(h0.mu_sq(), h1.mu_sq(), t)
}

/// Exact equal-prior Bayes error of the likelihood-ratio test after `t`
/// draws: `(1/2) [ P_{k~Bin(t,q0)}(decide 1) + P_{k~Bin(t,q1)}(decide 0) ]`,
/// summed from exact binomial pmfs.
pub fn exact_bayes_error_bernoulli(q0: f64, q1: f64, t: u32) -> Result<f64> {
    let rule = lrt_threshold_bernoulli(q0, q1, t)?;
    if rule.is_degenerate() {
        // always deciding 0 errs exactly when the truth is 1; summing the
        // whole rounded pmf here could drift an ulp past 1/2
        return Ok(0.5);
    }
    let pmf0 = binomial_pmf(t, q0);
    let pmf1 = binomial_pmf(t, q1);
    let mut error = 0.0;
    for k in 0..=t {
        match rule.decide(k).index {
            1 => error += 0.5 * pmf0[k as usize],
            _ => error += 0.5 * pmf1[k as usize],
        }
    }
    Ok(error)
}

/// [`exact_bayes_error_bernoulli`] on the hypotheses' `mu^2` parameters.
pub fn exact_bayes_error(h0: &BiasHypothesis, h1: &BiasHypothesis, t: u32) -> Result<f64> {
    if h0.address_count() != h1.address_count() {
        return Err(Error::DimensionMismatch(
            h0.address_count(),
            h1.address_count(),
        ));
    }
    exact_bayes_error_bernoulli(h0.mu_sq(), h1.mu_sq(), t)
}

/// Chernoff information of two Bernoulli laws, with the minimizing `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffResult {
    /// Minimizer of the Chernoff objective over `s in [0, 1]`.
    pub s_star: f64,
    /// `xi = -log min_s [q0^s q1^(1-s) + (1-q0)^s (1-q1)^(1-s)]`, in nats.
    pub xi: f64,
    /// Set when a parameter sits at 0 or 1 and the value is the continuity
    /// limit rather than an interior minimum.
    pub boundary_case: bool,
}

/// Classical Chernoff information for `Bernoulli(mu_sq0)` vs
/// `Bernoulli(mu_sq1)`.
///
/// Interior pairs are minimized by golden-section search to an interval of
/// `1e-10` in `s`; parameters at 0 or 1 use the closed-form continuity
/// limits (e.g. `q0 = 0, q1 < 1` gives `xi = -log(1 - q1)`), and the
/// perfectly distinguishable pair `{0, 1}` gives `xi = +inf`.
pub fn chernoff_information(mu_sq0: f64, mu_sq1: f64) -> Result<ChernoffResult> {
    validate_bernoulli("mu_sq0", mu_sq0)?;
    validate_bernoulli("mu_sq1", mu_sq1)?;
    let (a, b) = (mu_sq0, mu_sq1);

    if a == b {
        return Ok(ChernoffResult {
            s_star: 0.5,
            xi: 0.0,
            boundary_case: false,
        });
    }
    let boundary = |s_star: f64, xi: f64| {
        Ok(ChernoffResult {
            s_star,
            xi,
            boundary_case: true,
        })
    };
    if (a == 0.0 && b == 1.0) || (a == 1.0 && b == 0.0) {
        return boundary(0.5, f64::INFINITY);
    }
    if a == 0.0 {
        return boundary(0.0, -libm::log(1.0 - b));
    }
    if a == 1.0 {
        return boundary(0.0, -libm::log(b));
    }
    if b == 0.0 {
        return boundary(1.0, -libm::log(1.0 - a));
    }
    if b == 1.0 {
        return boundary(1.0, -libm::log(a));
    }

    let objective = |s: f64| {
        libm::pow(a, s) * libm::pow(b, 1.0 - s) + libm::pow(1.0 - a, s) * libm::pow(1.0 - b, 1.0 - s)
    };

    // golden-section on [delta, 1 - delta]; the objective is convex
    const DELTA: f64 = 1e-9;
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut lo = DELTA;
    let mut hi = 1.0 - DELTA;
    let mut x1 = hi - (hi - lo) * INV_PHI;
    let mut x2 = lo + (hi - lo) * INV_PHI;
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    while hi - lo > 1e-10 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - (hi - lo) * INV_PHI;
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + (hi - lo) * INV_PHI;
            f2 = objective(x2);
        }
    }
    let s_star = 0.5 * (lo + hi);
    Ok(ChernoffResult {
        s_star,
        xi: -libm::log(objective(s_star)),
        boundary_case: false,
    })
}

/// The bound `P_err(t) <= (1/2) e^(-t xi)`.
pub fn chernoff_bound(t: u32, xi: f64) -> f64 {
    if t == 0 {
        return 0.5;
    }
    0.5 * libm::exp(-f64::from(t) * xi)
}

/// Queries sufficient to distinguish `p0 = 1/2` from `p1 = 1/2 + epsilon`
/// with error at most `delta`: the smallest `t` with
/// `(1/2)(1 - 4 eps^2)^t <= delta`, which scales as `Theta(1/eps^2)`.
pub fn queries_needed(epsilon: f64, delta: f64) -> Result<u64> {
    if !(epsilon > 0.0 && epsilon <= 0.5) {
        return Err(Error::ParameterOutOfRange {
            name: String::from("epsilon"),
            value: epsilon,
        });
    }
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::ParameterOutOfRange {
            name: String::from("delta"),
            value: delta,
        });
    }
    if epsilon == 0.5 {
        // mu_1^2 = 1: a single query is already perfect
        return Ok(1);
    }
    let mu1_sq = 4.0 * epsilon * epsilon;
    let t = libm::ceil(libm::log(1.0 / (2.0 * delta)) / -libm::log(1.0 - mu1_sq));
    Ok(t as u64)
}

/// Report for a multi-query Monte Carlo experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiQueryReport {
    pub t: u32,
    pub rule: LrtRule,
    pub exact_error: f64,
    pub chernoff_bound: f64,
    pub empirical_error: f64,
    pub trials: u64,
    /// Three-sigma binomial half-width around the exact error.
    pub confidence_half_width: f64,
    pub seed: u64,
}

impl MultiQueryReport {
    pub fn within_confidence(&self) -> bool {
        (self.empirical_error - self.exact_error).abs() <= self.confidence_half_width
    }

    /// The bound must dominate the exact error.
    pub fn bound_holds(&self) -> bool {
        self.exact_error <= self.chernoff_bound + 1e-15
    }
}

/// One multi-query trial: uniform true hypothesis, one sampled table, `t`
/// measurements, threshold decision. Returns whether the decision was wrong.
pub fn multi_query_trial_wrong(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    rule: &LrtRule,
    t: u32,
    seed: u64,
    trial: u64,
) -> bool {
    let mut rng = trial_rng(seed, trial);
    let truth = rng.gen_range(0..2usize);
    let true_h = if truth == 0 { h0 } else { h1 };
    let stat = count_plus_outcomes(true_h, t, &mut rng);
    rule.decide(stat.k).index != truth
}

/// Builds the report from a wrong-decision count.
pub fn summarize_multi_query(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    t: u32,
    wrong: u64,
    trials: u64,
    seed: u64,
) -> Result<MultiQueryReport> {
    let rule = lrt_threshold(h0, h1, t)?;
    let exact = exact_bayes_error(h0, h1, t)?;
    let chernoff = chernoff_information(h0.mu_sq(), h1.mu_sq())?;
    Ok(MultiQueryReport {
        t,
        rule,
        exact_error: exact,
        chernoff_bound: chernoff_bound(t, chernoff.xi),
        empirical_error: wrong as f64 / trials as f64,
        trials,
        confidence_half_width: 3.0 * libm::sqrt(exact * (1.0 - exact) / trials as f64),
        seed,
    })
}

/// Full multi-query Monte Carlo experiment (serial).
pub fn run_multi_query_experiment(
    h0: &BiasHypothesis,
    h1: &BiasHypothesis,
    t: u32,
    trials: u64,
    seed: u64,
) -> Result<MultiQueryReport> {
    let rule = lrt_threshold(h0, h1, t)?;
    let wrong = (0..trials)
        .filter(|&trial| multi_query_trial_wrong(h0, h1, &rule, t, seed, trial))
        .count() as u64;
    summarize_multi_query(h0, h1, t, wrong, trials, seed)
}
