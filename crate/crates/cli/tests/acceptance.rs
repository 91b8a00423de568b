//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (run with `--nocapture` to see them).
//!
//! Covers the full pipeline at desk scale: the query-unitary reduction,
//! the closed-form ensemble states and their spectra, single-copy Helstrom
//! statistics, multi-query count laws and error exponents, query-count
//! scaling, t-copy non-factorization, and byte-level reproducibility of the
//! CLI.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uqd_core::boolean::{BiasHypothesis, TruthTable};
use uqd_core::discrimination::{
    chernoff_bound, chernoff_information, exact_bayes_error, multi_query_counts, queries_needed,
    run_multi_query_experiment, run_single_copy_experiment,
};
use uqd_core::ensemble::{
    densify, ensemble_brute_force, ensemble_closed_form, t_copy_ensemble_brute, tensor_power,
    trace_distance_closed, trace_distance_dense, DensityOperator,
};
use uqd_core::statevector::{address_state, probe_and_query};
use uqd_core::stats::{binomial_pmf, total_variation};
use uqd_core::Caps;

fn caps() -> Caps {
    Caps::default()
}

fn hyp(n_addr: usize, m: usize) -> BiasHypothesis {
    BiasHypothesis::new(n_addr, m).unwrap()
}

fn powi(base: f64, exp: u32) -> f64 {
    // plain left-to-right product: the independent reference path
    (0..exp).fold(1.0, |acc, _| acc * base)
}

#[test]
fn criterion_01_query_reduction_all_small_tables() {
    let start = Instant::now();
    let mut max_residual: f64 = 0.0;
    for n_addr in [2usize, 4, 8] {
        for word in 0..(1u128 << n_addr) {
            let f = TruthTable::from_word(n_addr, word).unwrap();
            let (extracted, residual) = probe_and_query(&f, &caps()).unwrap();
            // residual is 1 - fidelity with psi_f (x) |-> (x) |M_f>
            assert!(
                residual <= 1e-12,
                "N={n_addr} word={word}: fidelity {}",
                1.0 - residual
            );
            let fid = extracted.fidelity(&address_state(&f)).unwrap();
            assert!((fid - 1.0).abs() <= 1e-12, "N={n_addr} word={word}");
            max_residual = max_residual.max(residual);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "criterion 1 (query reduction, all f at n <= 3): PASS: max residual {max_residual:.3e}, {elapsed:.2?}"
    );
}

#[test]
fn criterion_02_closed_form_ensemble_states() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n_addr in [2usize, 4, 8, 16] {
        for m in 0..=n_addr {
            let brute = ensemble_brute_force(n_addr, m, &caps()).unwrap();
            let closed = densify(&ensemble_closed_form(&hyp(n_addr, m)), &caps()).unwrap();
            let dist = brute.frobenius_distance(&closed).unwrap();
            assert!(dist <= 1e-12, "N={n_addr} m={m}: {dist}");
            worst = worst.max(dist);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 2 (closed form vs brute force): PASS: max Frobenius {worst:.3e}, {elapsed:.2?}"
    );
}

#[test]
fn criterion_03_spectrum_and_commutation() {
    let mut worst_eig: f64 = 0.0;
    let mut worst_comm: f64 = 0.0;
    for n_addr in [2usize, 4, 8, 16] {
        let states: Vec<DensityOperator> = (0..=n_addr)
            .map(|m| ensemble_brute_force(n_addr, m, &caps()).unwrap())
            .collect();
        for (m, rho) in states.iter().enumerate() {
            let closed = ensemble_closed_form(&hyp(n_addr, m));
            let mut expected = vec![closed.lambda_perp(); n_addr - 1];
            expected.push(closed.lambda_plus());
            expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in rho.eigenvalues().iter().zip(&expected) {
                let dev = (got - want).abs();
                assert!(dev <= 1e-10, "N={n_addr} m={m}");
                worst_eig = worst_eig.max(dev);
            }
        }
        for r0 in &states {
            for r1 in &states {
                let ab = r0.matrix().mul(r1.matrix()).unwrap();
                let ba = r1.matrix().mul(r0.matrix()).unwrap();
                let dev = ab.max_abs_diff(&ba).unwrap();
                assert!(dev <= 1e-12, "N={n_addr}");
                worst_comm = worst_comm.max(dev);
            }
        }
    }
    println!(
        "criterion 3 (two-eigenspace spectrum, commutation): PASS: eig dev {worst_eig:.3e}, commutator {worst_comm:.3e}"
    );
}

#[test]
fn criterion_04_trace_distance_and_edge_pairs() {
    for n_addr in [4usize, 8, 16] {
        for m0 in 0..=n_addr {
            for m1 in 0..=n_addr {
                let dense = trace_distance_dense(
                    &ensemble_brute_force(n_addr, m0, &caps()).unwrap(),
                    &ensemble_brute_force(n_addr, m1, &caps()).unwrap(),
                )
                .unwrap();
                let closed = trace_distance_closed(&hyp(n_addr, m0), &hyp(n_addr, m1)).unwrap();
                assert!(
                    (dense - closed).abs() <= 1e-10,
                    "N={n_addr} m0={m0} m1={m1}"
                );
            }
        }

        // Deutsch-Jozsa pair: Delta = 1 and every trial decides correctly
        let dj = run_single_copy_experiment(&hyp(n_addr, 0), &hyp(n_addr, n_addr / 2), 10_000, 0)
            .unwrap();
        assert_eq!(dj.theoretical_success, 1.0);
        assert_eq!(dj.empirical_success, 1.0, "N={n_addr}");

        // complementary pair: Delta = 0, chance level within 3 sigma
        let comp =
            run_single_copy_experiment(&hyp(n_addr, 1), &hyp(n_addr, n_addr - 1), 100_000, 0)
                .unwrap();
        assert_eq!(comp.theoretical_success, 0.5);
        assert!(comp.within_confidence(), "N={n_addr}: {comp:?}");
    }
    println!("criterion 4 (trace distance, DJ and complementary pairs): PASS");
}

#[test]
fn criterion_05_helstrom_statistics_random_pairs() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut checked = 0;
    for n_addr in [4usize, 8, 16] {
        for _ in 0..10 {
            let m0 = rng.gen_range(0..=n_addr);
            let m1 = rng.gen_range(0..=n_addr);
            let report =
                run_single_copy_experiment(&hyp(n_addr, m0), &hyp(n_addr, m1), 100_000, 505)
                    .unwrap();
            assert!(
                report.within_confidence(),
                "N={n_addr} m0={m0} m1={m1}: {report:?}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 5 (Helstrom success, {checked} random pairs x 1e5 trials): PASS: {elapsed:.2?}"
    );
}

#[test]
fn criterion_06_count_statistic_is_binomial() {
    let t = 10u32;
    let trials = 100_000u64;
    let hist = multi_query_counts(&hyp(4, 1), t, trials, 6);
    let empirical: Vec<f64> = hist.iter().map(|&c| c as f64 / trials as f64).collect();
    let tv = total_variation(&empirical, &binomial_pmf(t, 0.25));
    assert!(tv <= 0.01, "TV distance {tv}");
    println!("criterion 6 (count ~ Binomial(10, 1/4)): PASS: TV {tv:.5}");
}

#[test]
fn criterion_07_half_bias_error_formula() {
    let h0 = hyp(8, 4); // p0 = 1/2
    for m1 in 0..=8usize {
        let h1 = hyp(8, m1);
        for t in 1..=30u32 {
            let exact = exact_bayes_error(&h0, &h1, t).unwrap();
            let formula = 0.5 * powi(1.0 - h1.mu_sq(), t);
            assert!(
                (exact - formula).abs() <= 1e-12,
                "m1={m1} t={t}: {exact} vs {formula}"
            );
        }
    }
    // Monte Carlo at t = 5 for the inequivalent weights
    for m1 in 0..=4usize {
        let report = run_multi_query_experiment(&h0, &hyp(8, m1), 5, 100_000, 7).unwrap();
        assert!(report.within_confidence(), "m1={m1}: {report:?}");
    }
    println!("criterion 7 (p0 = 1/2 error law, exact and Monte Carlo): PASS");
}

#[test]
fn criterion_08_chernoff_information_and_domination() {
    for n_addr in [4usize, 8] {
        for m0 in 0..=n_addr {
            for m1 in 0..=n_addr {
                let h0 = hyp(n_addr, m0);
                let h1 = hyp(n_addr, m1);
                let xi = chernoff_information(h0.mu_sq(), h1.mu_sq()).unwrap().xi;
                for t in 1..=50u32 {
                    let exact = exact_bayes_error(&h0, &h1, t).unwrap();
                    let bound = chernoff_bound(t, xi);
                    assert!(
                        exact <= bound + 1e-15,
                        "N={n_addr} m0={m0} m1={m1} t={t}: {exact} > {bound}"
                    );
                }
            }
        }
    }

    let r = chernoff_information(0.0, 0.75).unwrap();
    assert!((r.xi - libm::log(4.0)).abs() <= 1e-9, "xi {}", r.xi);
    let r = chernoff_information(0.25, 0.75).unwrap();
    let expect = -libm::log(libm::sqrt(3.0) / 2.0);
    assert!((r.xi - expect).abs() <= 1e-9, "xi {}", r.xi);
    assert!((r.s_star - 0.5).abs() <= 1e-6, "s* {}", r.s_star);
    println!("criterion 8 (Chernoff bound domination and exponents): PASS");
}

#[test]
fn criterion_09_query_count_scaling() {
    assert_eq!(queries_needed(0.1, 0.05).unwrap(), 57);
    for eps in [0.02f64, 0.01] {
        let ratio = queries_needed(eps / 2.0, 0.05).unwrap() as f64
            / queries_needed(eps, 0.05).unwrap() as f64;
        assert!(
            (3.8..=4.2).contains(&ratio),
            "eps={eps}: halving the gap scaled queries by {ratio}"
        );
    }
    println!("criterion 9 (t = 57 at eps = 0.1, quadratic scaling): PASS");
}

#[test]
fn criterion_10_tcopy_nonfactorization() {
    let mixed = t_copy_ensemble_brute(4, 1, 2, &caps()).unwrap();
    let mixed_factored =
        tensor_power(&ensemble_brute_force(4, 1, &caps()).unwrap(), 2, &caps()).unwrap();
    let gap = mixed.frobenius_distance(&mixed_factored).unwrap();
    assert!(gap > 0.01, "gap {gap}");

    let pure = t_copy_ensemble_brute(4, 0, 2, &caps()).unwrap();
    let pure_factored =
        tensor_power(&ensemble_brute_force(4, 0, &caps()).unwrap(), 2, &caps()).unwrap();
    let pure_gap = pure.frobenius_distance(&pure_factored).unwrap();
    assert!(pure_gap <= 1e-12, "pure gap {pure_gap}");
    println!(
        "criterion 10 (t-copy non-factorization): PASS: mixed gap {gap:.4}, pure gap {pure_gap:.3e}"
    );
}

// ---------------------------------------------------------------------------
// criterion 11: byte-identical outputs across reruns and thread counts
// ---------------------------------------------------------------------------

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_uqd"))
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run_to_file(args: &[&str], out: &PathBuf, threads: Option<&str>) -> Vec<u8> {
    let mut cmd = bin();
    cmd.args(args).arg("--out").arg(out);
    match threads {
        Some(n) => cmd.env("RAYON_NUM_THREADS", n),
        None => cmd.env_remove("RAYON_NUM_THREADS"),
    };
    let status = cmd
        .stdout(std::process::Stdio::null())
        .stderr(std::process::Stdio::null())
        .status()
        .expect("spawn uqd");
    assert!(status.code().is_some(), "signal kill?");
    std::fs::read(out).expect("output file")
}

#[test]
fn criterion_11_deterministic_outputs() {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        (
            "single",
            vec!["single", "--n-qubits", "3", "--m0", "1", "--m1", "3", "--trials", "20000", "--seed", "42"],
        ),
        (
            "multi",
            vec!["multi", "--n-qubits", "3", "--m0", "1", "--m1", "3", "--t", "6", "--trials", "20000", "--seed", "42"],
        ),
        ("verify", vec!["verify", "--max-n", "3"]),
        ("scan", vec!["scan", "--epsilon", "0.02", "--delta", "0.05"]),
        ("chernoff", vec!["chernoff", "--n-qubits", "3"]),
        ("ensemble", vec!["ensemble", "--n-qubits", "3", "--m0", "2"]),
        (
            "collective",
            vec!["collective", "--n-qubits", "2", "--m0", "0", "--m1", "1", "--t", "2"],
        ),
    ];
    for (name, args) in &cases {
        let out_a = tmp(&format!("det_{name}_a.csv"));
        let out_b = tmp(&format!("det_{name}_b.csv"));
        let first = run_to_file(args, &out_a, None);
        let second = run_to_file(args, &out_b, None);
        assert_eq!(first, second, "{name}: reruns differ");
        assert!(!first.is_empty(), "{name}: empty output");

        // single-threaded run must produce the identical file
        let out_c = tmp(&format!("det_{name}_c.csv"));
        let serial = run_to_file(args, &out_c, Some("1"));
        assert_eq!(first, serial, "{name}: parallel vs serial differ");
    }
    println!("criterion 11 (byte-identical reruns, serial == parallel): PASS");
}
