//! Induced ensemble states for exact-weight bias classes.
//!
//! Averaging the address-state projector over the uniform prior on `F(m)`
//! gives `rho_p = mu^2 |+><+| + (1 - mu^2)/(N-1) * Pi_perp`: permutation
//! symmetry of the class leaves only the `|+>` line and its orthocomplement
//! as eigenspaces. This module carries that closed form, the brute-force
//! average that independently verifies it, the trace-distance/Helstrom
//! quantities for pairs of classes, and the t-copy states
//! `rho_p^(t) = E_f[(|psi_f><psi_f|)^(x t)]`, which in general do *not*
//! factor as `rho_p^(x t)`.

use num_complex::Complex64;

use crate::boolean::{enumerate_weight_class, BiasHypothesis};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{self, kron_vec, CMat};
use crate::statevector::{address_state, AddressState};

const HERMITIAN_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;

/// Structured form of an induced ensemble state: eigenvalue `mu^2` on `|+>`
/// and `(1 - mu^2)/(N - 1)` on the orthocomplement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoEigenspaceState {
    n_addr: usize,
    mu_sq: f64,
}

impl TwoEigenspaceState {
    pub fn new(n_addr: usize, mu_sq: f64) -> Result<Self> {
        if n_addr < 2 || !n_addr.is_power_of_two() {
            return Err(Error::AddressCountNotPowerOfTwo(n_addr));
        }
        if !(0.0..=1.0).contains(&mu_sq) {
            return Err(Error::ParameterOutOfRange {
                name: alloc::string::String::from("mu_sq"),
                value: mu_sq,
            });
        }
        Ok(TwoEigenspaceState { n_addr, mu_sq })
    }

    pub fn address_count(&self) -> usize {
        self.n_addr
    }

    pub fn mu_sq(&self) -> f64 {
        self.mu_sq
    }

    /// Eigenvalue on `|+>` (multiplicity 1).
    pub fn lambda_plus(&self) -> f64 {
        self.mu_sq
    }

    /// Eigenvalue on the orthocomplement (multiplicity `N - 1`).
    pub fn lambda_perp(&self) -> f64 {
        (1.0 - self.mu_sq) / (self.n_addr as f64 - 1.0)
    }
}

/// The closed-form induced ensemble state for a weight class.
pub fn ensemble_closed_form(h: &BiasHypothesis) -> TwoEigenspaceState {
    TwoEigenspaceState {
        n_addr: h.address_count(),
        mu_sq: h.mu_sq(),
    }
}

/// Dense density operator: Hermitian, trace 1, positive semidefinite.
///
/// Hermiticity and trace are validated at construction; positivity is an
/// eigendecomposition away and is checked by [`DensityOperator::min_eigenvalue`]
/// where tests need it.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    mat: CMat,
}

impl DensityOperator {
    pub fn from_matrix(mat: CMat) -> Result<Self> {
        let dev = mat.hermitian_deviation();
        if dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian { max_deviation: dev });
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::NotNormalized {
                deviation: (tr.re - 1.0).abs().max(tr.im.abs()),
            });
        }
        Ok(DensityOperator { mat })
    }

    /// Projector onto a pure state.
    pub fn pure(state: &AddressState) -> Self {
        let mut mat = CMat::zeros(state.dim());
        mat.accumulate_outer(state.amplitudes(), 1.0);
        DensityOperator { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.mat.get(i, j)
    }

    pub fn eigenvalues(&self) -> alloc::vec::Vec<f64> {
        linalg::eigvalsh(&self.mat)
    }

    /// Smallest eigenvalue; `>= -1e-10` for a valid state.
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// Frobenius distance to another operator.
    pub fn frobenius_distance(&self, other: &DensityOperator) -> Result<f64> {
        Ok(self.mat.sub(&other.mat)?.frobenius_norm())
    }
}

/// Expands the two-eigenspace form to a dense matrix
/// `mu^2 |+><+| + lambda_perp (I - |+><+|)`.
pub fn densify(s: &TwoEigenspaceState, caps: &Caps) -> Result<DensityOperator> {
    let n = s.n_addr;
    if n > caps.max_dense_dim {
        return Err(Error::DenseDimTooLarge {
            dim: n,
            cap: caps.max_dense_dim,
        });
    }
    let lambda_perp = s.lambda_perp();
    let plus_weight = (s.mu_sq - lambda_perp) / n as f64;
    let mut mat = CMat::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let diag = if i == j { lambda_perp } else { 0.0 };
            mat.set(i, j, Complex64::new(plus_weight + diag, 0.0));
        }
    }
    DensityOperator::from_matrix(mat)
}

/// Brute-force ensemble state: the exact average of `|psi_f><psi_f|` over
/// the enumerated class. This is the oracle the closed form is checked
/// against.
pub fn ensemble_brute_force(n_addr: usize, m: usize, caps: &Caps) -> Result<DensityOperator> {
    if n_addr > caps.max_dense_dim {
        return Err(Error::DenseDimTooLarge {
            dim: n_addr,
            cap: caps.max_dense_dim,
        });
    }
    let mut mat = CMat::zeros(n_addr);
    let mut count: u64 = 0;
    for f in enumerate_weight_class(n_addr, m, caps)? {
        mat.accumulate_outer(address_state(&f).amplitudes(), 1.0);
        count += 1;
    }
    mat.scale(1.0 / count as f64);
    DensityOperator::from_matrix(mat)
}

/// Trace distance between two ensemble states in closed form:
/// `Delta = |mu_0^2 - mu_1^2|`.
pub fn trace_distance_closed(h0: &BiasHypothesis, h1: &BiasHypothesis) -> Result<f64> {
    if h0.address_count() != h1.address_count() {
        return Err(Error::DimensionMismatch(
            h0.address_count(),
            h1.address_count(),
        ));
    }
    Ok((h0.mu_sq() - h1.mu_sq()).abs())
}

/// Trace distance `(1/2) ||rho_0 - rho_1||_1` via the spectrum of the
/// Hermitian difference.
pub fn trace_distance_dense(rho0: &DensityOperator, rho1: &DensityOperator) -> Result<f64> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(rho0.dim(), rho1.dim()));
    }
    let diff = rho0.mat.sub(&rho1.mat)?;
    let eigenvalues = linalg::eigvalsh(&diff);
    Ok(0.5 * eigenvalues.iter().map(|l| l.abs()).sum::<f64>())
}

/// Helstrom success probability `(1 + Delta) / 2` for equal priors.
pub fn helstrom_success(h0: &BiasHypothesis, h1: &BiasHypothesis) -> Result<f64> {
    Ok((1.0 + trace_distance_closed(h0, h1)?) / 2.0)
}

fn tcopy_dim(n_addr: usize, t: u32, caps: &Caps) -> Result<usize> {
    match n_addr.checked_pow(t) {
        Some(dim) if dim <= caps.max_tcopy_dim => Ok(dim),
        Some(dim) => Err(Error::DenseDimTooLarge {
            dim,
            cap: caps.max_tcopy_dim,
        }),
        None => Err(Error::DenseDimTooLarge {
            dim: usize::MAX,
            cap: caps.max_tcopy_dim,
        }),
    }
}

/// Brute-force t-copy ensemble state
/// `rho_p^(t) = E_f[(|psi_f><psi_f|)^(x t)]` on dimension `N^t`.
pub fn t_copy_ensemble_brute(
    n_addr: usize,
    m: usize,
    t: u32,
    caps: &Caps,
) -> Result<DensityOperator> {
    if t == 0 {
        return Err(Error::ParameterOutOfRange {
            name: alloc::string::String::from("t"),
            value: 0.0,
        });
    }
    let dim = tcopy_dim(n_addr, t, caps)?;
    let mut mat = CMat::zeros(dim);
    let mut count: u64 = 0;
    for f in enumerate_weight_class(n_addr, m, caps)? {
        let single = address_state(&f);
        let mut vec = single.amplitudes().to_vec();
        for _ in 1..t {
            vec = kron_vec(&vec, single.amplitudes());
        }
        mat.accumulate_outer(&vec, 1.0);
        count += 1;
    }
    mat.scale(1.0 / count as f64);
    DensityOperator::from_matrix(mat)
}

/// `rho^(x t)`, the t-fold tensor power of a single-copy state: the
/// factorized reference the t-copy state is compared against.
pub fn tensor_power(rho: &DensityOperator, t: u32, caps: &Caps) -> Result<DensityOperator> {
    if t == 0 {
        return Err(Error::ParameterOutOfRange {
            name: alloc::string::String::from("t"),
            value: 0.0,
        });
    }
    tcopy_dim(rho.dim(), t, caps)?;
    let mut mat = rho.mat.clone();
    for _ in 1..t {
        mat = mat.kron(&rho.mat);
    }
    DensityOperator::from_matrix(mat)
}

/// Trace distance between the two t-copy brute-force states, a numerical
/// data point for whether collective measurements could beat the separable
/// strategy (open; no closed form is known for `t >= 2`).
pub fn collective_trace_distance(
    n_addr: usize,
    m0: usize,
    m1: usize,
    t: u32,
    caps: &Caps,
) -> Result<f64> {
    let rho0 = t_copy_ensemble_brute(n_addr, m0, t, caps)?;
    let rho1 = t_copy_ensemble_brute(n_addr, m1, t, caps)?;
    trace_distance_dense(&rho0, &rho1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevector::AddressState;

    fn caps() -> Caps {
        Caps::default()
    }

    fn hyp(n_addr: usize, m: usize) -> BiasHypothesis {
        BiasHypothesis::new(n_addr, m).unwrap()
    }

    #[test]
    fn closed_form_special_cases() {
        let pure = ensemble_closed_form(&hyp(8, 0));
        assert_eq!(pure.mu_sq(), 1.0);
        assert_eq!(pure.lambda_perp(), 0.0);

        let mixed = ensemble_closed_form(&hyp(4, 1));
        assert_eq!(mixed.mu_sq(), 0.25);
        assert_eq!(mixed.lambda_perp(), 0.25);

        let minus = ensemble_closed_form(&hyp(2, 1));
        assert_eq!(minus.mu_sq(), 0.0);
        // rho = |-><-|
        let dense = densify(&minus, &caps()).unwrap();
        assert!((dense.entry(0, 0).re - 0.5).abs() <= 1e-15);
        assert!((dense.entry(0, 1).re + 0.5).abs() <= 1e-15);
    }

    #[test]
    fn two_eigenspace_state_validates_parameters() {
        assert!(TwoEigenspaceState::new(3, 0.5).is_err());
        assert!(TwoEigenspaceState::new(4, 1.5).is_err());
        assert!(TwoEigenspaceState::new(4, -0.1).is_err());
    }

    #[test]
    fn eigenvalues_are_nonnegative_and_sum_to_one() {
        for n_addr in [2usize, 4, 8, 16] {
            for m in 0..=n_addr {
                let s = ensemble_closed_form(&hyp(n_addr, m));
                assert!(s.lambda_plus() >= 0.0 && s.lambda_perp() >= 0.0);
                let total = s.lambda_plus() + (n_addr as f64 - 1.0) * s.lambda_perp();
                assert!((total - 1.0).abs() <= 1e-15, "N={n_addr} m={m}: {total}");
            }
        }
    }

    #[test]
    fn densify_identities() {
        // mu^2 = 1: |+><+| has all entries 1/N
        let rho = densify(&TwoEigenspaceState::new(4, 1.0).unwrap(), &caps()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((rho.entry(i, j).re - 0.25).abs() <= 1e-15);
            }
        }
        // mu^2 = 1/N: the maximally mixed state
        let rho = densify(&TwoEigenspaceState::new(4, 0.25).unwrap(), &caps()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 0.25 } else { 0.0 };
                assert!((rho.entry(i, j).re - expect).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn brute_force_matches_hand_averages() {
        // m = 0: rank-1 projector onto |+>
        let rho = ensemble_brute_force(4, 0, &caps()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((rho.entry(i, j).re - 0.25).abs() <= 1e-14);
            }
        }
        // m = 1 at N = 4: the four single-one tables average to I/4
        let rho = ensemble_brute_force(4, 1, &caps()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 0.25 } else { 0.0 };
                assert!((rho.entry(i, j).re - expect).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_closed_form() {
        let h = hyp(8, 3);
        let brute = ensemble_brute_force(8, 3, &caps()).unwrap();
        let closed = densify(&ensemble_closed_form(&h), &caps()).unwrap();
        assert!(brute.frobenius_distance(&closed).unwrap() <= 1e-12);
    }

    #[test]
    fn trace_distance_closed_cases() {
        // Deutsch-Jozsa: constant vs balanced
        assert_eq!(trace_distance_closed(&hyp(8, 0), &hyp(8, 4)).unwrap(), 1.0);
        // complementary weights are indistinguishable
        assert_eq!(trace_distance_closed(&hyp(8, 3), &hyp(8, 5)).unwrap(), 0.0);
        assert_eq!(trace_distance_closed(&hyp(4, 0), &hyp(4, 1)).unwrap(), 0.75);
        assert!(trace_distance_closed(&hyp(4, 0), &hyp(8, 0)).is_err());
    }

    #[test]
    fn trace_distance_dense_cases() {
        let rho = ensemble_brute_force(4, 1, &caps()).unwrap();
        assert!(trace_distance_dense(&rho, &rho).unwrap() <= 1e-14);

        // orthogonal pure states
        let e0 = DensityOperator::pure(&AddressState::basis(4, 0).unwrap());
        let e1 = DensityOperator::pure(&AddressState::basis(4, 1).unwrap());
        assert!((trace_distance_dense(&e0, &e1).unwrap() - 1.0).abs() <= 1e-14);

        for m0 in 0..=8usize {
            for m1 in 0..=8usize {
                let dense = trace_distance_dense(
                    &ensemble_brute_force(8, m0, &caps()).unwrap(),
                    &ensemble_brute_force(8, m1, &caps()).unwrap(),
                )
                .unwrap();
                let closed = trace_distance_closed(&hyp(8, m0), &hyp(8, m1)).unwrap();
                assert!(
                    (dense - closed).abs() <= 1e-10,
                    "m0={m0} m1={m1}: {dense} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn helstrom_success_cases() {
        assert_eq!(helstrom_success(&hyp(8, 0), &hyp(8, 4)).unwrap(), 1.0);
        assert_eq!(helstrom_success(&hyp(8, 3), &hyp(8, 5)).unwrap(), 0.5);
        assert_eq!(helstrom_success(&hyp(4, 0), &hyp(4, 1)).unwrap(), 0.875);
    }

    #[test]
    fn t_copy_of_pure_class_factorizes() {
        let rho = ensemble_brute_force(4, 0, &caps()).unwrap();
        let direct = t_copy_ensemble_brute(4, 0, 2, &caps()).unwrap();
        let factored = tensor_power(&rho, 2, &caps()).unwrap();
        assert!(direct.frobenius_distance(&factored).unwrap() <= 1e-13);
    }

    #[test]
    fn t_copy_of_sign_flip_class_factorizes() {
        // F(1) at N = 2 is {01, 10}; both members give +/-|->, one projector
        let direct = t_copy_ensemble_brute(2, 1, 3, &caps()).unwrap();
        let single = densify(&ensemble_closed_form(&hyp(2, 1)), &caps()).unwrap();
        let factored = tensor_power(&single, 3, &caps()).unwrap();
        assert!(direct.frobenius_distance(&factored).unwrap() <= 1e-13);
    }

    #[test]
    fn t_copy_generally_does_not_factorize() {
        let direct = t_copy_ensemble_brute(4, 1, 2, &caps()).unwrap();
        let single = ensemble_brute_force(4, 1, &caps()).unwrap();
        let factored = tensor_power(&single, 2, &caps()).unwrap();
        assert!(direct.frobenius_distance(&factored).unwrap() > 0.01);
    }

    #[test]
    fn collective_distance_consistency() {
        // t = 1 reduces to the single-copy closed form
        let d1 = collective_trace_distance(4, 0, 1, 1, &caps()).unwrap();
        assert!((d1 - 0.75).abs() <= 1e-12);

        // complementary weights stay indistinguishable for every t
        for t in 1..=3u32 {
            let d = collective_trace_distance(4, 1, 3, t, &caps()).unwrap();
            assert!(d <= 1e-12, "t={t}: {d}");
        }

        let d2 = collective_trace_distance(4, 0, 1, 2, &caps()).unwrap();
        assert!(d2 > 0.0 && d2 <= 1.0, "{d2}");
    }

    #[test]
    fn density_operator_rejects_bad_matrices() {
        let mut mat = CMat::identity(2);
        mat.set(0, 1, Complex64::new(0.3, 0.0));
        // not Hermitian: [0,1] = 0.3 but [1,0] = 0
        assert!(matches!(
            DensityOperator::from_matrix(mat),
            Err(Error::NotHermitian { .. })
        ));

        // Hermitian but trace 2
        let mat = CMat::identity(2);
        assert!(matches!(
            DensityOperator::from_matrix(mat),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn caps_are_enforced() {
        let tiny = Caps {
            max_dense_dim: 4,
            max_tcopy_dim: 16,
            ..Caps::default()
        };
        assert!(matches!(
            ensemble_brute_force(8, 1, &tiny),
            Err(Error::DenseDimTooLarge { .. })
        ));
        assert!(matches!(
            densify(&TwoEigenspaceState::new(8, 0.5).unwrap(), &tiny),
            Err(Error::DenseDimTooLarge { .. })
        ));
        assert!(matches!(
            t_copy_ensemble_brute(4, 1, 3, &tiny),
            Err(Error::DenseDimTooLarge { .. })
        ));
        assert!(t_copy_ensemble_brute(4, 1, 2, &tiny).is_ok());
    }

    #[test]
    fn psd_spot_check() {
        let rho = ensemble_brute_force(8, 2, &caps()).unwrap();
        assert!(rho.min_eigenvalue() >= -1e-10);
        let rho2 = t_copy_ensemble_brute(4, 1, 2, &caps()).unwrap();
        assert!(rho2.min_eigenvalue() >= -1e-10);
    }
}
