//! Exact complex statevector mechanics for the three-register query model.
//!
//! The full register is `A (x) D (x) M`: `n` address qubits, one data qubit,
//! and `N = 2^n` memory qubits holding a truth table. One query applies the
//! fixed permutation unitary `|a, y, m> -> |a, y XOR m_a, m>`. With the probe
//! `|+>_A |->_D` and a basis memory `|M_f>`, the output is the product
//! `|psi_f> (x) |-> (x) |M_f>` where `|psi_f>` is the phase-kicked address
//! state `(1/sqrt(N)) sum_a (-1)^{f(a)} |a>`; this module both implements the
//! full unitary and verifies that reduction numerically.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::boolean::TruthTable;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};

const NORM_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Pure state of the address register: `N = 2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct AddressState {
    amps: Vec<Complex64>,
}

impl AddressState {
    /// Validates a power-of-two length and unit norm (within 1e-10).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 || !amps.len().is_power_of_two() {
            return Err(Error::AddressCountNotPowerOfTwo(amps.len()));
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                deviation: (norm_sq - 1.0).abs(),
            });
        }
        Ok(AddressState { amps })
    }

    fn new_unchecked(amps: Vec<Complex64>) -> Self {
        AddressState { amps }
    }

    /// The uniform superposition `|+>` on `N` addresses.
    pub fn plus(n_addr: usize) -> Result<Self> {
        if n_addr < 2 || !n_addr.is_power_of_two() {
            return Err(Error::AddressCountNotPowerOfTwo(n_addr));
        }
        let amp = Complex64::new(libm::sqrt(1.0 / n_addr as f64), 0.0);
        Ok(AddressState {
            amps: alloc::vec![amp; n_addr],
        })
    }

    /// Computational basis state `|a>`.
    pub fn basis(n_addr: usize, a: usize) -> Result<Self> {
        if n_addr < 2 || !n_addr.is_power_of_two() {
            return Err(Error::AddressCountNotPowerOfTwo(n_addr));
        }
        let mut amps = alloc::vec![ZERO; n_addr];
        amps[a] = Complex64::new(1.0, 0.0);
        Ok(AddressState { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn qubits(&self) -> u32 {
        self.amps.len().trailing_zeros()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &AddressState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|^2`, i.e. equality of pure states up to global phase.
    pub fn fidelity(&self, other: &AddressState) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }
}

/// The address state `|psi_f> = P_f |+>` with `amps[a] = (-1)^{f(a)} / sqrt(N)`.
pub fn address_state(f: &TruthTable) -> AddressState {
    let n_addr = f.address_count();
    let scale = libm::sqrt(1.0 / n_addr as f64);
    let amps = (0..n_addr)
        .map(|a| Complex64::new(f.sign(a) * scale, 0.0))
        .collect();
    AddressState::new_unchecked(amps)
}

/// Applies the phase oracle `P_f = sum_a (-1)^{f(a)} |a><a|`.
pub fn apply_phase_oracle(f: &TruthTable, s: &AddressState) -> Result<AddressState> {
    if f.address_count() != s.dim() {
        return Err(Error::DimensionMismatch(f.address_count(), s.dim()));
    }
    let amps = s
        .amps
        .iter()
        .enumerate()
        .map(|(a, &z)| z * f.sign(a))
        .collect();
    Ok(AddressState::new_unchecked(amps))
}

/// The n-fold tensor Hadamard via an in-place radix-2 butterfly.
///
/// Self-inverse; maps `|+>` to `|0^n>`.
pub fn hadamard_transform(s: &AddressState) -> AddressState {
    let mut amps = s.amps.clone();
    let dim = amps.len();
    let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
    let mut step = 1;
    while step < dim {
        let mut base = 0;
        while base < dim {
            for offset in 0..step {
                let j = base + offset;
                let k = j + step;
                let a = amps[j];
                let b = amps[k];
                amps[j] = (a + b) * inv_sqrt2;
                amps[k] = (a - b) * inv_sqrt2;
            }
            base += 2 * step;
        }
        step <<= 1;
    }
    AddressState::new_unchecked(amps)
}

/// `<+|s> = (1/sqrt(N)) sum_a amps[a]`; equals the phase-bias `mu(f)` when
/// `s` is an address state.
pub fn plus_overlap(s: &AddressState) -> Complex64 {
    let sum: Complex64 = s.amps.iter().sum();
    sum * libm::sqrt(1.0 / s.dim() as f64)
}

/// Samples a computational-basis outcome from the squared amplitudes.
pub fn sample_outcome<R: Rng + ?Sized>(s: &AddressState, rng: &mut R) -> usize {
    let u: f64 = rng.gen();
    let mut cum = 0.0;
    let mut fallback = 0;
    for (i, amp) in s.amps.iter().enumerate() {
        let p = amp.norm_sqr();
        if p > 0.0 {
            fallback = i;
        }
        cum += p;
        if u < cum {
            return i;
        }
    }
    fallback
}

/// Joint pure state on `A (x) D (x) M`.
///
/// Composite basis label `(a, y, m)` maps to index `a * 2^(N+1) + y * 2^N + m`
/// with bit `j` of the memory label `m` holding cell `m_j`. The address-major
/// layout keeps the partial trace over `D (x) M` contiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct RegisterState {
    n_addr: usize,
    amps: Vec<Complex64>,
}

impl RegisterState {
    /// Number of addresses `N`.
    pub fn address_count(&self) -> usize {
        self.n_addr
    }

    /// Total amplitude count `N * 2 * 2^N`.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    #[inline]
    pub fn index(&self, a: usize, y: usize, m: usize) -> usize {
        let n_mem = 1usize << self.n_addr;
        a * 2 * n_mem + y * n_mem + m
    }

    #[inline]
    pub fn amplitude(&self, a: usize, y: usize, m: usize) -> Complex64 {
        self.amps[self.index(a, y, m)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &RegisterState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// A computational-basis register state `|a, y, m>`.
    pub fn basis(n_addr: usize, a: usize, y: usize, m: usize, caps: &Caps) -> Result<Self> {
        let mut s = RegisterState::empty(n_addr, caps)?;
        let idx = s.index(a, y, m);
        s.amps[idx] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// The probe `|+>_A |->_D |M_f>_M`.
    pub fn probe(f: &TruthTable, caps: &Caps) -> Result<Self> {
        let mut s = RegisterState::empty(f.address_count(), caps)?;
        let m = memory_label(f);
        let amp = libm::sqrt(1.0 / f.address_count() as f64) * core::f64::consts::FRAC_1_SQRT_2;
        for a in 0..f.address_count() {
            let i0 = s.index(a, 0, m);
            let i1 = s.index(a, 1, m);
            s.amps[i0] = Complex64::new(amp, 0.0);
            s.amps[i1] = Complex64::new(-amp, 0.0);
        }
        Ok(s)
    }

    fn empty(n_addr: usize, caps: &Caps) -> Result<Self> {
        if n_addr < 2 || !n_addr.is_power_of_two() {
            return Err(Error::AddressCountNotPowerOfTwo(n_addr));
        }
        let qubits = n_addr.trailing_zeros();
        if qubits > caps.max_statevector_qubits {
            return Err(Error::StatevectorTooLarge {
                qubits,
                cap: caps.max_statevector_qubits,
            });
        }
        let dim = n_addr * 2 * (1usize << n_addr);
        Ok(RegisterState {
            n_addr,
            amps: alloc::vec![ZERO; dim],
        })
    }

    /// Reduced density operator of the address register,
    /// `rho_A[a][a'] = sum_{y,m} psi[a,y,m] conj(psi[a',y,m])`.
    pub fn reduced_address_matrix(&self) -> CMat {
        let n = self.n_addr;
        let block = 2 * (1usize << n); // amplitudes per address
        let mut rho = CMat::zeros(n);
        for a in 0..n {
            let row_a = &self.amps[a * block..(a + 1) * block];
            for ap in a..n {
                let row_b = &self.amps[ap * block..(ap + 1) * block];
                let acc: Complex64 = row_a
                    .iter()
                    .zip(row_b)
                    .map(|(x, y)| x * y.conj())
                    .sum();
                rho.set(a, ap, acc);
                if ap != a {
                    rho.set(ap, a, acc.conj());
                }
            }
        }
        rho
    }
}

fn memory_label(f: &TruthTable) -> usize {
    // statevector caps keep N <= ~20, so the packed word fits usize
    f.word() as usize
}

/// One application of the query unitary: the basis amplitude at `(a, y, m)`
/// moves to `(a, y XOR m_a, m)`. Exact permutation, hence norm-preserving and
/// an involution.
pub fn apply_uqram(s: &RegisterState) -> RegisterState {
    let mut out = s.clone();
    let n_addr = s.n_addr;
    let n_mem = 1usize << n_addr;
    for a in 0..n_addr {
        for m in 0..n_mem {
            if (m >> a) & 1 == 1 {
                let i0 = out.index(a, 0, m);
                let i1 = out.index(a, 1, m);
                out.amps.swap(i0, i1);
            }
        }
    }
    out
}

/// Runs the full probe-and-query cycle for `f` and checks the product-form
/// reduction.
///
/// Builds `|+>_A |->_D |M_f>`, applies the query unitary, and returns:
///
/// 1. the dominant eigenvector of the address register's reduced state, with
///    the global phase fixed so the largest-magnitude amplitude is positive
///    real; this should match `address_state(f)` up to global phase;
/// 2. the product-form residual `1 - |<psi_f (x) - (x) M_f | output>|^2`.
pub fn probe_and_query(f: &TruthTable, caps: &Caps) -> Result<(AddressState, f64)> {
    let probe = RegisterState::probe(f, caps)?;
    let out = apply_uqram(&probe);

    // analytic expectation psi_f (x) |-> (x) |M_f>
    let mut expected = RegisterState::empty(f.address_count(), caps)?;
    let m = memory_label(f);
    let amp = libm::sqrt(1.0 / f.address_count() as f64) * core::f64::consts::FRAC_1_SQRT_2;
    for a in 0..f.address_count() {
        let sign = f.sign(a);
        let i0 = expected.index(a, 0, m);
        let i1 = expected.index(a, 1, m);
        expected.amps[i0] = Complex64::new(sign * amp, 0.0);
        expected.amps[i1] = Complex64::new(-sign * amp, 0.0);
    }
    let overlap = expected.inner(&out)?;
    let residual = 1.0 - overlap.norm_sqr();

    let rho_a = out.reduced_address_matrix();
    let eig = linalg::eigh(&rho_a);
    let dominant = eig.vector(rho_a.dim() - 1);
    let fixed = fix_global_phase(dominant);
    Ok((AddressState::new_unchecked(fixed), residual))
}

/// Rotates a state vector so its largest-magnitude amplitude (first such, on
/// ties) is positive real.
fn fix_global_phase(mut amps: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0;
    let mut best_norm = 0.0;
    for (i, z) in amps.iter().enumerate() {
        let n = z.norm_sqr();
        if n > best_norm + 1e-24 {
            best = i;
            best_norm = n;
        }
    }
    let z = amps[best];
    let r = z.norm();
    if r > 0.0 {
        let rot = z.conj() / r;
        for a in &mut amps {
            *a *= rot;
        }
    }
    amps
}

/// Queries a superposed memory `sum_f c_f |M_f>` and reports how entangled
/// the address register comes out.
///
/// Prepares `|+>_A |->_D (x) sum_f c_f |M_f>`, applies the query unitary, and
/// returns the output together with the von Neumann entropy (base 2) of the
/// address register's reduced state. A single basis memory gives entropy 0;
/// genuinely superposed memories generally entangle `A` with `M`.
pub fn superposed_memory_query(
    terms: &[(TruthTable, Complex64)],
    caps: &Caps,
) -> Result<(RegisterState, f64)> {
    let first = terms
        .first()
        .ok_or(Error::NotNormalized { deviation: 1.0 })?;
    let n_addr = first.0.address_count();
    let coeff_norm: f64 = terms.iter().map(|(_, c)| c.norm_sqr()).sum();
    if (coeff_norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized {
            deviation: (coeff_norm - 1.0).abs(),
        });
    }

    let mut state = RegisterState::empty(n_addr, caps)?;
    let amp = libm::sqrt(1.0 / n_addr as f64) * core::f64::consts::FRAC_1_SQRT_2;
    for (f, c) in terms {
        if f.address_count() != n_addr {
            return Err(Error::DimensionMismatch(f.address_count(), n_addr));
        }
        let m = memory_label(f);
        for a in 0..n_addr {
            let i0 = state.index(a, 0, m);
            let i1 = state.index(a, 1, m);
            state.amps[i0] += c * amp;
            state.amps[i1] -= c * amp;
        }
    }
    // duplicate tables would break normalization even with unit coefficients
    let norm_sq = state.norm_sqr();
    if (norm_sq - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized {
            deviation: (norm_sq - 1.0).abs(),
        });
    }

    let out = apply_uqram(&state);
    let rho_a = out.reduced_address_matrix();
    let entropy = linalg::von_neumann_entropy_bits(&linalg::eigvalsh(&rho_a));
    Ok((out, entropy))
}
