//! Dense complex matrices and a Hermitian eigensolver.
//!
//! Everything in this crate that needs spectra works on small dense Hermitian
//! matrices (dimension at most a few thousand, usually <= 16), so a cyclic
//! complex Jacobi solver is plenty: unconditionally convergent, near machine
//! precision, no external linear-algebra dependency.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat {
            dim,
            data: alloc::vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(data.len(), dim * dim));
        }
        Ok(CMat { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    /// `self += w * v v^dagger` for a column vector `v`.
    pub fn accumulate_outer(&mut self, v: &[Complex64], w: f64) {
        debug_assert_eq!(v.len(), self.dim);
        for i in 0..self.dim {
            let vi = v[i];
            let row = &mut self.data[i * self.dim..(i + 1) * self.dim];
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += vi * v[j].conj() * w;
            }
        }
    }

    pub fn scale(&mut self, w: f64) {
        for cell in &mut self.data {
            *cell *= w;
        }
    }

    pub fn sub(&self, other: &CMat) -> Result<CMat> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CMat {
            dim: self.dim,
            data,
        })
    }

    pub fn mul(&self, other: &CMat) -> Result<CMat> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &CMat) -> CMat {
        let n = self.dim;
        let m = other.dim;
        let mut out = CMat::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * n * m + (j * m + l)] = a * other.data[k * m + l];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    /// Largest entrywise deviation from `A = A^dagger`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMat) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Kronecker product of two column vectors.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix.
///
/// `values` ascending; column `k` of `vectors` is the unit eigenvector for
/// `values[k]`.
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMat,
}

impl HermitianEigen {
    /// Column `k` as a vector.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.dim()).map(|i| self.vectors.get(i, k)).collect()
    }
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// The input is assumed Hermitian; only its Hermitian part influences the
/// result (each rotation reads `a[p][q]` and the real diagonal). Callers that
/// accept external matrices should check [`CMat::hermitian_deviation`] first.
pub fn eigh(mat: &CMat) -> HermitianEigen {
    let n = mat.dim();
    let mut a = mat.clone();
    let mut v = CMat::identity(n);

    let scale = a.frobenius_norm().max(1e-300);
    let tol = 1e-15 * scale;
    const MAX_SWEEPS: usize = 60;

    for _ in 0..MAX_SWEEPS {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a.get(p, q).norm_sqr();
            }
        }
        if libm::sqrt(2.0 * off) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let values = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMat::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, col, v.get(row, src));
        }
    }
    HermitianEigen { values, vectors }
}

/// Eigenvalues only (same Jacobi path).
pub fn eigvalsh(mat: &CMat) -> Vec<f64> {
    eigh(mat).values
}

/// One Jacobi rotation zeroing `a[p][q]`.
///
/// The 2x2 block is first de-phased so the pivot is real, then rotated with
/// the usual stable symmetric-Jacobi angle.
fn rotate(a: &mut CMat, v: &mut CMat, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{i phi}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    // U differs from the identity in rows/cols p,q:
    //   U[p][p] = c          U[p][q] = s
    //   U[q][p] = -s e^{-i phi}   U[q][q] = c e^{-i phi}
    let n = a.dim();
    let phase_conj = phase.conj();

    // columns: B = A U
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c - akq * s * phase_conj);
        a.set(k, q, akp * s + akq * c * phase_conj);
    }
    // rows: A' = U^dagger B
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c - aqk * s * phase);
        a.set(q, k, apk * s + aqk * c * phase);
    }
    // keep the pivot block exactly clean
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    let dpp = a.get(p, p);
    let dqq = a.get(q, q);
    a.set(p, p, Complex64::new(dpp.re, 0.0));
    a.set(q, q, Complex64::new(dqq.re, 0.0));

    // accumulate eigenvectors: V = V U
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c - vkq * s * phase_conj);
        v.set(k, q, vkp * s + vkq * c * phase_conj);
    }
}

/// Von Neumann entropy in bits of a spectrum, with `0 log 0 = 0`.
///
/// Eigenvalues in `[-1e-10, 0)` are treated as solver noise and clipped.
pub fn von_neumann_entropy_bits(eigenvalues: &[f64]) -> f64 {
    let mut s = 0.0;
    for &lambda in eigenvalues {
        debug_assert!(lambda > -1e-10, "eigenvalue {lambda} too negative for a state");
        if lambda > 0.0 {
            s -= lambda * libm::log2(lambda);
        }
    }
    s
}
