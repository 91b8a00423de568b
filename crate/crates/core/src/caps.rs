//! Resource caps for the brute-force and full-statevector paths.
//!
//! The closed forms are cheap at any size; the verification paths that
//! enumerate classes or hold full three-register statevectors are not. These
//! caps keep them desk-scale. Callers (e.g. the CLI) may override them.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of address qubits for full-register statevectors.
    /// The register holds `2^n * 2 * 2^(2^n)` amplitudes; n = 4 is ~2^21.
    pub max_statevector_qubits: u32,
    /// Maximum number of truth tables in an enumerated weight class.
    pub max_enum_class: u128,
    /// Maximum dimension for dense single-copy density operators.
    pub max_dense_dim: usize,
    /// Maximum dimension `N^t` for dense t-copy density operators.
    pub max_tcopy_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_statevector_qubits: 4,
            max_enum_class: 1_000_000,
            max_dense_dim: 64,
            max_tcopy_dim: 4096,
        }
    }
}
