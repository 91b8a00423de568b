//! Error type shared across the crate.

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Address count is not a power of two (or is below 2).
    #[error("address count {0} is not a power of two >= 2")]
    AddressCountNotPowerOfTwo(usize),

    /// Hamming weight outside `0..=N`.
    #[error("weight {m} out of range for {n_addr} addresses")]
    WeightOutOfRange { m: usize, n_addr: usize },

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// A weight class has more members than the enumeration cap allows.
    #[error("class too large to enumerate: {size} tables exceeds cap {cap}")]
    ClassTooLarge { size: u128, cap: u128 },

    /// A statevector would exceed the full-register qubit cap.
    #[error("statevector too large: {qubits} address qubits exceeds cap {cap}")]
    StatevectorTooLarge { qubits: u32, cap: u32 },

    /// A dense matrix would exceed the dimension cap.
    #[error("dense dimension {dim} exceeds cap {cap}")]
    DenseDimTooLarge { dim: usize, cap: usize },

    /// A state or coefficient vector is not normalized.
    #[error("state not normalized: |norm^2 - 1| = {deviation}")]
    NotNormalized { deviation: f64 },

    /// A matrix expected to be Hermitian deviates beyond tolerance.
    #[error("matrix not Hermitian: max deviation {max_deviation}")]
    NotHermitian { max_deviation: f64 },

    /// A scalar parameter is outside its admissible range.
    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: String, value: f64 },
}
