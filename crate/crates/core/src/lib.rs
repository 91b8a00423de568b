//! Discrimination of Boolean memory configurations behind a universal QRAM
//! (U-QRAM) query interface.
//!
//! A memory stores an unknown Boolean function `f: [N] -> {0,1}` as a basis
//! state on `N` memory qubits. The only access to it is a fixed XOR-query
//! unitary, so one coherent query with a `|+>|->` probe yields the phase-kicked
//! *address state* `(1/sqrt(N)) * sum_a (-1)^{f(a)} |a>`. When `f` is drawn
//! uniformly from an exact-weight class (all tables with `m` ones), the
//! ensemble average of those address states collapses to a two-eigenspace
//! density operator parameterized by the squared phase-bias `mu^2 = (1-2m/N)^2`.
//! That closed form makes the optimal single-copy (Helstrom) test, its success
//! probability, and the multi-query count statistics explicit.
//!
//! The crate is organised around that pipeline:
//!
//! - [`boolean`]: truth tables, exact-weight classes, bias quantities;
//! - [`statevector`]: exact complex statevector mechanics for the full
//!   three-register query unitary and the reduction to address states;
//! - [`linalg`]: dense Hermitian matrices and a Jacobi eigensolver;
//! - [`ensemble`]: induced ensemble states, trace distances, Helstrom
//!   success probabilities, and t-copy states;
//! - [`discrimination`]: trial simulation, likelihood-ratio tests, exact
//!   Bayes errors, Chernoff exponents, and query-count scaling;
//! - [`stats`]: small numerical statistics helpers shared by the above.
//!
//! Everything here is deterministic given an RNG seed and runs without `std`
//! (allocation only); IO, file formats, and the experiment CLI live in the
//! companion `uqd-cli` crate.

#![no_std]

extern crate alloc;

pub mod boolean;
pub mod caps;
pub mod discrimination;
pub mod ensemble;
pub mod error;
pub mod linalg;
mod math;
pub mod statevector;
pub mod stats;

pub use boolean::{BiasHypothesis, TruthTable};
pub use caps::Caps;
pub use error::{Error, Result};
