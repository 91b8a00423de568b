//! Resource-cap overrides from the environment.
//!
//! `UQD_MAX_N` (address qubits for full statevectors), `UQD_MAX_TCOPY_DIM`
//! (dense t-copy dimension), and `UQD_MAX_ENUM` (enumerated class size)
//! override the defaults; unset or unparsable values keep them.

use std::env;

use uqd_core::Caps;

pub fn caps_from_env() -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = parse_var("UQD_MAX_N") {
        caps.max_statevector_qubits = v as u32;
    }
    if let Some(v) = parse_var("UQD_MAX_TCOPY_DIM") {
        caps.max_tcopy_dim = v as usize;
    }
    if let Some(v) = parse_var("UQD_MAX_ENUM") {
        caps.max_enum_class = u128::from(v);
    }
    caps
}

fn parse_var(name: &str) -> Option<u64> {
    env::var(name).ok()?.parse().ok()
}
