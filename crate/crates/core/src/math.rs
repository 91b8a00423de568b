//! Float helpers for the `no_std` build (transcendentals come from `libm`
//! at the call sites).

/// Integer power by repeated squaring.
///
/// `libm::pow` rounds differently from exact products for small integer
/// exponents; the experiments compare quantities like `(1 - mu^2)^t` across
/// two code paths, so both paths use this.
pub(crate) fn powi(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}
