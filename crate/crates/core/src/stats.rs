//! Small numerical statistics helpers: binomial pmfs, total-variation
//! distance, and a chi-square survival function for uniformity tests.

use alloc::vec::Vec;

use crate::math::powi;

/// Full pmf of `Binomial(t, q)` as a vector of length `t + 1`.
///
/// Uses the multiplicative recurrence from whichever end has the larger
/// starting mass, so relative accuracy stays near machine precision for the
/// `t <= a few hundred` range used here.
pub fn binomial_pmf(t: u32, q: f64) -> Vec<f64> {
    let len = t as usize + 1;
    let mut pmf = alloc::vec![0.0; len];
    if q <= 0.0 {
        pmf[0] = 1.0;
        return pmf;
    }
    if q >= 1.0 {
        pmf[len - 1] = 1.0;
        return pmf;
    }
    if q <= 0.5 {
        // forward from k = 0
        pmf[0] = powi(1.0 - q, t);
        let ratio = q / (1.0 - q);
        for k in 0..t as usize {
            pmf[k + 1] = pmf[k] * ratio * (t as f64 - k as f64) / (k as f64 + 1.0);
        }
    } else {
        // backward from k = t
        pmf[len - 1] = powi(q, t);
        let ratio = (1.0 - q) / q;
        for k in (1..len).rev() {
            pmf[k - 1] = pmf[k] * ratio * k as f64 / (t as f64 - k as f64 + 1.0);
        }
    }
    pmf
}

/// Total-variation distance between two distributions on the same support.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// Natural log of the gamma function (Lanczos approximation, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    #[allow(clippy::excessive_precision)]
    const COEFFS: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // reflection
        let pi = core::f64::consts::PI;
        return libm::log(pi / libm::sin(pi * x)) - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * libm::log(2.0 * core::f64::consts::PI) + (x + 0.5) * libm::log(t) - t + libm::log(acc)
}

/// Regularized upper incomplete gamma `Q(a, x) = Gamma(a, x) / Gamma(a)`.
///
/// Series for `x < a + 1`, Lentz continued fraction otherwise.
pub fn gamma_q(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x >= 0.0, "gamma_q domain: a={a}, x={x}");
    if x == 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - gamma_p_series(a, x)
    } else {
        gamma_q_cf(a, x)
    }
}

fn gamma_p_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut ap = a;
    for _ in 0..500 {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * 1e-16 {
            break;
        }
    }
    sum * libm::exp(-x + a * libm::log(x) - ln_gamma(a))
}

fn gamma_q_cf(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    libm::exp(-x + a * libm::log(x) - ln_gamma(a)) * h
}

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom: `P(X >= stat)`.
pub fn chi_square_sf(stat: f64, dof: u32) -> f64 {
    if stat <= 0.0 {
        return 1.0;
    }
    gamma_q(f64::from(dof) / 2.0, stat / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    
    #[test]
    fn pmf_sums_to_one_and_matches_closed_terms() {
        let pmf = binomial_pmf(3, 0.25);
        assert!((pmf.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        // C(3,k) (1/4)^k (3/4)^(3-k): 27/64, 27/64, 9/64, 1/64
        assert!((pmf[0] - 27.0 / 64.0).abs() < 1e-15);
        assert!((pmf[1] - 27.0 / 64.0).abs() < 1e-15);
        assert!((pmf[2] - 9.0 / 64.0).abs() < 1e-15);
        assert!((pmf[3] - 1.0 / 64.0).abs() < 1e-15);

        for &(t, q) in &[(10u32, 0.25), (50, 0.96), (200, 0.5625)] {
            let pmf = binomial_pmf(t, q);
            assert!((pmf.iter().sum::<f64>() - 1.0).abs() < 1e-12, "t={t} q={q}");
            assert!(pmf.iter().all(|&p| p >= 0.0));
        }
    }

    #[test]
    fn pmf_degenerate_parameters() {
        assert_eq!(binomial_pmf(5, 0.0), alloc::vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(binomial_pmf(5, 1.0), alloc::vec![0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn total_variation_basics() {
        assert_eq!(total_variation(&[1.0, 0.0], &[0.0, 1.0]), 1.0);
        assert_eq!(total_variation(&[0.5, 0.5], &[0.5, 0.5]), 0.0);
    }

    #[test]
    fn ln_gamma_known_values() {
        // Gamma(n) = (n-1)!
        assert!((ln_gamma(1.0)).abs() < 1e-12);
        assert!((ln_gamma(5.0) - libm::log(24.0)).abs() < 1e-12);
        assert!((ln_gamma(0.5) - libm::log(libm::sqrt(core::f64::consts::PI))).abs() < 1e-12);
    }

    #[test]
    fn chi_square_sf_with_two_dof_is_exponential() {
        // dof = 2 reduces to exp(-x/2)
        for &x in &[0.1, 1.0, 5.0, 20.0] {
            assert!(
                (chi_square_sf(x, 2) - libm::exp(-x / 2.0)).abs() < 1e-12,
                "x={x}"
            );
        }
    }

    #[test]
    fn chi_square_sf_is_monotone_and_sane() {
        // 0.999 quantile of chi2(69) is near 111.1 (Wilson-Hilferty)
        assert!(chi_square_sf(111.0, 69) > 0.001);
        assert!(chi_square_sf(112.0, 69) < 0.0011);
        assert!(chi_square_sf(69.0, 69) > 0.4);
        assert_eq!(chi_square_sf(0.0, 5), 1.0);
    }
}
