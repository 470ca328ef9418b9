//! Ascending power series for I_nu.

use super::scaled::Scaled;
use crate::special::{lgamma, tgamma};

/// I_nu(x) by its power series; returns the value and a relative error estimate.
pub(crate) fn i_series(nu: f64, x: f64) -> (Scaled, f64) {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    let mut n = 0usize;
    loop {
        term *= q / (k * (nu + k));
        sum += term;
        n += 1;
        if term < 1e-17 * sum || n > 500 {
            break;
        }
        k += 1.0;
    }
    let half = 0.5 * x;
    let ln_pow = nu * half.ln();
    let ln_pref = ln_pow - lgamma(nu + 1.0);
    let direct = nu + 1.0 < 170.0 && ln_pow.abs() < 700.0 && ln_pref.abs() < 700.0;
    let (pref, pref_err) = if direct {
        (Scaled::new(half.powf(nu) / tgamma(nu + 1.0)), 4.0 * f64::EPSILON)
    } else {
        (Scaled::from_ln(ln_pref, 1.0), (ln_pref.abs() + 4.0) * f64::EPSILON)
    };
    let rel = pref_err + (n as f64 + 2.0) * f64::EPSILON;
    (pref.scale(sum), rel)
}
