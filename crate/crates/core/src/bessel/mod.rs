//! Modified Bessel functions I_nu and K_nu of real order nu >= 0 and
//! positive argument, with derivatives and an extended-exponent form.
//!
//! Method selection:
//! * power series for I when x <= max(10, nu/2);
//! * uniform (Debye) asymptotics for nu >= 30 otherwise, and for K at nu >= 30;
//! * Temme series (x <= 2) or Steed's continued fraction (x > 2) at the
//!   fractional order, followed by upward recurrence, for K at nu < 30;
//! * continued fraction for I'/I plus the Wronskian for I at nu < 30, x > 10.

mod bounds;
mod debye;
mod fraction;
mod scaled;
mod series;

pub use bounds::{
    check_bessel_bounds, gamma_duplication_residual, ln_exp_vanishing_model, BoundId, BoundReport, BoundRow,
};
pub use scaled::Scaled;

use crate::error::{ConeError, Result};
use serde::Serialize;

/// Order at and above which the Debye expansions are used.
pub const DEBYE_MIN_ORDER: f64 = 30.0;

/// Values whose natural log exceeds this in magnitude are reported with a
/// nonzero binary exponent.
const PLAIN_LN_LIMIT: f64 = 600.0 * std::f64::consts::LN_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BesselMethod {
    PowerSeries,
    UniformAsymptotic,
    ContinuedFraction,
    Recurrence,
}

/// One evaluation. The represented number is `value * 2^exponent`;
/// `exponent` is zero unless the magnitude is outside roughly 2^(+-600).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselEval {
    pub value: f64,
    pub exponent: i32,
    pub abs_error_est: f64,
    pub method: BesselMethod,
}

impl BesselEval {
    fn from_scaled(s: Scaled, rel_err: f64, method: BesselMethod) -> Self {
        let ln = s.ln_abs();
        let (value, exponent) =
            if s.is_zero() || ln.abs() <= PLAIN_LN_LIMIT { (s.to_f64(), 0) } else { (s.mant, s.exp2) };
        BesselEval { value, exponent, abs_error_est: value.abs() * rel_err, method }
    }

    pub fn scaled(&self) -> Scaled {
        Scaled::new(self.value).shift(self.exponent)
    }

    /// Plain double; may overflow to infinity or underflow to zero.
    pub fn to_f64(&self) -> f64 {
        self.scaled().to_f64()
    }

    pub fn ln_abs(&self) -> f64 {
        self.scaled().ln_abs()
    }

    pub fn rel_error(&self) -> f64 {
        if self.value == 0.0 {
            0.0
        } else {
            self.abs_error_est / self.value.abs()
        }
    }
}

/// I, I', K, K' at one point, in extended form, with relative error estimates.
#[derive(Debug, Clone, Copy)]
pub struct BesselIK {
    pub i: Scaled,
    pub ip: Scaled,
    pub k: Scaled,
    pub kp: Scaled,
    pub i_err: f64,
    pub k_err: f64,
    pub i_method: BesselMethod,
    pub k_method: BesselMethod,
}

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(ConeError::InvalidParameter(format!("order must be >= 0, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(ConeError::InvalidParameter(format!("argument must be > 0, got {x}")));
    }
    Ok(())
}

fn series_applies(nu: f64, x: f64) -> bool {
    x <= (0.5 * nu).max(10.0)
}

/// I_nu(x) and I'_nu(x) in extended form.
pub(crate) fn i_and_derivative(nu: f64, x: f64) -> (Scaled, Scaled, f64, BesselMethod) {
    if series_applies(nu, x) {
        let (i0, e0) = series::i_series(nu, x);
        let (i1, e1) = series::i_series(nu + 1.0, x);
        // I' = I_{nu+1} + (nu/x) I_nu, the sum of the two standard recurrences
        let ip = i1.add(i0.scale(nu / x));
        (i0, ip, e0.max(e1), BesselMethod::PowerSeries)
    } else if nu >= DEBYE_MIN_ORDER {
        let d = debye::debye(nu, x);
        (d.i, d.ip, d.rel_err, BesselMethod::UniformAsymptotic)
    } else {
        let (i, ip) = fraction::i_wronskian(nu, x);
        let err = (x + nu + 50.0) * 2.0 * f64::EPSILON;
        (i, ip, err, BesselMethod::ContinuedFraction)
    }
}

/// K_nu(x) and K'_nu(x) in extended form.
pub(crate) fn k_and_derivative(nu: f64, x: f64) -> (Scaled, Scaled, f64, BesselMethod) {
    if nu >= DEBYE_MIN_ORDER {
        let d = debye::debye(nu, x);
        (d.k, d.kp, d.rel_err, BesselMethod::UniformAsymptotic)
    } else {
        let (k0, k1, steps) = fraction::k_pair(nu, x);
        // K' = (nu/x) K_nu - K_{nu+1}
        let kp = k0.scale(nu / x).add(k1.neg());
        let err = (40.0 + 2.0 * steps as f64) * f64::EPSILON;
        let method = if steps > 0 { BesselMethod::Recurrence } else { BesselMethod::ContinuedFraction };
        (k0, kp, err, method)
    }
}

/// All four quantities at one point.
pub fn bessel_ik(nu: f64, x: f64) -> Result<BesselIK> {
    check_args(nu, x)?;
    let (i, ip, i_err, i_method) = i_and_derivative(nu, x);
    let (k, kp, k_err, k_method) = k_and_derivative(nu, x);
    Ok(BesselIK { i, ip, k, kp, i_err, k_err, i_method, k_method })
}

/// Modified Bessel function of the first kind.
pub fn bessel_i(nu: f64, x: f64) -> Result<BesselEval> {
    check_args(nu, x)?;
    let (i, _, err, m) = i_and_derivative(nu, x);
    Ok(BesselEval::from_scaled(i, err, m))
}

/// Modified Bessel function of the second kind.
pub fn bessel_k(nu: f64, x: f64) -> Result<BesselEval> {
    check_args(nu, x)?;
    let (k, _, err, m) = k_and_derivative(nu, x);
    Ok(BesselEval::from_scaled(k, err, m))
}

/// d/dx I_nu(x).
pub fn bessel_i_dr(nu: f64, x: f64) -> Result<BesselEval> {
    check_args(nu, x)?;
    let (_, ip, err, m) = i_and_derivative(nu, x);
    Ok(BesselEval::from_scaled(ip, 2.0 * err, m))
}

/// d/dx K_nu(x).
pub fn bessel_k_dr(nu: f64, x: f64) -> Result<BesselEval> {
    check_args(nu, x)?;
    let (_, kp, err, m) = k_and_derivative(nu, x);
    Ok(BesselEval::from_scaled(kp, 2.0 * err, m))
}

/// Residual of the Wronskian identity I K' - I' K = -1/x, scaled by x.
pub fn wronskian_residual(nu: f64, x: f64) -> Result<f64> {
    let v = bessel_ik(nu, x)?;
    let w = v.i.mul(v.kp).add(v.ip.mul(v.k).neg());
    Ok((w.to_f64() * x + 1.0).abs())
}
