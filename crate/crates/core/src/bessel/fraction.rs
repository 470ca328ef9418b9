//! Temme series, Steed's continued fraction and forward recurrence for K_nu;
//! continued fraction plus Wronskian closure for I_nu.

use super::scaled::Scaled;
use crate::special::temme_gammas;
use std::f64::consts::PI;

const EPS: f64 = 1e-17;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;

/// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, as (k0, k1, ln_factor) with the
/// true values k * e^ln_factor (Steed's branch leaves out e^-x).
pub(crate) fn k_fractional(xmu: f64, x: f64) -> (f64, f64, f64) {
    if x <= 2.0 {
        let (k0, k1) = k_temme(xmu, x);
        (k0, k1, 0.0)
    } else {
        let (k0, k1) = k_steed_scaled(xmu, x);
        (k0, k1, -x)
    }
}

fn k_temme(xmu: f64, x: f64) -> (f64, f64) {
    let xmu2 = xmu * xmu;
    let x2 = 0.5 * x;
    let pimu = PI * xmu;
    let fact = if pimu.abs() < 1e-12 { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = xmu * d;
    let fact2 = if e.abs() < 1e-12 { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = x2 * x2;
    let mut sum1 = p;
    let mut i = 1.0;
    loop {
        ff = (i * ff + p + q) / (i * i - xmu2);
        c *= dd / i;
        p /= i - xmu;
        q /= i + xmu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - i * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * EPS || i > 500.0 {
            break;
        }
        i += 1.0;
    }
    (sum, sum1 * 2.0 / x)
}

fn k_steed_scaled(xmu: f64, x: f64) -> (f64, f64) {
    let xmu2 = xmu * xmu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - xmu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAXIT {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let kmu = (PI / (2.0 * x)).sqrt() / s;
    let k1 = kmu * (xmu + x + 0.5 - h) / x;
    (kmu, k1)
}

/// K_nu(x), K_{nu+1}(x) by upward recurrence from the fractional order.
/// Returns scaled values and the number of recurrence steps.
pub(crate) fn k_pair(nu: f64, x: f64) -> (Scaled, Scaled, usize) {
    let nl = (nu + 0.5).floor() as usize;
    let xmu = nu - nl as f64;
    let (mut k0, mut k1, ln_factor) = k_fractional(xmu, x);
    let mut exp2 = 0i32;
    let xi2 = 2.0 / x;
    for i in 1..=nl {
        let k2 = (xmu + i as f64) * xi2 * k1 + k0;
        k0 = k1;
        k1 = k2;
        if k1.abs() > 1e250 {
            k0 = libm::ldexp(k0, -800);
            k1 = libm::ldexp(k1, -800);
            exp2 += 800;
        }
    }
    let factor = Scaled::from_ln(ln_factor, 1.0);
    (Scaled::new(k0).shift(exp2).mul(factor), Scaled::new(k1).shift(exp2).mul(factor), nl)
}

/// I'_nu(x)/I_nu(x) by the modified Lentz method.
fn i_log_derivative(nu: f64, x: f64) -> f64 {
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let mut h = nu * xi;
    if h < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 1..MAXIT {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// I_nu(x) and I'_nu(x) from the continued fraction for I'/I, downward
/// recurrence to the fractional order, and the Wronskian with K.
/// Intended for moderate nu (no overflow in the unnormalised recurrence).
pub(crate) fn i_wronskian(nu: f64, x: f64) -> (Scaled, Scaled) {
    let nl = (nu + 0.5).floor() as usize;
    let xmu = nu - nl as f64;
    let xi = 1.0 / x;
    let h = i_log_derivative(nu, x);
    let mut ril = FPMIN;
    let mut ripl = h * ril;
    let ril1 = ril;
    let rip1 = ripl;
    let mut fact = nu * xi;
    for _ in (1..=nl).rev() {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    let f = ripl / ril;
    let (kmu, k1, ln_factor) = k_fractional(xmu, x);
    let kmup = xmu * xi * kmu - k1;
    let imu = xi / (f * kmu - kmup);
    let i = imu * ril1 / ril;
    let ip = imu * rip1 / ril;
    let factor = Scaled::from_ln(-ln_factor, 1.0);
    (Scaled::new(i).mul(factor), Scaled::new(ip).mul(factor))
}
