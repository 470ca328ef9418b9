//! Uniform-in-order bounds for I_mu and K_mu, checked on grids.

use super::{i_and_derivative, k_and_derivative};
use crate::report::{fmt_sig, SCHEMA_HEADER};
use crate::special::lgamma;
use serde::Serialize;
use std::f64::consts::LN_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// I_mu(r) <= C 2^-mu r^mu / Gamma(mu+1/2), r <= 1
    ISmall,
    /// I_mu(r) <= C 2^-mu r^(mu-1) e^r / Gamma(mu+1/2), r >= 1
    ILarge,
    /// K_mu(r) <= C 2^-mu r^-mu Gamma(2 mu) / Gamma(mu+1/2), r <= 1
    KSmall,
    /// K_mu(r) <= C e^(-r/2) r^-mu 2^(2 mu) Gamma(mu), r >= 1
    KLarge,
    /// I_mu(r) K_mu(r') against the three-branch decay model, r' >= 4r
    ExpVanishing,
}

impl BoundId {
    pub fn label(self) -> &'static str {
        match self {
            BoundId::ISmall => "i-small",
            BoundId::ILarge => "i-large",
            BoundId::KSmall => "k-small",
            BoundId::KLarge => "k-large",
            BoundId::ExpVanishing => "exp-vanishing",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub bound_id: BoundId,
    /// Smallest constant making the bound hold on the grid.
    pub c_fit: f64,
    /// Sup of the ratio over the largest third of the order grid divided by
    /// the sup over the remaining orders. Values above 1 mean the ratio is
    /// still growing with the order at the edge of the grid.
    pub max_violation_ratio: f64,
    pub grid: String,
    pub samples: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn row(&self, id: BoundId) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.bound_id == id)
    }

    /// CSV with columns bound_id, C_fit, max_violation_ratio, grid.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(SCHEMA_HEADER);
        out.push('\n');
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["bound_id", "C_fit", "max_violation_ratio", "grid"]).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.bound_id.label().to_string(),
                fmt_sig(r.c_fit),
                fmt_sig(r.max_violation_ratio),
                r.grid.clone(),
            ])
            .expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf8"));
        out
    }
}

fn ln_i(mu: f64, r: f64) -> f64 {
    i_and_derivative(mu, r).0.ln_abs()
}

fn ln_k(mu: f64, r: f64) -> f64 {
    k_and_derivative(mu, r).0.ln_abs()
}

/// Log of the model right-hand side (without C) for the single-argument bounds.
fn ln_model(id: BoundId, mu: f64, r: f64) -> f64 {
    let g_half = lgamma(mu + 0.5);
    match id {
        BoundId::ISmall => -mu * LN_2 + mu * r.ln() - g_half,
        BoundId::ILarge => -mu * LN_2 + (mu - 1.0) * r.ln() + r - g_half,
        BoundId::KSmall => -mu * LN_2 - mu * r.ln() + lgamma(2.0 * mu) - g_half,
        BoundId::KLarge => -0.5 * r - mu * r.ln() + 2.0 * mu * LN_2 + lgamma(mu),
        BoundId::ExpVanishing => unreachable!("two-point bound"),
    }
}

/// Log of the three-branch decay model for I_mu(r) K_mu(rp), r <= rp/4.
pub fn ln_exp_vanishing_model(mu: f64, r: f64, rp: f64) -> f64 {
    if rp <= 1.0 {
        mu * (r / rp).ln()
    } else if r <= 1.0 {
        mu * (2.0 * r / rp).ln() - 0.5 * rp
    } else {
        mu * (2.0 * r / rp).ln() - 0.25 * rp
    }
}

/// Allowed growth of the sup ratio between the lower and upper orders.
pub const DRIFT_TOLERANCE: f64 = 1e-6;

fn summarize(id: BoundId, ratios: &[(f64, f64)], mus: &[f64], grid: String) -> BoundRow {
    // ratios: (mu, ln ratio)
    let mu_split = {
        let mut m: Vec<f64> = mus.to_vec();
        m.sort_by(|a, b| a.partial_cmp(b).unwrap());
        m[(2 * m.len()) / 3]
    };
    let mut sup = f64::NEG_INFINITY;
    let mut sup_hi = f64::NEG_INFINITY;
    let mut sup_lo = f64::NEG_INFINITY;
    for &(mu, lr) in ratios {
        sup = sup.max(lr);
        if mu >= mu_split {
            sup_hi = sup_hi.max(lr);
        } else {
            sup_lo = sup_lo.max(lr);
        }
    }
    let c_fit = sup.exp();
    let max_violation_ratio = if sup_lo.is_finite() { (sup_hi - sup_lo).exp() } else { 1.0 };
    // A ratio saturating at its limit (K-small tends to sqrt(pi) from below)
    // still creeps up by ~1e-9; any growth in mu that would make the constant
    // order-dependent shows up as a factor well above 1 + 1e-6 over the top third.
    let pass = !ratios.is_empty() && c_fit.is_finite() && c_fit > 0.0 && max_violation_ratio <= 1.0 + DRIFT_TOLERANCE;
    BoundRow { bound_id: id, c_fit, max_violation_ratio, grid, samples: ratios.len(), pass }
}

/// Fit the smallest constant for each bound on the given grids.
///
/// Orders below 1/2 are skipped. Radii are split at 1 for the small/large
/// bounds; the two-point bound uses all pairs with r' >= 4r.
pub fn check_bessel_bounds(mu_grid: &[f64], r_grid: &[f64]) -> BoundReport {
    let mus: Vec<f64> = mu_grid.iter().copied().filter(|&m| m >= 0.5).collect();
    let rs: Vec<f64> = r_grid.iter().copied().filter(|&r| r > 0.0).collect();
    let describe = |rsel: &[f64]| {
        let (lo, hi) = rsel.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &r| (a.min(r), b.max(r)));
        format!(
            "mu in [{}, {}] x {} orders; r in [{}, {}] x {} points",
            fmt_sig(mus.first().copied().unwrap_or(f64::NAN)),
            fmt_sig(mus.last().copied().unwrap_or(f64::NAN)),
            mus.len(),
            fmt_sig(lo),
            fmt_sig(hi),
            rsel.len()
        )
    };
    let small: Vec<f64> = rs.iter().copied().filter(|&r| r <= 1.0).collect();
    let large: Vec<f64> = rs.iter().copied().filter(|&r| r >= 1.0).collect();
    let mut rows = Vec::new();
    for (id, rsel, is_i) in [
        (BoundId::ISmall, &small, true),
        (BoundId::ILarge, &large, true),
        (BoundId::KSmall, &small, false),
        (BoundId::KLarge, &large, false),
    ] {
        let mut ratios = Vec::new();
        for &mu in &mus {
            for &r in rsel.iter() {
                let lv = if is_i { ln_i(mu, r) } else { ln_k(mu, r) };
                ratios.push((mu, lv - ln_model(id, mu, r)));
            }
        }
        rows.push(summarize(id, &ratios, &mus, describe(rsel)));
    }
    let mut ratios = Vec::new();
    let mut pairs = 0usize;
    for &mu in &mus {
        for &r in &rs {
            for &rp in &rs {
                if rp >= 4.0 * r {
                    let lv = ln_i(mu, r) + ln_k(mu, rp);
                    ratios.push((mu, lv - ln_exp_vanishing_model(mu, r, rp)));
                    pairs += 1;
                }
            }
        }
    }
    let grid = format!("{}; pairs with r' >= 4r: {}", describe(&rs), pairs / mus.len().max(1));
    rows.push(summarize(BoundId::ExpVanishing, &ratios, &mus, grid));
    BoundReport { rows }
}

/// Relative residual of Gamma(2mu) = 2^(2mu-1)/sqrt(pi) Gamma(mu) Gamma(mu+1/2).
pub fn gamma_duplication_residual(mu: f64) -> f64 {
    use crate::special::tgamma;
    let lhs = tgamma(2.0 * mu);
    let rhs = (2.0f64).powf(2.0 * mu - 1.0) / std::f64::consts::PI.sqrt() * tgamma(mu) * tgamma(mu + 0.5);
    ((lhs - rhs) / lhs).abs()
}
