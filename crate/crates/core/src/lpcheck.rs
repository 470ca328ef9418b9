//! Schur/Mellin analysis of homogeneous radial kernels and a discretized
//! L^p operator-norm probe.
//!
//! Kernels act on L^p((0, inf), r^{d-1} dr). A homogeneous kernel of degree
//! -d is written K(r, r') = r'^{-d} k(r/r').

use crate::error::{ConeError, Result};
use crate::riesz::{riesz_radial_piece, OffDiagRegion, PInterval, ThresholdBasis};
use crate::spectrum::CrossSectionSpectrum;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Triangle {
    /// r <= r'
    Lower,
    /// r > r'
    Upper,
}

/// K(r, r') = r^-alpha r'^-beta on one triangle, alpha + beta = d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HomogeneousKernelSpec {
    pub alpha: f64,
    pub beta: f64,
    pub region: Triangle,
    pub d: usize,
}

impl HomogeneousKernelSpec {
    pub fn new(d: usize, alpha: f64, region: Triangle) -> Result<Self> {
        if d < 1 || !alpha.is_finite() {
            return Err(ConeError::InvalidParameter(format!("bad kernel spec d={d}, alpha={alpha}")));
        }
        Ok(HomogeneousKernelSpec { alpha, beta: d as f64 - alpha, region, d })
    }

    /// Profile k(s) = s^-alpha on the triangle, 0 elsewhere.
    pub fn profile(&self, s: f64) -> f64 {
        let inside = match self.region {
            Triangle::Lower => s <= 1.0,
            Triangle::Upper => s > 1.0,
        };
        if inside {
            s.powf(-self.alpha)
        } else {
            0.0
        }
    }

    pub fn descriptor(&self) -> String {
        format!(
            "model d={} alpha={} beta={} {}",
            self.d,
            crate::report::fmt_sig(self.alpha),
            crate::report::fmt_sig(self.beta),
            match self.region {
                Triangle::Lower => "lower",
                Triangle::Upper => "upper",
            }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchurResult {
    pub bounded: bool,
    /// L^1 norm of the log-variable convolution kernel; +inf when unbounded.
    pub l1_norm: f64,
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(ConeError::InvalidParameter(format!("p must lie in (1, inf), got {p}")));
    }
    Ok(())
}

/// In log variables the kernel is the convolution e^{(d/p - alpha) t} on
/// t <= 0 (lower) or t > 0 (upper); bounded iff that is integrable.
pub fn schur_bounded(spec: &HomogeneousKernelSpec, p: f64) -> Result<SchurResult> {
    check_p(p)?;
    let d = spec.d as f64;
    let rate = d / p - spec.alpha;
    let (bounded, norm) = match spec.region {
        Triangle::Lower => {
            let ok = spec.beta > 0.0 && rate > 0.0;
            (ok, 1.0 / rate)
        }
        Triangle::Upper => {
            let ok = spec.alpha > 0.0 && rate < 0.0;
            (ok, -1.0 / rate)
        }
    };
    Ok(SchurResult { bounded, l1_norm: if bounded { norm } else { f64::INFINITY } })
}

/// p-range on which both model pieces of T are bounded: the near-cone piece
/// (lower, alpha = d/2 - mu0) and the far-cone piece (upper, alpha = 1 + d/2 + mu0).
pub fn riesz_model_intervals(d: usize, mu0: f64) -> Result<PInterval> {
    if !(mu0 > 0.0) || !mu0.is_finite() || d < 3 {
        return Err(ConeError::InvalidParameter(format!("need d >= 3 and mu0 > 0, got d={d}, mu0={mu0}")));
    }
    let df = d as f64;
    let near = HomogeneousKernelSpec::new(d, df / 2.0 - mu0, Triangle::Lower)?;
    let far = HomogeneousKernelSpec::new(d, 1.0 + df / 2.0 + mu0, Triangle::Upper)?;
    // lower: p < d / max(alpha, 0); upper: p > d / min(alpha, d)
    let p_hi = if near.alpha > 0.0 { df / near.alpha } else { f64::INFINITY };
    let p_lo = df / far.alpha.min(df);
    Ok(PInterval { p_lo, p_hi, basis: ThresholdBasis::GeneralPotential })
}

/// Where probe kernels come from.
#[derive(Debug, Clone, Copy)]
pub enum KernelSource<'a> {
    Model(HomogeneousKernelSpec),
    /// Radial (angle-averaged) piece of T on the near-cone or far-cone region.
    Riesz {
        spectrum: &'a CrossSectionSpectrum,
        region: OffDiagRegion,
    },
}

impl<'a> KernelSource<'a> {
    fn d(&self) -> usize {
        match self {
            KernelSource::Model(s) => s.d,
            KernelSource::Riesz { spectrum, .. } => spectrum.d(),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            KernelSource::Model(s) => s.descriptor(),
            KernelSource::Riesz { spectrum, region } => format!(
                "riesz {} d={} mu0={} v0={}",
                region.label(),
                spectrum.d(),
                crate::report::fmt_sig(spectrum.mu0()),
                spectrum.v0.label()
            ),
        }
    }

    /// |k(s)| for each requested ratio. Riesz pieces use |K|, which has the
    /// same norm as K when K keeps one sign.
    fn profiles(&self, ratios: &[f64]) -> Result<Vec<f64>> {
        match self {
            KernelSource::Model(s) => Ok(ratios.iter().map(|&r| s.profile(r).abs()).collect()),
            KernelSource::Riesz { spectrum, region } => ratios
                .par_iter()
                .map(|&s| {
                    let inside = match region {
                        OffDiagRegion::T2 => s <= 0.25,
                        OffDiagRegion::T3 => s >= 4.0,
                    };
                    if inside {
                        Ok(riesz_radial_piece(spectrum, s, 1.0, 1e-8)?.abs())
                    } else {
                        Ok(0.0)
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Stable,
    Growing,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormProbeResult {
    pub p: f64,
    /// Domains are [2^-k, 2^k].
    #[serde(rename = "k_list")]
    pub domain_halfwidth_exponents: Vec<u32>,
    #[serde(rename = "norms")]
    pub norm_estimates: Vec<f64>,
    pub verdict: Verdict,
    pub kernel_descriptor: String,
    pub converged: Vec<bool>,
    pub iterations: Vec<usize>,
    /// last/first ratio above which a monotone sequence counts as growing.
    pub growth_factor: f64,
    /// max/min ratio below which the sequence counts as stable.
    pub stable_factor: f64,
}

pub const GROWTH_FACTOR: f64 = 4.0;
pub const STABLE_FACTOR: f64 = 1.5;
const PROBE_TOL: f64 = 1e-6;
const PROBE_MAX_ITER: usize = 200;

/// sign(v) |v|^(q-1), scaled by the max entry first.
fn duality_map(v: &[f64], q: f64) -> Vec<f64> {
    let m = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if m == 0.0 {
        return vec![0.0; v.len()];
    }
    v.iter().map(|x| x.signum() * (x.abs() / m).powf(q - 1.0)).collect()
}

fn p_norm(v: &[f64], p: f64) -> f64 {
    let m = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if m == 0.0 {
        return 0.0;
    }
    m * v.iter().map(|x| (x.abs() / m).powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Operator norm on l^p of the Toeplitz matrix B_ij = t[i - j + n - 1] by the
/// dual-map power iteration. Returns (estimate, converged, iterations).
fn toeplitz_pp_norm(t: &[f64], n: usize, p: f64) -> (f64, bool, usize) {
    let q = p / (p - 1.0);
    let apply = |x: &[f64], transpose: bool| -> Vec<f64> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let off = if transpose { j + n - 1 - i } else { i + n - 1 - j };
                        t[off] * x[j]
                    })
                    .sum()
            })
            .collect()
    };
    let mut x = vec![1.0; n];
    let nx = p_norm(&x, p);
    x.iter_mut().for_each(|v| *v /= nx);
    let mut prev = 0.0;
    for it in 1..=PROBE_MAX_ITER {
        let y = apply(&x, false);
        let est = p_norm(&y, p);
        if est == 0.0 {
            return (0.0, true, it);
        }
        if it > 1 && (est - prev).abs() <= PROBE_TOL * est {
            return (est, true, it);
        }
        prev = est;
        let z = apply(&duality_map(&y, p), true);
        x = duality_map(&z, q);
        let nx = p_norm(&x, p);
        if nx == 0.0 {
            return (est, false, it);
        }
        x.iter_mut().for_each(|v| *v /= nx);
    }
    (prev, false, PROBE_MAX_ITER)
}

/// Estimate the L^p norm of the radial operator restricted to [2^-k, 2^k] on
/// a log grid with `grid_per_decade` points per decade, for each k.
pub fn lp_norm_probe(
    source: &KernelSource,
    p: f64,
    domain_exponents: &[u32],
    grid_per_decade: usize,
) -> Result<NormProbeResult> {
    check_p(p)?;
    if domain_exponents.is_empty() || grid_per_decade == 0 {
        return Err(ConeError::InvalidParameter("need domain exponents and a positive grid density".into()));
    }
    let d = source.d() as f64;
    let h = std::f64::consts::LN_10 / grid_per_decade as f64;
    let sizes: Vec<usize> = domain_exponents
        .iter()
        .map(|&k| ((2.0 * k as f64 * std::f64::consts::LN_2) / h).round().max(1.0) as usize)
        .collect();
    let n_max = *sizes.iter().max().unwrap();
    // Toeplitz symbol: B_ij = h k(s) s^(d/p), s = e^{(i-j) h}; the diagonal
    // cell gets half weight
    let offsets: Vec<i64> = (-(n_max as i64) + 1..n_max as i64).collect();
    let ratios: Vec<f64> = offsets.iter().map(|&o| (o as f64 * h).exp()).collect();
    let prof = source.profiles(&ratios)?;
    let symbol: BTreeMap<i64, f64> = offsets
        .iter()
        .zip(ratios.iter().zip(&prof))
        .map(|(&o, (&s, &k))| {
            let w = if o == 0 { 0.5 * h } else { h };
            (o, w * k * s.powf(d / p))
        })
        .collect();
    let mut norms = Vec::with_capacity(sizes.len());
    let mut converged = Vec::with_capacity(sizes.len());
    let mut iterations = Vec::with_capacity(sizes.len());
    for &n in &sizes {
        let t: Vec<f64> = (-(n as i64) + 1..n as i64).map(|o| symbol[&o]).collect();
        let (est, ok, it) = toeplitz_pp_norm(&t, n, p);
        norms.push(est);
        converged.push(ok);
        iterations.push(it);
    }
    let verdict = judge(&norms, &converged);
    Ok(NormProbeResult {
        p,
        domain_halfwidth_exponents: domain_exponents.to_vec(),
        norm_estimates: norms,
        verdict,
        kernel_descriptor: source.descriptor(),
        converged,
        iterations,
        growth_factor: GROWTH_FACTOR,
        stable_factor: STABLE_FACTOR,
    })
}

fn judge(norms: &[f64], converged: &[bool]) -> Verdict {
    if converged.iter().any(|c| !c) || norms.iter().any(|x| !x.is_finite()) {
        return Verdict::Inconclusive;
    }
    let first = norms[0];
    let last = *norms.last().unwrap();
    let monotone = norms.windows(2).all(|w| w[1] >= w[0]);
    let lo = norms.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = norms.iter().cloned().fold(0.0, f64::max);
    if monotone && last > GROWTH_FACTOR * first {
        Verdict::Growing
    } else if hi <= STABLE_FACTOR * lo {
        Verdict::Stable
    } else {
        Verdict::Inconclusive
    }
}

/// Probe a (p, k) sweep in parallel; results in input order.
pub fn lp_norm_probe_sweep(
    source: &KernelSource,
    ps: &[f64],
    domain_exponents: &[u32],
    grid_per_decade: usize,
) -> Result<Vec<NormProbeResult>> {
    ps.par_iter().map(|&p| lp_norm_probe(source, p, domain_exponents, grid_per_decade)).collect()
}
