//! Resolvent kernels (H + lambda^2)^{-1}(z, z') by the eigenfunction-Bessel
//! series, with explicit truncation bounds, gradients, and the small-radius
//! (indicial) limit.
//!
//! Riemannian gauge: G(z, z') = (r r')^{1-d/2} sum_j P_j(y, y') I_mu_j(r<) K_mu_j(r>).
//! The b-half gauge drops the (r r')^{1-d/2} prefactor.
//!
//! Truncation: for a < b and nu > 0, I_nu(a) K_nu(b) <= (a/b)^nu / (2 nu)
//! (integral representation of the product with |J_0| <= 1). Remaining terms
//! are bounded by that inequality mode by mode inside the table and by a
//! Weyl-law majorant beyond the table cutoff.

use crate::bessel::{i_and_derivative, k_and_derivative};
use crate::config::Tolerances;
use crate::error::{ConeError, Result};
use crate::geometry::{ConePoint, CrossPoint};
use crate::report::{csv_with_header, fmt_sig};
use crate::spectrum::{CrossSectionSpectrum, PairValue};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityGauge {
    Riemannian,
    BHalf,
}

impl DensityGauge {
    pub fn label(self) -> &'static str {
        match self {
            DensityGauge::Riemannian => "riemannian",
            DensityGauge::BHalf => "b-half",
        }
    }
}

/// Factor converting a Riemannian-gauge kernel value into `to`.
pub fn gauge_factor(d: usize, r: f64, rp: f64, to: DensityGauge) -> f64 {
    match to {
        DensityGauge::Riemannian => 1.0,
        DensityGauge::BHalf => (r * rp).powf(d as f64 / 2.0 - 1.0),
    }
}

#[derive(Debug, Clone)]
pub struct ResolventRequest<'a> {
    pub spectrum: &'a CrossSectionSpectrum,
    pub z: ConePoint,
    pub zp: ConePoint,
    pub lambda: f64,
    pub rel_tol: f64,
    pub gauge: DensityGauge,
}

impl<'a> ResolventRequest<'a> {
    pub fn new(spectrum: &'a CrossSectionSpectrum, z: ConePoint, zp: ConePoint) -> Self {
        ResolventRequest {
            spectrum,
            z,
            zp,
            lambda: 1.0,
            rel_tol: Tolerances::default().series_rel_tol,
            gauge: DensityGauge::Riemannian,
        }
    }

    pub fn lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn gauge(mut self, gauge: DensityGauge) -> Self {
        self.gauge = gauge;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 0.1) {
            return Err(ConeError::InvalidParameter(format!("rel_tol must be in (0, 0.1], got {}", self.rel_tol)));
        }
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(ConeError::InvalidParameter(format!("lambda must be positive, got {}", self.lambda)));
        }
        let cs = &self.spectrum.geometry.cross_section;
        cs.validate(&self.z.y)?;
        cs.validate(&self.zp.y)?;
        if self.z == self.zp {
            return Err(ConeError::SingularPoint("z = z' lies on the diagonal".into()));
        }
        Ok(())
    }
}

/// Whether r>/r< reaches the certified ratio.
pub fn is_certified_region(r: f64, rp: f64) -> bool {
    r.max(rp) / r.min(rp) >= Tolerances::default().certified_ratio
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelValue {
    pub value: f64,
    pub tail_bound: f64,
    pub modes_used: usize,
    /// True in the certified region with tail_bound <= rel_tol |value|.
    /// Otherwise tail_bound is an empirical estimate.
    pub certified: bool,
}

/// Gradient in the left variable: (d/dr, r^-1 d/ds) with s arc length on Y
/// along the geodesic from y' to y.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GradientValue {
    pub d_r: f64,
    pub angular: f64,
    pub tail_bound_r: f64,
    pub tail_bound_angular: f64,
    pub modes_used: usize,
    pub certified: bool,
}

/// Which modes a series includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeSelection {
    All,
    /// Only mode j.
    Only(usize),
    /// Modes j, j+1, ...
    From(usize),
}

/// Output of one radial series evaluation (Riemannian gauge, lambda = 1).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct SeriesOut {
    pub value: f64,
    pub d_r: f64,
    pub angular: f64,
    pub tail_value: f64,
    pub tail_r: f64,
    pub tail_angular: f64,
    pub modes_used: usize,
    pub certified: bool,
}

/// Upper bound for int_m^inf x^p e^(-beta x) dx.
fn power_exp_tail(p: f64, beta: f64, m: f64) -> f64 {
    if m <= 0.0 {
        return crate::special::tgamma(p + 1.0) / beta.powf(p + 1.0);
    }
    if beta * m > p + 1.0 {
        // log-derivative p/x - beta <= p/m - beta < 0 on [m, inf)
        m.powf(p) * (-beta * m).exp() / (beta - p / m)
    } else {
        crate::special::tgamma(p + 1.0) / beta.powf(p + 1.0)
    }
}

struct TermBounds {
    value: Vec<f64>,
    d_r: Vec<f64>,
    angular: Vec<f64>,
    beyond_value: f64,
    beyond_r: f64,
    beyond_angular: f64,
}

/// Per-mode bounds on |term| (without the Riemannian prefactor) and the
/// majorant for modes above the table cutoff.
fn term_bounds(spec: &CrossSectionSpectrum, modes: &[usize], r: f64, s: f64, grad: bool) -> TermBounds {
    let d = spec.d() as f64;
    let c0 = (1.0 - d / 2.0).abs();
    let mut value = Vec::with_capacity(modes.len());
    let mut d_r = Vec::with_capacity(modes.len());
    let mut angular = Vec::with_capacity(modes.len());
    for &j in modes {
        let m = &spec.modes[j];
        let base = s.powf(m.mu) / (2.0 * m.mu);
        value.push(m.diag_bound * base);
        if grad {
            d_r.push(m.diag_bound * base * (c0 + r + m.mu) / r);
            angular.push(m.grad_bound * base / r);
        }
    }
    let beta = -s.ln();
    let mm = spec.mu_cutoff;
    let cw = spec.weyl_c;
    let (beyond_value, beyond_r, beyond_angular) = if beta > 0.0 && cw.is_finite() {
        let v = spec.diag_density * cw * 0.5 * (beta + 1.0 / mm) * power_exp_tail(d - 2.0, beta, mm);
        let (gr, ga) = if grad {
            let gr = spec.diag_density * cw / (2.0 * r)
                * (beta * power_exp_tail(d - 1.0, beta, mm)
                    + (c0 + r) * (beta + 1.0 / mm) * power_exp_tail(d - 2.0, beta, mm));
            let ga = spec.grad_density * cw * beta / (2.0 * r) * power_exp_tail(d - 1.0, beta, mm);
            (gr, ga)
        } else {
            (0.0, 0.0)
        };
        (v, gr, ga)
    } else {
        (f64::INFINITY, f64::INFINITY, f64::INFINITY)
    };
    TermBounds { value, d_r, angular, beyond_value, beyond_r, beyond_angular }
}

fn selected_modes(spec: &CrossSectionSpectrum, sel: ModeSelection) -> Vec<usize> {
    let n = spec.modes.len();
    match sel {
        ModeSelection::All => (0..n).collect(),
        ModeSelection::Only(j) => {
            if j < n {
                vec![j]
            } else {
                vec![]
            }
        }
        ModeSelection::From(j) => (j.min(n)..n).collect(),
    }
}

/// Sum the series at radii (r, rp) (already lambda-scaled) with given pair values.
/// `r` is the left variable.
pub(crate) fn radial_series(
    spec: &CrossSectionSpectrum,
    pairs: &[PairValue],
    r: f64,
    rp: f64,
    grad: bool,
    sel: ModeSelection,
    rel_tol: f64,
) -> SeriesOut {
    let d = spec.d() as f64;
    let a = r.min(rp);
    let b = r.max(rp);
    let left_small = r <= rp;
    let s = a / b;
    let certified_region = is_certified_region(r, rp);
    let pref = (r * rp).powf(1.0 - d / 2.0);
    let modes = selected_modes(spec, sel);
    let single = matches!(sel, ModeSelection::Only(_));
    let bounds = term_bounds(spec, &modes, r, s, grad);
    // suffix sums of bounds: tail after position i
    let n = modes.len();
    let suffix = |v: &[f64], beyond: f64| -> Vec<f64> {
        let mut out = vec![0.0; n + 1];
        out[n] = if single { 0.0 } else { beyond };
        for i in (0..n).rev() {
            out[i] = out[i + 1] + v[i];
        }
        out
    };
    let suf_v = suffix(&bounds.value, bounds.beyond_value);
    let (suf_r, suf_a) = if grad {
        (suffix(&bounds.d_r, bounds.beyond_r), suffix(&bounds.angular, bounds.beyond_angular))
    } else {
        (vec![0.0; n + 1], vec![0.0; n + 1])
    };
    let mut out = SeriesOut::default();
    let mut recent = [0.0f64; 3];
    for (pos, &j) in modes.iter().enumerate() {
        let mu = spec.modes[j].mu;
        let pv = pairs[j];
        let (ia, ipa, _, _) = i_and_derivative(mu, a);
        let (kb, kpb, _, _) = k_and_derivative(mu, b);
        let prod = ia.mul(kb).to_f64();
        let term = pref * pv.value * prod;
        out.value += term;
        let mut mag = term.abs();
        if grad {
            // derivative of r^(1-d/2) times the Bessel factor carrying r
            let dprod = if left_small { ipa.mul(kb).to_f64() } else { ia.mul(kpb).to_f64() };
            let dr = pref * pv.value * ((1.0 - d / 2.0) / r * prod + dprod);
            let ang = pref * pv.grad * prod / r;
            out.d_r += dr;
            out.angular += ang;
            mag = mag.max(dr.abs()).max(ang.abs());
        }
        out.modes_used = pos + 1;
        recent = [recent[1], recent[2], mag];
        if mu < 1.0 && pos + 1 < n {
            continue;
        }
        if s < 1.0 {
            let tv = pref * suf_v[pos + 1];
            let tr = pref * suf_r[pos + 1];
            let ta = pref * suf_a[pos + 1];
            let scale = if grad { out.d_r.hypot(out.angular) } else { out.value.abs() };
            let tail = if grad { tr.hypot(ta) } else { tv };
            let done = tail <= rel_tol * scale;
            if done || pos + 1 == n {
                out.tail_value = tv;
                out.tail_r = tr;
                out.tail_angular = ta;
                out.certified = done && certified_region;
                return out;
            }
        } else {
            // r = r': no geometric decay, empirical Cauchy stop
            let scale = if grad { out.d_r.hypot(out.angular) } else { out.value.abs() };
            let est = recent.iter().sum::<f64>();
            let tol = rel_tol * scale;
            if (pos >= 3 && est <= tol) || pos + 1 == n {
                out.tail_value = est;
                out.tail_r = est;
                out.tail_angular = est;
                out.certified = false;
                return out;
            }
        }
    }
    out.certified = single || n == 0;
    out
}

fn pairs_for(spec: &CrossSectionSpectrum, y: &CrossPoint, yp: &CrossPoint) -> Result<Vec<PairValue>> {
    spec.pair_table(y, yp)
}

/// Kernel of (H + lambda^2)^{-1} at (z, z').
pub fn resolvent_kernel(req: &ResolventRequest) -> Result<KernelValue> {
    resolvent_kernel_modes(req, ModeSelection::All)
}

/// As [`resolvent_kernel`] restricted to a subset of modes.
pub fn resolvent_kernel_modes(req: &ResolventRequest, sel: ModeSelection) -> Result<KernelValue> {
    req.validate()?;
    let spec = req.spectrum;
    let pairs = pairs_for(spec, &req.z.y, &req.zp.y)?;
    let lam = req.lambda;
    let (r, rp) = (req.z.r * lam, req.zp.r * lam);
    let out = radial_series(spec, &pairs, r, rp, false, sel, req.rel_tol);
    let scale = lam.powi(spec.d() as i32 - 2) * gauge_factor(spec.d(), req.z.r, req.zp.r, req.gauge);
    Ok(KernelValue {
        value: out.value * scale,
        tail_bound: out.tail_value * scale,
        modes_used: out.modes_used,
        certified: out.certified,
    })
}

/// Gradient in z of the Riemannian-gauge kernel of (H + lambda^2)^{-1}.
pub fn resolvent_gradient(req: &ResolventRequest) -> Result<GradientValue> {
    resolvent_gradient_modes(req, ModeSelection::All)
}

/// As [`resolvent_gradient`] restricted to a subset of modes.
pub fn resolvent_gradient_modes(req: &ResolventRequest, sel: ModeSelection) -> Result<GradientValue> {
    req.validate()?;
    if req.gauge != DensityGauge::Riemannian {
        return Err(ConeError::InvalidParameter("gradients are defined in the riemannian gauge".into()));
    }
    let spec = req.spectrum;
    let pairs = pairs_for(spec, &req.z.y, &req.zp.y)?;
    let lam = req.lambda;
    let out = radial_series(spec, &pairs, req.z.r * lam, req.zp.r * lam, true, sel, req.rel_tol);
    let scale = lam.powi(spec.d() as i32 - 1);
    Ok(GradientValue {
        d_r: out.d_r * scale,
        angular: out.angular * scale,
        tail_bound_r: out.tail_r * scale,
        tail_bound_angular: out.tail_angular * scale,
        modes_used: out.modes_used,
        certified: out.certified,
    })
}

/// Indicial kernel (1/2) sum_j mu_j^-1 P_j(y, y') s^(+-mu_j) in the b-half gauge.
pub fn indicial_kernel(spec: &CrossSectionSpectrum, s: f64, y: &CrossPoint, yp: &CrossPoint) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(ConeError::InvalidParameter(format!("s must be positive, got {s}")));
    }
    if s == 1.0 {
        return Err(ConeError::SingularPoint("indicial kernel is singular at s = 1".into()));
    }
    let t = if s < 1.0 { s } else { 1.0 / s };
    let pairs = pairs_for(spec, y, yp)?;
    let modes: Vec<usize> = (0..spec.modes.len()).collect();
    let bounds = term_bounds(spec, &modes, 1.0, t, false);
    let mut suffix = bounds.beyond_value;
    let mut suf = vec![0.0; modes.len() + 1];
    suf[modes.len()] = suffix;
    for i in (0..modes.len()).rev() {
        suffix += bounds.value[i];
        suf[i] = suffix;
    }
    let mut sum = 0.0;
    for (pos, m) in spec.modes.iter().enumerate() {
        sum += 0.5 / m.mu * pairs[pos].value * t.powf(m.mu);
        if suf[pos + 1] <= 1e-15 * sum.abs() {
            break;
        }
    }
    Ok(sum)
}

/// One row of a compatibility sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CompatibilityRow {
    pub r_prime: f64,
    pub ratio: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompatibilityReport {
    pub s: f64,
    pub rows: Vec<CompatibilityRow>,
    /// Fitted exponent of |ratio - 1| in r' over the smallest radii.
    pub rate_exponent: f64,
    pub indicial: f64,
}

impl CompatibilityReport {
    /// Deviation |ratio - 1| at the sampled r' closest to `r_prime`.
    pub fn deviation_at(&self, r_prime: f64) -> f64 {
        self.rows
            .iter()
            .min_by(|a, b| (a.r_prime.ln() - r_prime.ln()).abs().total_cmp(&(b.r_prime.ln() - r_prime.ln()).abs()))
            .map(|r| r.deviation)
            .unwrap_or(f64::NAN)
    }
}

/// Least-squares slope of y against x.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Compare the b-half resolvent at r = s r' with the indicial kernel as r' -> 0.
pub fn zf_compatibility_check(
    spec: &CrossSectionSpectrum,
    s: f64,
    y: &CrossPoint,
    yp: &CrossPoint,
) -> Result<CompatibilityReport> {
    if !(s > 0.0 && s <= 0.25) {
        return Err(ConeError::InvalidParameter(format!("need 0 < s <= 1/4, got {s}")));
    }
    let ind = indicial_kernel(spec, s, y, yp)?;
    let mut rows = Vec::new();
    for k in 0..=12 {
        let rp = 10f64.powf(-1.0 - 0.25 * k as f64);
        let z = ConePoint::new(s * rp, y.clone())?;
        let zp = ConePoint::new(rp, yp.clone())?;
        let v = resolvent_kernel(&ResolventRequest::new(spec, z, zp).rel_tol(1e-14).gauge(DensityGauge::BHalf))?;
        let ratio = v.value / ind;
        rows.push(CompatibilityRow { r_prime: rp, ratio, deviation: (ratio - 1.0).abs() });
    }
    // fit over r' in [1e-4, 1e-2.5]
    let fit: Vec<&CompatibilityRow> = rows.iter().filter(|r| r.r_prime <= 10f64.powf(-2.49)).collect();
    let xs: Vec<f64> = fit.iter().map(|r| r.r_prime.ln()).collect();
    let ys: Vec<f64> = fit.iter().map(|r| r.deviation.max(1e-300).ln()).collect();
    Ok(CompatibilityReport { s, rows, rate_exponent: fit_slope(&xs, &ys), indicial: ind })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Face {
    /// r, r' -> 0 together.
    Zf,
    /// r -> 0 with r' fixed.
    Lbz,
    /// r' -> 0 with r fixed.
    Rbz,
    /// r' -> infinity with r fixed.
    Rbi,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryProbe {
    pub face: Face,
    /// Log-log slope over the last window of the path.
    pub slope: f64,
    /// Predicted exponent, when finite.
    pub expected: Option<f64>,
    /// (path parameter, local slope) along the path.
    pub slopes: Vec<(f64, f64)>,
    /// For rbi: local slopes keep decreasing.
    pub superpolynomial: bool,
}

/// Log-log slope of |G| (Riemannian gauge, lambda = 1) along a path into `face`.
pub fn boundary_order_probe(
    spec: &CrossSectionSpectrum,
    face: Face,
    y: &CrossPoint,
    yp: &CrossPoint,
) -> Result<BoundaryProbe> {
    let d = spec.d() as f64;
    let mu0 = spec.mu0();
    let eval = |r: f64, rp: f64| -> Result<f64> {
        let z = ConePoint::new(r, y.clone())?;
        let zp = ConePoint::new(rp, yp.clone())?;
        Ok(resolvent_kernel(&ResolventRequest::new(spec, z, zp).rel_tol(1e-13))?.value.abs())
    };
    let (path, expected): (Box<dyn Fn(f64) -> (f64, f64)>, Option<f64>) = match face {
        Face::Zf => (Box::new(|e| (0.25 * e, e)), Some(2.0 - d)),
        Face::Lbz => (Box::new(|e| (0.25 * e, 1.0)), Some(1.0 - d / 2.0 + mu0)),
        Face::Rbz => (Box::new(|e| (1.0, 0.25 * e)), Some(1.0 - d / 2.0 + mu0)),
        Face::Rbi => (Box::new(|e| (1.0, 4.0 / e)), None),
    };
    let eps: Vec<f64> = match face {
        Face::Rbi => (0..=8).map(|k| 2f64.powi(-k)).collect(),
        _ => (0..=16).map(|k| 10f64.powf(-0.5 * k as f64)).collect(),
    };
    let mut logs = Vec::new();
    for &e in &eps {
        let (r, rp) = path(e);
        logs.push((e.ln(), eval(r, rp)?.ln()));
    }
    let slopes: Vec<(f64, f64)> =
        logs.windows(2).map(|w| (w[1].0.exp(), (w[1].1 - w[0].1) / (w[1].0 - w[0].0))).collect();
    // rbi decays in 1/e: report slope against log(r') = -log(e)
    let (slope, slopes, superpolynomial) = if face == Face::Rbi {
        let s: Vec<(f64, f64)> = slopes.iter().map(|&(e, sl)| (e, -sl)).collect();
        let decreasing = s.windows(2).all(|w| w[1].1 < w[0].1);
        (s.last().unwrap().1, s, decreasing)
    } else {
        (slopes.last().unwrap().1, slopes, false)
    };
    Ok(BoundaryProbe { face, slope, expected, slopes, superpolynomial })
}

/// One row of a kernel sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KernelSweepRow {
    pub r: f64,
    pub r_prime: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub value: KernelValue,
    pub gauge: DensityGauge,
}

/// CSV with columns r, r_prime, gamma, lambda, value, tail_bound, modes_used, gauge.
pub fn kernel_sweep_csv(rows: &[KernelSweepRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                fmt_sig(r.r),
                fmt_sig(r.r_prime),
                fmt_sig(r.gamma),
                fmt_sig(r.lambda),
                fmt_sig(r.value.value),
                fmt_sig(r.value.tail_bound),
                r.value.modes_used.to_string(),
                r.gauge.label().to_string(),
            ]
        })
        .collect();
    csv_with_header(&["r", "r_prime", "gamma", "lambda", "value", "tail_bound", "modes_used", "gauge"], &body)
}

/// Residual of (H + 1) G(., z') at z by a five-point stencil in (r, gamma),
/// divided by the largest |term| of the stencil. Sphere cross-sections with
/// constant potential only (zonal dependence on gamma).
pub fn pde_residual(spec: &CrossSectionSpectrum, r: f64, gamma: f64, rp: f64, h: f64) -> Result<f64> {
    let (dim, radius) = match spec.geometry.cross_section {
        crate::geometry::CrossSection::Sphere { dim, radius } => (dim, radius),
        _ => return Err(ConeError::UnsupportedCrossSection("residual check needs a sphere".into())),
    };
    let c = spec
        .constant_potential()
        .ok_or_else(|| ConeError::UnsupportedCrossSection("residual check needs a constant potential".into()))?;
    let d = spec.d() as f64;
    let yp = CrossPoint::sphere_pole(dim);
    let g = |rr: f64, gg: f64| -> Result<f64> {
        let z = ConePoint::new(rr, CrossPoint::sphere_at_angle(dim, gg))?;
        let zp = ConePoint::new(rp, yp.clone())?;
        Ok(resolvent_kernel(&ResolventRequest::new(spec, z, zp).rel_tol(1e-14))?.value)
    };
    let g0 = g(r, gamma)?;
    let grp = g(r + h, gamma)?;
    let grm = g(r - h, gamma)?;
    let ggp = g(r, gamma + h)?;
    let ggm = g(r, gamma - h)?;
    let g_rr = (grp - 2.0 * g0 + grm) / (h * h);
    let g_r = (grp - grm) / (2.0 * h);
    let g_tt = (ggp - 2.0 * g0 + ggm) / (h * h);
    let g_t = (ggp - ggm) / (2.0 * h);
    // Laplacian on the sphere of radius a for a zonal function of the angle
    let lap_y = -(g_tt + (dim as f64 - 1.0) * gamma.cos() / gamma.sin() * g_t) / (radius * radius);
    let terms = [-g_rr, -(d - 1.0) / r * g_r, lap_y / (r * r), c / (r * r) * g0, g0];
    let scale = terms.iter().map(|t| t.abs()).fold(0.0, f64::max);
    Ok(terms.iter().sum::<f64>().abs() / scale)
}
