//! Riesz transform T = grad H^{-1/2}: exact L^p intervals and the kernel
//!
//!   T(z, z') = (2/pi) int_0^inf lambda^{d-1} (grad G)(lambda z, lambda z') d lambda
//!
//! assembled by adaptive quadrature over lambda.

use crate::config::Tolerances;
use crate::error::{ConeError, Result};
use crate::geometry::{ConePoint, CrossPoint};
use crate::quadrature::integrate;
use crate::report::{csv_with_header, fmt_sig};
use crate::resolvent::{is_certified_region, radial_series, ModeSelection};
use crate::spectrum::{hardy_shift, CrossSectionSpectrum, PairValue};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdBasis {
    GeneralPotential,
    ZeroPotential,
    ConstantPotential,
}

/// Open interval (p_lo, p_hi) of exponents; p_hi may be +inf.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PInterval {
    pub p_lo: f64,
    pub p_hi: f64,
    pub basis: ThresholdBasis,
}

impl PInterval {
    pub fn contains(&self, p: f64) -> bool {
        p > self.p_lo && p < self.p_hi
    }
}

fn check_dim(d: usize) -> Result<f64> {
    if d < 3 {
        return Err(ConeError::InvalidParameter(format!("cone dimension must be >= 3, got {d}")));
    }
    Ok(d as f64)
}

/// d / x with x <= 0 read as +inf.
fn ratio_or_inf(d: f64, x: f64) -> f64 {
    if x > 0.0 {
        d / x
    } else {
        f64::INFINITY
    }
}

/// Interval for a general potential with bottom exponent `mu0`.
pub fn threshold_interval(d: usize, mu0: f64) -> Result<PInterval> {
    let df = check_dim(d)?;
    if !(mu0 > 0.0) || !mu0.is_finite() {
        return Err(ConeError::InvalidParameter(format!("mu0 must be positive, got {mu0}")));
    }
    Ok(PInterval {
        p_lo: df / (1.0 + df / 2.0 + mu0).min(df),
        p_hi: ratio_or_inf(df, df / 2.0 - mu0),
        basis: ThresholdBasis::GeneralPotential,
    })
}

/// Interval for V = 0, from the second exponent `mu1`.
pub fn threshold_interval_zero_potential(d: usize, mu1: f64) -> Result<PInterval> {
    let df = check_dim(d)?;
    if !(mu1 > 0.0) || !mu1.is_finite() {
        return Err(ConeError::InvalidParameter(format!("mu1 must be positive, got {mu1}")));
    }
    Ok(PInterval { p_lo: 1.0, p_hi: ratio_or_inf(df, df / 2.0 - mu1), basis: ThresholdBasis::ZeroPotential })
}

/// Interval for a nonzero constant potential V0 = c. The endpoint
/// c = -((d-2)/2)^2 is accepted: the formula stays finite there.
pub fn threshold_interval_constant(d: usize, c: f64) -> Result<PInterval> {
    let df = check_dim(d)?;
    if !c.is_finite() || c < -hardy_shift(d) {
        return Err(ConeError::PositivityViolation(format!(
            "constant potential c={c} is below -((d-2)/2)^2 = {}",
            -hardy_shift(d)
        )));
    }
    if c == 0.0 {
        return Err(ConeError::InvalidParameter(
            "c = 0 is the zero-potential case; use threshold_interval_zero_potential".into(),
        ));
    }
    let root = ((df - 2.0) * (df - 2.0) + 4.0 * c).sqrt();
    Ok(PInterval {
        p_lo: 2.0 * df / (df + 2.0 + root).min(2.0 * df),
        p_hi: ratio_or_inf(2.0 * df, df - root),
        basis: ThresholdBasis::ConstantPotential,
    })
}

/// Interval appropriate for a spectrum: zero-potential form when V0 = 0.
pub fn spectrum_interval(spec: &CrossSectionSpectrum) -> Result<PInterval> {
    match spec.constant_potential() {
        Some(c) if c == 0.0 => threshold_interval_zero_potential(spec.d(), spec.mu1()?),
        _ => threshold_interval(spec.d(), spec.mu0()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RieszKernelValue {
    pub d_r: f64,
    pub angular: f64,
    pub quad_error_est: f64,
    /// lambda = 1/r> and lambda = 1/r<.
    pub lambda_splits: [f64; 2],
    /// False outside the certified region r>/r< >= 4.
    pub certified: bool,
}

impl RieszKernelValue {
    pub fn magnitude(&self) -> f64 {
        self.d_r.hypot(self.angular)
    }
}

/// Upper end of the lambda integral: the integrand decays like e^(-lambda r>/4).
pub fn lambda_cutoff(r_max: f64, tol: f64) -> f64 {
    1.2 * 4.0 / r_max * (1.0 / tol).ln()
}

fn riesz_from_pairs(
    spec: &CrossSectionSpectrum,
    pairs: &[PairValue],
    r: f64,
    rp: f64,
    sel: ModeSelection,
    rel_tol: f64,
    max_panels: usize,
) -> Result<RieszKernelValue> {
    let d = spec.d() as i32;
    let (lo, hi) = (r.min(rp), r.max(rp));
    let splits = [1.0 / hi, 1.0 / lo];
    let lam_max = lambda_cutoff(hi, rel_tol * 1e-2);
    let mut breaks = vec![0.0, splits[0]];
    if splits[1] < lam_max {
        breaks.push(splits[1]);
    }
    breaks.push(lam_max.max(2.0 * splits[0]));
    let series_tol = (rel_tol * 1e-3).max(1e-15);
    let integrand = |lam: f64| -> [f64; 2] {
        let out = radial_series(spec, pairs, lam * r, lam * rp, true, sel, series_tol);
        let w = 2.0 / PI * lam.powi(d - 1);
        [w * out.d_r, w * out.angular]
    };
    let q = integrate(integrand, &breaks, 0.0, rel_tol, max_panels);
    if !q.converged {
        let worst: Vec<String> = q
            .panels
            .iter()
            .filter(|p| p.2 > 0.0)
            .take(8)
            .map(|p| format!("[{},{}]:{:.2e}", fmt_sig(p.0), fmt_sig(p.1), p.2))
            .collect();
        return Err(ConeError::QuadratureFailure(format!(
            "lambda integral at r={r}, r'={rp} not converged (error {:.3e}, {} panels); panels {}",
            q.abs_error,
            q.panels.len(),
            worst.join(" ")
        )));
    }
    // truncation beyond lam_max, integrand ~ e^(-lambda (r> - r<))
    let end = *breaks.last().unwrap();
    let f_end = integrand(end);
    let trunc = f_end[0].hypot(f_end[1]) * 2.0 / (hi - lo);
    Ok(RieszKernelValue {
        d_r: q.value[0],
        angular: q.value[1],
        quad_error_est: q.abs_error + trunc,
        lambda_splits: splits,
        certified: is_certified_region(r, rp),
    })
}

fn check_points(spec: &CrossSectionSpectrum, z: &ConePoint, zp: &ConePoint, rel_tol: f64) -> Result<()> {
    let cs = &spec.geometry.cross_section;
    cs.validate(&z.y)?;
    cs.validate(&zp.y)?;
    if !(rel_tol > 0.0 && rel_tol <= 0.1) {
        return Err(ConeError::InvalidParameter(format!("rel_tol must be in (0, 0.1], got {rel_tol}")));
    }
    Ok(())
}

/// Riesz kernel at (z, z') in the certified region r>/r< >= 4.
pub fn riesz_kernel(
    spec: &CrossSectionSpectrum,
    z: &ConePoint,
    zp: &ConePoint,
    rel_tol: f64,
) -> Result<RieszKernelValue> {
    riesz_kernel_modes(spec, z, zp, rel_tol, ModeSelection::All)
}

/// As [`riesz_kernel`] restricted to a subset of modes.
pub fn riesz_kernel_modes(
    spec: &CrossSectionSpectrum,
    z: &ConePoint,
    zp: &ConePoint,
    rel_tol: f64,
    sel: ModeSelection,
) -> Result<RieszKernelValue> {
    check_points(spec, z, zp, rel_tol)?;
    if !is_certified_region(z.r, zp.r) {
        return Err(ConeError::InvalidParameter(format!(
            "r={} and r'={} are outside the certified region r>/r< >= {}",
            z.r,
            zp.r,
            Tolerances::default().certified_ratio
        )));
    }
    let pairs = spec.pair_table(&z.y, &zp.y)?;
    riesz_from_pairs(spec, &pairs, z.r, zp.r, sel, rel_tol, Tolerances::default().quad_max_panels)
}

/// Riesz kernel at any r != r'. Outside the certified region the series
/// tails are empirical and the result carries `certified = false`.
pub fn riesz_kernel_uncertified(
    spec: &CrossSectionSpectrum,
    z: &ConePoint,
    zp: &ConePoint,
    rel_tol: f64,
) -> Result<RieszKernelValue> {
    check_points(spec, z, zp, rel_tol)?;
    if z.r == zp.r {
        return Err(ConeError::SingularPoint("r = r' has no lambda decay".into()));
    }
    let pairs = spec.pair_table(&z.y, &zp.y)?;
    riesz_from_pairs(spec, &pairs, z.r, zp.r, ModeSelection::All, rel_tol, Tolerances::default().quad_max_panels)
}

/// As [`riesz_kernel`] with an explicit panel budget.
pub fn riesz_kernel_with_panels(
    spec: &CrossSectionSpectrum,
    z: &ConePoint,
    zp: &ConePoint,
    rel_tol: f64,
    max_panels: usize,
) -> Result<RieszKernelValue> {
    check_points(spec, z, zp, rel_tol)?;
    let pairs = spec.pair_table(&z.y, &zp.y)?;
    riesz_from_pairs(spec, &pairs, z.r, zp.r, ModeSelection::All, rel_tol, max_panels)
}

/// Radial kernel of T on functions of r alone: the d/dr component of the
/// bottom-mode contribution with the angular variable integrated out.
/// Homogeneous of degree -d; returns its value at (r, r').
pub fn riesz_radial_piece(spec: &CrossSectionSpectrum, r: f64, rp: f64, rel_tol: f64) -> Result<f64> {
    if !(r > 0.0 && rp > 0.0) || !is_certified_region(r, rp) {
        return Err(ConeError::InvalidParameter(format!("radial piece needs r>/r< >= 4, got r={r}, r'={rp}")));
    }
    let mut pairs = vec![PairValue { value: 0.0, grad: 0.0 }; spec.modes.len()];
    pairs[0].value = 1.0;
    let v =
        riesz_from_pairs(spec, &pairs, r, rp, ModeSelection::Only(0), rel_tol, Tolerances::default().quad_max_panels)?;
    Ok(v.d_r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OffDiagRegion {
    /// r <= r'/4
    T2,
    /// r >= 4 r'
    T3,
}

impl OffDiagRegion {
    pub fn label(self) -> &'static str {
        match self {
            OffDiagRegion::T2 => "T2",
            OffDiagRegion::T3 => "T3",
        }
    }
}

/// Which bound shape a check compares against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ModelBound {
    /// (r/r')^(mu0 - d/2) r'^-d
    NearCone { mu0: f64 },
    /// (r'/r)^(mu0 - d/2 + 1) r^-d
    FarCone { mu0: f64 },
    /// r r'^(-1-d)
    ZeroPotentialBottom,
    /// (r/r')^(mu1 - d/2) r'^-d
    NearConeSecond { mu1: f64 },
}

impl ModelBound {
    pub fn eval(self, d: usize, r: f64, rp: f64) -> f64 {
        let d = d as f64;
        match self {
            ModelBound::NearCone { mu0 } => (r / rp).powf(mu0 - d / 2.0) * rp.powf(-d),
            ModelBound::FarCone { mu0 } => (rp / r).powf(mu0 - d / 2.0 + 1.0) * r.powf(-d),
            ModelBound::ZeroPotentialBottom => r * rp.powf(-1.0 - d),
            ModelBound::NearConeSecond { mu1 } => (r / rp).powf(mu1 - d / 2.0) * rp.powf(-d),
        }
    }
}

/// Sample grid for an off-diagonal check: points (r, r') = (s r', r') in T2 or
/// (r, r') = (r', r'/s) ... expressed through the ratio r</r> = s <= 1/4.
#[derive(Debug, Clone, Serialize)]
pub struct OffDiagGrid {
    /// The larger radius.
    pub outer_radii: Vec<f64>,
    /// Ratios r</r>, each <= 1/4.
    pub ratios: Vec<f64>,
    /// Angles between y and y' (sphere cross-sections).
    pub gammas: Vec<f64>,
}

impl OffDiagGrid {
    /// Log-spaced ratios from 1/4 down to `min_ratio`, `per_octave` per factor 2,
    /// and `n_gamma` angles in (0, pi).
    pub fn standard(outer_radii: Vec<f64>, min_ratio: f64, per_octave: usize, n_gamma: usize) -> Self {
        let octaves = (0.25 / min_ratio).log2();
        let n = (octaves * per_octave as f64).round().max(1.0) as usize;
        let ratios = (0..=n).map(|k| 0.25 * (min_ratio / 0.25).powf(k as f64 / n as f64)).collect();
        let gammas = (0..n_gamma).map(|k| PI * (k as f64 + 0.5) / n_gamma as f64).collect();
        OffDiagGrid { outer_radii, ratios, gammas }
    }

    /// Twice as many ratios and angles over the same ranges.
    pub fn refined(&self) -> Self {
        let refine_log = |v: &[f64]| -> Vec<f64> {
            let mut out = Vec::with_capacity(2 * v.len());
            for w in v.windows(2) {
                out.push(w[0]);
                out.push((w[0] * w[1]).sqrt());
            }
            out.extend(v.last());
            out
        };
        let n_gamma = 2 * self.gammas.len();
        OffDiagGrid {
            outer_radii: self.outer_radii.clone(),
            ratios: refine_log(&self.ratios),
            gammas: (0..n_gamma).map(|k| PI * (k as f64 + 0.5) / n_gamma as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OffDiagRow {
    pub region: OffDiagRegion,
    pub r: f64,
    pub r_prime: f64,
    pub gamma: f64,
    pub d_r: f64,
    pub angular: f64,
    pub model_bound: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OffDiagReport {
    pub region: OffDiagRegion,
    pub model: ModelBound,
    /// Grid supremum of |T| / model.
    pub constant: f64,
    pub pass: bool,
    pub grid: OffDiagGrid,
    pub rows: Vec<OffDiagRow>,
}

impl OffDiagReport {
    /// CSV with columns region, r, r_prime, gamma, d_r_component,
    /// angular_component, model_bound, ratio.
    pub fn to_csv(&self) -> String {
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.region.label().to_string(),
                    fmt_sig(r.r),
                    fmt_sig(r.r_prime),
                    fmt_sig(r.gamma),
                    fmt_sig(r.d_r),
                    fmt_sig(r.angular),
                    fmt_sig(r.model_bound),
                    fmt_sig(r.ratio),
                ]
            })
            .collect();
        csv_with_header(
            &["region", "r", "r_prime", "gamma", "d_r_component", "angular_component", "model_bound", "ratio"],
            &body,
        )
    }
}

fn sphere_dim(spec: &CrossSectionSpectrum) -> Result<usize> {
    match spec.geometry.cross_section {
        crate::geometry::CrossSection::Sphere { dim, .. } => Ok(dim),
        _ => Err(ConeError::UnsupportedCrossSection("off-diagonal grids are parametrized by sphere angles".into())),
    }
}

fn offdiag_with(
    spec: &CrossSectionSpectrum,
    region: OffDiagRegion,
    grid: &OffDiagGrid,
    model: ModelBound,
    sel: ModeSelection,
) -> Result<OffDiagReport> {
    let dim = sphere_dim(spec)?;
    let tol = Tolerances::default().riesz_rel_tol;
    if grid.ratios.iter().any(|&s| !(s > 0.0 && s <= 0.25)) {
        return Err(ConeError::InvalidParameter("grid ratios must lie in (0, 1/4]".into()));
    }
    let mut jobs = Vec::new();
    for &outer in &grid.outer_radii {
        for &s in &grid.ratios {
            for &g in &grid.gammas {
                let (r, rp) = match region {
                    OffDiagRegion::T2 => (s * outer, outer),
                    OffDiagRegion::T3 => (outer, s * outer),
                };
                jobs.push((r, rp, g));
            }
        }
    }
    let yp = CrossPoint::sphere_pole(dim);
    let rows: Result<Vec<OffDiagRow>> = jobs
        .par_iter()
        .map(|&(r, rp, g)| {
            let z = ConePoint::new(r, CrossPoint::sphere_at_angle(dim, g))?;
            let zp = ConePoint::new(rp, yp.clone())?;
            let v = riesz_kernel_modes(spec, &z, &zp, tol, sel)?;
            let m = model.eval(spec.d(), r, rp);
            Ok(OffDiagRow {
                region,
                r,
                r_prime: rp,
                gamma: g,
                d_r: v.d_r,
                angular: v.angular,
                model_bound: m,
                ratio: v.magnitude() / m,
            })
        })
        .collect();
    let rows = rows?;
    let constant = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    Ok(OffDiagReport { region, model, constant, pass: constant.is_finite(), grid: grid.clone(), rows })
}

/// Smallest C with |T| <= C * model over the grid, for the near-cone (T2) or
/// far-cone (T3) region.
pub fn offdiag_bound_check(
    spec: &CrossSectionSpectrum,
    region: OffDiagRegion,
    grid: &OffDiagGrid,
) -> Result<OffDiagReport> {
    let mu0 = spec.mu0();
    let model = match region {
        OffDiagRegion::T2 => ModelBound::NearCone { mu0 },
        OffDiagRegion::T3 => ModelBound::FarCone { mu0 },
    };
    offdiag_with(spec, region, grid, model, ModeSelection::All)
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroPotentialReport {
    /// Bottom (constant) mode against r r'^(-1-d).
    pub bottom: OffDiagReport,
    /// Remaining modes against (r/r')^(mu1 - d/2) r'^-d.
    pub rest: OffDiagReport,
}

impl ZeroPotentialReport {
    pub fn pass(&self) -> bool {
        self.bottom.pass && self.rest.pass
    }
}

/// Near-cone check for V = 0: the bottom mode obeys the sharper bound
/// r r'^(-1-d); the other modes are controlled by mu1.
pub fn zero_potential_refinement_check(spec: &CrossSectionSpectrum, grid: &OffDiagGrid) -> Result<ZeroPotentialReport> {
    let d = spec.d() as f64;
    if (spec.mu0() - (d - 2.0) / 2.0).abs() > 1e-12 {
        return Err(ConeError::InvalidParameter(format!("zero potential needs mu0 = (d-2)/2, got {}", spec.mu0())));
    }
    let mu1 = spec.mu1()?;
    let first_rest = spec.modes.iter().position(|m| m.mu > spec.mu0()).unwrap_or(spec.modes.len());
    let bottom = offdiag_with(spec, OffDiagRegion::T2, grid, ModelBound::ZeroPotentialBottom, ModeSelection::Only(0))?;
    let rest = offdiag_with(
        spec,
        OffDiagRegion::T2,
        grid,
        ModelBound::NearConeSecond { mu1 },
        ModeSelection::From(first_rest),
    )?;
    Ok(ZeroPotentialReport { bottom, rest })
}

/// Near-diagonal shape check |T| <= C d(z, z')^-d on uncertified evaluations.
#[derive(Debug, Clone, Serialize)]
pub struct NearDiagonalShape {
    pub constant: f64,
    pub samples: usize,
    pub certified: bool,
}

pub fn near_diagonal_shape_check(
    spec: &CrossSectionSpectrum,
    ratios: &[f64],
    gammas: &[f64],
) -> Result<NearDiagonalShape> {
    let dim = sphere_dim(spec)?;
    let d = spec.d() as i32;
    let tol = 1e-6;
    let mut jobs = Vec::new();
    for &s in ratios {
        for &g in gammas {
            jobs.push((s, g));
        }
    }
    let vals: Result<Vec<f64>> = jobs
        .par_iter()
        .map(|&(s, g)| {
            let z = ConePoint::new(s, CrossPoint::sphere_at_angle(dim, g))?;
            let zp = ConePoint::new(1.0, CrossPoint::sphere_pole(dim))?;
            let v = riesz_kernel_uncertified(spec, &z, &zp, tol)?;
            let dist = crate::geometry::cone_distance(&spec.geometry, &z, &zp)?;
            Ok(v.magnitude() * dist.powi(d))
        })
        .collect();
    let vals = vals?;
    Ok(NearDiagonalShape { constant: vals.iter().cloned().fold(0.0, f64::max), samples: vals.len(), certified: false })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct L2Bound {
    pub epsilon: f64,
    pub bound: f64,
}

/// Largest eps in (0, 1] with Delta_Y + V0/(1-eps) + ((d-2)/2)^2 >= 0 and the
/// resulting operator-norm bound eps^(-1/2), for constant potentials.
pub fn l2_bound_constant(spec: &CrossSectionSpectrum) -> Result<L2Bound> {
    let c = spec
        .constant_potential()
        .ok_or_else(|| ConeError::UnsupportedCrossSection("L2 constant needs a constant potential".into()))?;
    let bottom = spec.modes[0]
        .laplace_eigenvalue
        .ok_or_else(|| ConeError::UnsupportedCrossSection("bottom Laplace eigenvalue unknown".into()))?;
    let level = bottom + hardy_shift(spec.d());
    if c + level <= 0.0 {
        return Err(ConeError::PositivityViolation(format!("c = {c} leaves no positive margin")));
    }
    let epsilon = if c >= 0.0 { 1.0 } else { 1.0 + c / level };
    Ok(L2Bound { epsilon, bound: epsilon.powf(-0.5) })
}
