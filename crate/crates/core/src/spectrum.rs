//! Spectral data {mu_j, u_j} of Delta_Y + V0 + ((d-2)/2)^2 on the cross-section.
//!
//! A [`Mode`] is one eigenvalue mu_j^2 with its whole eigenspace; the
//! eigenfunctions enter kernels only through the pair sum
//! sum_m u_jm(y) conj(u_jm(y')), evaluated by [`CrossSectionSpectrum::pair_eval`].

use crate::error::{ConeError, Result};
use crate::geometry::{ConeGeometry, CrossPoint, CrossSection};
use crate::special::{binomial, gegenbauer_all, unit_sphere_volume};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::path::Path;

/// How the pair sum of a mode is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum PairKernel {
    /// Degree-l zonal harmonic on a round sphere.
    Zonal { degree: usize },
    /// Exponentials e^{i k.theta} over a shell of torus lattice vectors.
    Lattice { vectors: Vec<Vec<i32>> },
    /// sum_k c_k T_k(cos gamma) in the scalar separation gamma.
    Chebyshev { coeffs: Vec<f64> },
    /// Only mu and multiplicity are known.
    NormsOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mode {
    pub mu: f64,
    pub multiplicity: usize,
    pub kernel: PairKernel,
    /// Upper bound for |pair_eval(y, y')| over all y, y'.
    pub diag_bound: f64,
    /// Upper bound for the cross-section gradient of pair_eval.
    pub grad_bound: f64,
    /// Eigenvalue of Delta_Y for this eigenspace, when known.
    pub laplace_eigenvalue: Option<f64>,
}

/// Source of the potential term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum V0Descriptor {
    Constant(f64),
    File(String),
}

impl V0Descriptor {
    pub fn label(&self) -> String {
        match self {
            V0Descriptor::Constant(c) => format!("constant:{c}"),
            V0Descriptor::File(s) => s.clone(),
        }
    }
}

/// Pair sum and its derivative along the geodesic from y' to y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairValue {
    pub value: f64,
    pub grad: f64,
}

/// Result of fitting the Weyl bound N(mu) <= C mu^(d-1).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeylFit {
    pub c: f64,
    pub max_ratio: f64,
    /// (mu, N(mu) / (C mu^(d-1))) at each distinct tabulated mu.
    pub ratios: Vec<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub struct CrossSectionSpectrum {
    pub geometry: ConeGeometry,
    pub modes: Vec<Mode>,
    pub v0: V0Descriptor,
    pub mu_cutoff: f64,
    /// Largest diag_bound / multiplicity over the table.
    pub diag_density: f64,
    /// Largest grad_bound / (multiplicity * mu) over the table.
    pub grad_density: f64,
    /// Weyl constant calibrated on the table; used for tails beyond it.
    pub weyl_c: f64,
}

/// Positivity threshold: V0 = c is admissible iff c > -((d-2)/2)^2.
pub fn hardy_shift(d: usize) -> f64 {
    let h = (d as f64 - 2.0) / 2.0;
    h * h
}

fn check_constant_potential(d: usize, c: f64) -> Result<()> {
    if d < 3 {
        return Err(ConeError::InvalidParameter(format!("cone dimension must be >= 3, got {d}")));
    }
    if !c.is_finite() || c <= -hardy_shift(d) {
        return Err(ConeError::PositivityViolation(format!(
            "constant potential c={c} must exceed -((d-2)/2)^2 = {}",
            -hardy_shift(d)
        )));
    }
    Ok(())
}

/// Default truncation: max(40, mu0 + 30).
pub fn default_mu_cutoff(mu0: f64) -> f64 {
    (mu0 + 30.0).max(40.0)
}

fn resolve_cutoff(mu_cutoff: Option<f64>, mu0: f64) -> Result<f64> {
    let cut = mu_cutoff.unwrap_or_else(|| default_mu_cutoff(mu0));
    if !(cut > 0.0) || !cut.is_finite() {
        return Err(ConeError::InvalidParameter(format!("mu_cutoff must be positive, got {cut}")));
    }
    Ok(cut)
}

/// Sphere S^(d-1) of radius `a` with constant potential `c`.
pub fn sphere_spectrum(d: usize, a: f64, c: f64, mu_cutoff: Option<f64>) -> Result<CrossSectionSpectrum> {
    check_constant_potential(d, c)?;
    if !(a > 0.0) || !a.is_finite() {
        return Err(ConeError::InvalidParameter(format!("sphere radius must be positive, got {a}")));
    }
    let shift = c + hardy_shift(d);
    let geometry = ConeGeometry::new(d, CrossSection::Sphere { dim: d - 1, radius: a })?;
    let vol = geometry.cross_section.volume().expect("sphere volume");
    let cut = resolve_cutoff(mu_cutoff, shift.sqrt())?;
    let mut modes = Vec::new();
    for l in 0usize.. {
        let lf = l as f64;
        let lap = lf * (lf + d as f64 - 2.0) / (a * a);
        let mu = (lap + shift).sqrt();
        if mu > cut && !modes.is_empty() {
            break;
        }
        let mult = sphere_multiplicity(d, l);
        let diag = mult as f64 / vol;
        modes.push(Mode {
            mu,
            multiplicity: mult,
            kernel: PairKernel::Zonal { degree: l },
            diag_bound: diag,
            grad_bound: lap.sqrt() * diag,
            laplace_eigenvalue: Some(lap),
        });
    }
    Ok(finish(geometry, modes, V0Descriptor::Constant(c), cut))
}

/// Dimension of degree-l spherical harmonics on S^(d-1).
pub fn sphere_multiplicity(d: usize, l: usize) -> usize {
    let a = binomial((l + d - 1) as u64, (d - 1) as u64);
    let b = if l >= 2 { binomial((l + d - 3) as u64, (d - 1) as u64) } else { 0.0 };
    (a - b).round() as usize
}

/// Flat torus with the given radii and constant potential `c`.
pub fn torus_spectrum(d: usize, radii: &[f64], c: f64, mu_cutoff: Option<f64>) -> Result<CrossSectionSpectrum> {
    check_constant_potential(d, c)?;
    if radii.len() + 1 != d || radii.iter().any(|a| !(*a > 0.0) || !a.is_finite()) {
        return Err(ConeError::InvalidParameter(format!("torus needs d-1 = {} positive radii, got {radii:?}", d - 1)));
    }
    let shift = c + hardy_shift(d);
    let geometry = ConeGeometry::new(d, CrossSection::Torus { radii: radii.to_vec() })?;
    let vol = geometry.cross_section.volume().expect("torus volume");
    let cut = resolve_cutoff(mu_cutoff, shift.sqrt())?;
    let lam_max = (cut * cut - shift).max(0.0);
    let bounds: Vec<i32> = radii.iter().map(|a| (a * lam_max.sqrt()).floor() as i32).collect();
    let mut pts: Vec<(f64, Vec<i32>)> = Vec::new();
    let mut k = vec![0i32; radii.len()];
    enumerate_lattice(&bounds, 0, &mut k, &mut |v| {
        let lam: f64 = v.iter().zip(radii).map(|(&ki, a)| (ki as f64 / a).powi(2)).sum();
        if lam <= lam_max * (1.0 + 1e-12) {
            pts.push((lam, v.to_vec()));
        }
    });
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(&b.1)));
    let mut modes: Vec<Mode> = Vec::new();
    let mut group: Vec<Vec<i32>> = Vec::new();
    let mut group_lam = f64::NAN;
    let tol = crate::config::Tolerances::default().mode_merge;
    let flush = |lam: f64, group: &mut Vec<Vec<i32>>, modes: &mut Vec<Mode>| {
        if group.is_empty() {
            return;
        }
        let mult = group.len();
        let diag = mult as f64 / vol;
        modes.push(Mode {
            mu: (lam + shift).sqrt(),
            multiplicity: mult,
            kernel: PairKernel::Lattice { vectors: std::mem::take(group) },
            diag_bound: diag,
            grad_bound: lam.sqrt() * diag,
            laplace_eigenvalue: Some(lam),
        });
    };
    for (lam, v) in pts {
        if group.is_empty() || (lam - group_lam).abs() <= tol * group_lam.max(1.0) {
            if group.is_empty() {
                group_lam = lam;
            }
            group.push(v);
        } else {
            flush(group_lam, &mut group, &mut modes);
            group_lam = lam;
            group.push(v);
        }
    }
    flush(group_lam, &mut group, &mut modes);
    Ok(finish(geometry, modes, V0Descriptor::Constant(c), cut))
}

fn enumerate_lattice(bounds: &[i32], i: usize, k: &mut Vec<i32>, f: &mut impl FnMut(&[i32])) {
    if i == bounds.len() {
        f(k);
        return;
    }
    for v in -bounds[i]..=bounds[i] {
        k[i] = v;
        enumerate_lattice(bounds, i + 1, k, f);
    }
}

fn finish(geometry: ConeGeometry, modes: Vec<Mode>, v0: V0Descriptor, mu_cutoff: f64) -> CrossSectionSpectrum {
    let diag_density = modes.iter().map(|m| m.diag_bound / m.multiplicity as f64).fold(0.0, f64::max);
    let grad_density = modes.iter().map(|m| m.grad_bound / (m.multiplicity as f64 * m.mu)).fold(0.0, f64::max);
    let mut s = CrossSectionSpectrum { geometry, modes, v0, mu_cutoff, diag_density, grad_density, weyl_c: f64::NAN };
    s.weyl_c = s.weyl_fit().c;
    s
}

/// On-disk spectrum format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub d: usize,
    pub modes: Vec<SpectrumFileMode>,
    pub v0: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFileMode {
    pub mu: f64,
    pub multiplicity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub addition_coeffs: Option<Vec<f64>>,
}

/// Read a spectrum from JSON. Modes are sorted and equal mu merged.
pub fn load_spectrum(path: impl AsRef<Path>) -> Result<CrossSectionSpectrum> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| ConeError::SpectrumFile(format!("{}: {e}", path.as_ref().display())))?;
    let file: SpectrumFile = serde_json::from_str(&text).map_err(|e| ConeError::SpectrumFile(e.to_string()))?;
    spectrum_from_file(file)
}

/// Build a spectrum from the parsed file format.
pub fn spectrum_from_file(file: SpectrumFile) -> Result<CrossSectionSpectrum> {
    if file.d < 3 {
        return Err(ConeError::SpectrumFile(format!("d must be >= 3, got {}", file.d)));
    }
    if file.modes.is_empty() {
        return Err(ConeError::SpectrumFile("mode list is empty".into()));
    }
    for m in &file.modes {
        if !(m.mu > 0.0) || !m.mu.is_finite() {
            return Err(ConeError::PositivityViolation(format!("mode with mu = {} (need mu > 0)", m.mu)));
        }
        if m.multiplicity == 0 {
            return Err(ConeError::SpectrumFile("multiplicity must be >= 1".into()));
        }
    }
    let with_coeffs = file.modes.iter().all(|m| m.addition_coeffs.is_some());
    let mut raw = file.modes.clone();
    raw.sort_by(|a, b| a.mu.partial_cmp(&b.mu).unwrap());
    let tol = crate::config::Tolerances::default().mode_merge;
    let mut merged: Vec<SpectrumFileMode> = Vec::new();
    for m in raw {
        match merged.last_mut() {
            Some(last) if (m.mu - last.mu).abs() <= tol * last.mu => {
                last.multiplicity += m.multiplicity;
                if let (Some(a), Some(b)) = (last.addition_coeffs.as_mut(), m.addition_coeffs.as_ref()) {
                    if a.len() < b.len() {
                        a.resize(b.len(), 0.0);
                    }
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                }
            }
            _ => merged.push(m),
        }
    }
    let modes: Vec<Mode> = merged
        .iter()
        .map(|m| {
            let (kernel, diag, grad) = match (&m.addition_coeffs, with_coeffs) {
                (Some(c), true) => {
                    let diag: f64 = c.iter().map(|x| x.abs()).sum();
                    let grad: f64 = c.iter().enumerate().map(|(k, x)| k as f64 * x.abs()).sum();
                    (PairKernel::Chebyshev { coeffs: c.clone() }, diag, grad)
                }
                _ => (PairKernel::NormsOnly, f64::NAN, f64::NAN),
            };
            Mode {
                mu: m.mu,
                multiplicity: m.multiplicity,
                kernel,
                diag_bound: diag,
                grad_bound: grad,
                laplace_eigenvalue: None,
            }
        })
        .collect();
    let volume = match &modes[0].kernel {
        PairKernel::Chebyshev { coeffs } => {
            let at_zero: f64 = coeffs.iter().sum();
            (at_zero > 0.0).then(|| modes[0].multiplicity as f64 / at_zero)
        }
        _ => None,
    };
    let geometry = ConeGeometry::new(file.d, CrossSection::Separation { volume })?;
    let cut = modes.last().map(|m| m.mu).unwrap_or(0.0);
    Ok(finish(geometry, modes, V0Descriptor::File(file.v0), cut))
}

impl CrossSectionSpectrum {
    pub fn d(&self) -> usize {
        self.geometry.d
    }

    pub fn is_norms_only(&self) -> bool {
        self.modes.iter().any(|m| m.kernel == PairKernel::NormsOnly)
    }

    /// Smallest mu.
    pub fn mu0(&self) -> f64 {
        self.modes[0].mu
    }

    /// Smallest mu strictly above mu0.
    pub fn mu1(&self) -> Result<f64> {
        let m0 = self.mu0();
        self.modes.iter().map(|m| m.mu).find(|&mu| mu > m0).ok_or_else(|| {
            ConeError::InsufficientSpectrum(format!("no mode above mu0 = {m0} below cutoff {}", self.mu_cutoff))
        })
    }

    /// Constant potential value, when the spectrum was built from one.
    pub fn constant_potential(&self) -> Option<f64> {
        match self.v0 {
            V0Descriptor::Constant(c) => Some(c),
            V0Descriptor::File(_) => None,
        }
    }

    /// Smallest C with N(mu) <= C mu^(d-1) at every tabulated mu.
    pub fn weyl_fit(&self) -> WeylFit {
        let p = self.d() as i32 - 1;
        let mut count = 0usize;
        let mut raw = Vec::with_capacity(self.modes.len());
        for m in &self.modes {
            count += m.multiplicity;
            raw.push((m.mu, count as f64 / m.mu.powi(p)));
        }
        let c = raw.iter().map(|x| x.1).fold(0.0, f64::max);
        let ratios: Vec<(f64, f64)> = raw.iter().map(|&(mu, q)| (mu, q / c)).collect();
        let max_ratio = ratios.iter().map(|x| x.1).fold(0.0, f64::max);
        WeylFit { c, max_ratio, ratios }
    }

    /// Scalar separation used by zonal and Chebyshev kernels (radians).
    fn separation_angle(&self, y: &CrossPoint, yp: &CrossPoint) -> Result<f64> {
        let dy = self.geometry.cross_section.distance(y, yp)?;
        Ok(match &self.geometry.cross_section {
            CrossSection::Sphere { radius, .. } => dy / radius,
            _ => dy,
        })
    }

    /// Pair sum of mode `j` at (y, y').
    pub fn pair_eval(&self, j: usize, y: &CrossPoint, yp: &CrossPoint) -> Result<f64> {
        Ok(self.pair_table_upto(y, yp, j + 1)?[j].value)
    }

    /// Derivative of the pair sum of mode `j` as y moves away from y' along
    /// the connecting geodesic, per unit cross-section length.
    pub fn grad_pair_eval(&self, j: usize, y: &CrossPoint, yp: &CrossPoint) -> Result<f64> {
        Ok(self.pair_table_upto(y, yp, j + 1)?[j].grad)
    }

    /// Pair values and derivatives for every mode.
    pub fn pair_table(&self, y: &CrossPoint, yp: &CrossPoint) -> Result<Vec<PairValue>> {
        self.pair_table_upto(y, yp, self.modes.len())
    }

    /// Pair values and derivatives for the first `n` modes.
    pub fn pair_table_upto(&self, y: &CrossPoint, yp: &CrossPoint, n: usize) -> Result<Vec<PairValue>> {
        let n = n.min(self.modes.len());
        if self.modes[..n].iter().any(|m| m.kernel == PairKernel::NormsOnly) {
            return Err(ConeError::NormsOnly);
        }
        match &self.geometry.cross_section {
            CrossSection::Sphere { dim, radius } => {
                let gamma = self.separation_angle(y, yp)?;
                Ok(zonal_table(dim + 1, *radius, gamma, n))
            }
            CrossSection::Torus { radii } => {
                self.geometry.cross_section.validate(y)?;
                self.geometry.cross_section.validate(yp)?;
                let vol = self.geometry.cross_section.volume().expect("torus volume");
                let delta: Vec<f64> = y.0.iter().zip(&yp.0).map(|(a, b)| crate::geometry::wrap_angle(a - b)).collect();
                // unit direction of the geodesic in arc-length coordinates
                let arc: Vec<f64> = delta.iter().zip(radii).map(|(t, a)| t * a).collect();
                let len = arc.iter().map(|x| x * x).sum::<f64>().sqrt();
                Ok(self.modes[..n]
                    .iter()
                    .map(|m| match &m.kernel {
                        PairKernel::Lattice { vectors } => {
                            let mut value = 0.0;
                            let mut grad = 0.0;
                            for k in vectors {
                                let phase: f64 = k.iter().zip(&delta).map(|(&ki, t)| ki as f64 * t).sum();
                                value += phase.cos();
                                if len > 0.0 {
                                    let dir: f64 = k
                                        .iter()
                                        .zip(radii)
                                        .zip(&arc)
                                        .map(|((&ki, a), e)| ki as f64 / a * e / len)
                                        .sum();
                                    grad -= phase.sin() * dir;
                                }
                            }
                            PairValue { value: value / vol, grad: grad / vol }
                        }
                        _ => unreachable!("torus spectra carry lattice kernels"),
                    })
                    .collect())
            }
            CrossSection::Separation { .. } => {
                let gamma = self.separation_angle(y, yp)?;
                Ok(self.modes[..n]
                    .iter()
                    .map(|m| match &m.kernel {
                        PairKernel::Chebyshev { coeffs } => {
                            let mut value = 0.0;
                            let mut grad = 0.0;
                            for (k, c) in coeffs.iter().enumerate() {
                                let kf = k as f64;
                                value += c * (kf * gamma).cos();
                                grad -= c * kf * (kf * gamma).sin();
                            }
                            PairValue { value, grad }
                        }
                        _ => unreachable!("separation spectra carry Chebyshev kernels"),
                    })
                    .collect())
            }
        }
    }

    /// File representation. With `with_coeffs`, zonal kernels are written as
    /// Chebyshev coefficient tables in cos(gamma) (sphere spectra only).
    pub fn to_file(&self, with_coeffs: bool) -> Result<SpectrumFile> {
        let modes = self
            .modes
            .iter()
            .map(|m| {
                let addition_coeffs = if with_coeffs {
                    Some(match (&m.kernel, &self.geometry.cross_section) {
                        (PairKernel::Zonal { degree }, CrossSection::Sphere { dim, radius }) => {
                            zonal_chebyshev(dim + 1, *radius, *degree)
                        }
                        (PairKernel::Chebyshev { coeffs }, _) => coeffs.clone(),
                        _ => {
                            return Err(ConeError::UnsupportedCrossSection(
                                "only zonal or Chebyshev kernels export to addition coefficients".into(),
                            ))
                        }
                    })
                } else {
                    None
                };
                Ok(SpectrumFileMode { mu: m.mu, multiplicity: m.multiplicity, addition_coeffs })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumFile { d: self.d(), modes, v0: self.v0.label() })
    }

    pub fn save(&self, path: impl AsRef<Path>, with_coeffs: bool) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_file(with_coeffs)?)
            .map_err(|e| ConeError::SpectrumFile(e.to_string()))?;
        std::fs::write(path.as_ref(), text)
            .map_err(|e| ConeError::SpectrumFile(format!("{}: {e}", path.as_ref().display())))
    }

    /// Copy keeping only the modes selected by `keep` (by index).
    pub fn restricted(&self, keep: impl Fn(usize) -> bool) -> CrossSectionSpectrum {
        let mut s = self.clone();
        s.modes = self.modes.iter().enumerate().filter(|(j, _)| keep(*j)).map(|(_, m)| m.clone()).collect();
        s
    }
}

/// Zonal kernels Z_l(cos gamma) / a^(d-1) and their arc-length derivatives
/// for l < n on the sphere S^(d-1) of radius a.
fn zonal_table(d: usize, a: f64, gamma: f64, n: usize) -> Vec<PairValue> {
    let alpha = (d as f64 - 2.0) / 2.0;
    let t = gamma.cos();
    let s = gamma.sin();
    let c = gegenbauer_all(n.saturating_sub(1), alpha, t);
    let c1 = gegenbauer_all(n.saturating_sub(1), alpha + 1.0, t);
    let inv = 1.0 / (unit_sphere_volume(d) * a.powi(d as i32 - 1));
    (0..n)
        .map(|l| {
            let norm = (2.0 * l as f64 + d as f64 - 2.0) / (d as f64 - 2.0) * inv;
            let value = norm * c[l];
            // d/dgamma C_l^alpha(cos gamma) = -sin(gamma) 2 alpha C_{l-1}^{alpha+1}
            let grad = if l == 0 { 0.0 } else { -norm * s * 2.0 * alpha * c1[l - 1] / a };
            PairValue { value, grad }
        })
        .collect()
}

/// Chebyshev coefficients of the degree-l zonal kernel as a polynomial in cos(gamma).
fn zonal_chebyshev(d: usize, a: f64, l: usize) -> Vec<f64> {
    let n = l + 1;
    let nodes: Vec<f64> = (0..n).map(|j| PI * (j as f64 + 0.5) / n as f64).collect();
    let vals: Vec<f64> = nodes.iter().map(|&th| zonal_table(d, a, th, n)[l].value).collect();
    (0..n)
        .map(|k| {
            let s: f64 = nodes.iter().zip(&vals).map(|(th, v)| v * (k as f64 * th).cos()).sum();
            let c = 2.0 * s / n as f64;
            if k == 0 {
                0.5 * c
            } else {
                c
            }
        })
        .collect()
}
