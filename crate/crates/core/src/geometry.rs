//! Points on a metric cone (0, inf) x Y, the cone distance, and radial grids.

use crate::error::{ConeError, Result};
use crate::special::unit_sphere_volume;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Cross-section of the cone. Points on it are opaque coordinate vectors
/// ([`CrossPoint`]) whose meaning depends on the variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CrossSection {
    /// Round sphere S^dim of the given radius; points are unit vectors in R^(dim+1).
    Sphere { dim: usize, radius: f64 },
    /// Flat torus prod_i (R / 2 pi a_i Z); points are angle vectors.
    Torus { radii: Vec<f64> },
    /// Abstract cross-section described only through a scalar separation
    /// coordinate: points are `[gamma]` and d_Y = |gamma - gamma'|.
    Separation { volume: Option<f64> },
}

/// Opaque handle for a point of the cross-section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossPoint(pub Vec<f64>);

impl CrossPoint {
    /// Point on S^dim at geodesic angle `gamma` from the north pole `(1, 0, ...)`.
    pub fn sphere_at_angle(dim: usize, gamma: f64) -> Self {
        let mut v = vec![0.0; dim + 1];
        v[0] = gamma.cos();
        if dim >= 1 {
            v[1] = gamma.sin();
        }
        CrossPoint(v)
    }

    pub fn sphere_pole(dim: usize) -> Self {
        Self::sphere_at_angle(dim, 0.0)
    }

    pub fn separation(gamma: f64) -> Self {
        CrossPoint(vec![gamma])
    }
}

impl CrossSection {
    pub fn dim(&self) -> Option<usize> {
        match self {
            CrossSection::Sphere { dim, .. } => Some(*dim),
            CrossSection::Torus { radii } => Some(radii.len()),
            CrossSection::Separation { .. } => None,
        }
    }

    pub fn volume(&self) -> Option<f64> {
        match self {
            CrossSection::Sphere { dim, radius } => Some(unit_sphere_volume(dim + 1) * radius.powi(*dim as i32)),
            CrossSection::Torus { radii } => Some(radii.iter().map(|a| 2.0 * PI * a).product()),
            CrossSection::Separation { volume } => *volume,
        }
    }

    /// Check that `y` is a valid point of this cross-section.
    pub fn validate(&self, y: &CrossPoint) -> Result<()> {
        let ok = match self {
            CrossSection::Sphere { dim, .. } => {
                let n2: f64 = y.0.iter().map(|v| v * v).sum();
                y.0.len() == dim + 1 && (n2 - 1.0).abs() < 1e-9
            }
            CrossSection::Torus { radii } => y.0.len() == radii.len() && y.0.iter().all(|v| v.is_finite()),
            CrossSection::Separation { .. } => y.0.len() == 1 && y.0[0].is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(ConeError::UnsupportedCrossSection(format!("point {:?} is not on {:?}", y.0, self)))
        }
    }

    /// Intrinsic distance d_Y(y, y').
    pub fn distance(&self, y: &CrossPoint, yp: &CrossPoint) -> Result<f64> {
        self.validate(y)?;
        self.validate(yp)?;
        Ok(match self {
            CrossSection::Sphere { radius, .. } => radius * unit_vector_angle(&y.0, &yp.0),
            CrossSection::Torus { radii } => radii
                .iter()
                .zip(y.0.iter().zip(&yp.0))
                .map(|(a, (t, tp))| {
                    let w = wrap_angle(t - tp);
                    (a * w) * (a * w)
                })
                .sum::<f64>()
                .sqrt(),
            CrossSection::Separation { .. } => (y.0[0] - yp.0[0]).abs(),
        })
    }
}

/// Angle between unit vectors, accurate near 0 and pi.
pub fn unit_vector_angle(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
    let sum: f64 = a.iter().zip(b).map(|(x, y)| (x + y) * (x + y)).sum::<f64>().sqrt();
    2.0 * diff.atan2(sum)
}

/// Wrap an angle difference into [-pi, pi].
pub fn wrap_angle(t: f64) -> f64 {
    let w = (t + PI).rem_euclid(2.0 * PI) - PI;
    if w < -PI {
        w + 2.0 * PI
    } else {
        w
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConePoint {
    pub r: f64,
    pub y: CrossPoint,
}

impl ConePoint {
    pub fn new(r: f64, y: CrossPoint) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(ConeError::InvalidParameter(format!("radius must be positive and finite, got {r}")));
        }
        Ok(ConePoint { r, y })
    }

    /// Same cross-section point, radius multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Self {
        ConePoint { r: self.r * t, y: self.y.clone() }
    }
}

/// A metric cone of dimension `d` over a cross-section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeGeometry {
    pub d: usize,
    pub cross_section: CrossSection,
}

impl ConeGeometry {
    pub fn new(d: usize, cross_section: CrossSection) -> Result<Self> {
        if d < 3 {
            return Err(ConeError::InvalidParameter(format!("cone dimension must be >= 3, got {d}")));
        }
        if let Some(dim) = cross_section.dim() {
            if dim + 1 != d {
                return Err(ConeError::InvalidParameter(format!(
                    "cross-section dimension {dim} does not match cone dimension {d}"
                )));
            }
        }
        if let Some(v) = cross_section.volume() {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ConeError::InvalidParameter(format!("cross-section volume must be positive, got {v}")));
            }
        }
        Ok(ConeGeometry { d, cross_section })
    }

    /// Euclidean R^d viewed as the cone over the unit sphere.
    pub fn euclidean(d: usize) -> Result<Self> {
        Self::new(d, CrossSection::Sphere { dim: d - 1, radius: 1.0 })
    }

    /// Riemannian measure weight r^(d-1) (per unit dr dh).
    pub fn radial_weight(&self, r: f64) -> f64 {
        r.powi(self.d as i32 - 1)
    }
}

/// Distance on the cone: sqrt(r^2 + r'^2 - 2 r r' cos d_Y) when d_Y <= pi,
/// r + r' otherwise.
pub fn cone_distance(g: &ConeGeometry, z: &ConePoint, zp: &ConePoint) -> Result<f64> {
    let dy = g.cross_section.distance(&z.y, &zp.y)?;
    Ok(distance_from_separation(z.r, zp.r, dy))
}

/// Cone distance from the radii and the cross-section distance.
pub fn distance_from_separation(r: f64, rp: f64, dy: f64) -> f64 {
    if dy <= PI {
        // (r - r')^2 + 4 r r' sin^2(d_Y / 2) avoids cancellation near the diagonal
        let s = (0.5 * dy).sin();
        ((r - rp) * (r - rp) + 4.0 * r * rp * s * s).sqrt()
    } else {
        r + rp
    }
}

/// Cutoff profile: x on [0, 1/2], 1 on [1, inf), quintic smoothstep blend between.
pub fn radial_cutoff_profile(x: f64) -> f64 {
    if x <= 0.5 {
        x
    } else if x >= 1.0 {
        1.0
    } else {
        let t = 2.0 * (x - 0.5);
        let s = t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
        (1.0 - s) * x + s
    }
}

/// Quadratic defining function of the lifted diagonal: d(z, z')^2 / phi(r')^2.
pub fn diag_defining(g: &ConeGeometry, z: &ConePoint, zp: &ConePoint) -> Result<f64> {
    let dist = cone_distance(g, z, zp)?;
    let phi = radial_cutoff_profile(zp.r);
    Ok((dist / phi) * (dist / phi))
}

/// `n` geometrically spaced radii from `r_min` to `r_max`, endpoints exact.
pub fn log_radial_grid(r_min: f64, r_max: f64, n: usize) -> Result<Vec<f64>> {
    if !(r_min > 0.0) || !(r_max > r_min) || !r_max.is_finite() || n < 2 {
        return Err(ConeError::InvalidRange { r_min, r_max, n });
    }
    let ratio = r_max / r_min;
    let mut out: Vec<f64> = (0..n).map(|i| r_min * ratio.powf(i as f64 / (n - 1) as f64)).collect();
    out[0] = r_min;
    out[n - 1] = r_max;
    Ok(out)
}
