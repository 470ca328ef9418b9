//! Shared fixtures for the criterion benchmarks.

use conekit_core::{sphere_spectrum, ConePoint, CrossPoint, CrossSectionSpectrum};

/// Unit-sphere spectrum for d = 3 with constant potential `c`.
pub fn sphere3(c: f64) -> CrossSectionSpectrum {
    sphere_spectrum(3, 1.0, c, None).expect("admissible potential")
}

/// Points at radii r and r' separated by angle `gamma` on S^2.
pub fn pair(r: f64, rp: f64, gamma: f64) -> (ConePoint, ConePoint) {
    (
        ConePoint::new(r, CrossPoint::sphere_at_angle(2, gamma)).expect("r > 0"),
        ConePoint::new(rp, CrossPoint::sphere_pole(2)).expect("r' > 0"),
    )
}
