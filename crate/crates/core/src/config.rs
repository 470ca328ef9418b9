//! Numerical tolerances shared across modules.

/// Central tolerance record. `Tolerances::default()` is what every public
/// operation uses unless a caller passes its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for comparing branch values of the cone distance.
    pub distance_branch: f64,
    /// Ratio r>/r< at or above which series evaluation is certified.
    pub certified_ratio: f64,
    /// Default relative truncation target for resolvent series.
    pub series_rel_tol: f64,
    /// Relative tolerance for the lambda quadrature in Riesz kernels.
    pub riesz_rel_tol: f64,
    /// Relative tolerance used when merging eigenvalues into one mode.
    pub mode_merge: f64,
    /// Convergence tolerance on successive norm ratios in the Lp probe.
    pub probe_tol: f64,
    /// Iteration cap in the Lp probe.
    pub probe_max_iter: usize,
    /// Maximum number of subintervals for adaptive quadrature.
    pub quad_max_panels: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            distance_branch: 1e-10,
            certified_ratio: 4.0,
            series_rel_tol: 1e-10,
            riesz_rel_tol: 1e-8,
            mode_merge: 1e-12,
            probe_tol: 1e-6,
            probe_max_iter: 200,
            quad_max_panels: 4000,
        }
    }
}
