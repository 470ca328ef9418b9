//! Numerical kernels for Schrodinger operators with inverse-square
//! potentials on metric cones.

pub mod bessel;
pub mod config;
pub mod error;
pub mod geometry;
pub mod lpcheck;
pub mod quadrature;
pub mod report;
pub mod resolvent;
pub mod riesz;
pub mod special;
pub mod spectrum;

pub use config::Tolerances;
pub use error::{ConeError, Result};
pub use geometry::{cone_distance, diag_defining, log_radial_grid, ConeGeometry, ConePoint, CrossPoint, CrossSection};
pub use lpcheck::{lp_norm_probe, riesz_model_intervals, schur_bounded, HomogeneousKernelSpec, NormProbeResult};
pub use resolvent::{
    boundary_order_probe, indicial_kernel, resolvent_gradient, resolvent_kernel, zf_compatibility_check, DensityGauge,
    GradientValue, KernelValue, ResolventRequest,
};
pub use riesz::{
    l2_bound_constant, offdiag_bound_check, riesz_kernel, threshold_interval, threshold_interval_constant,
    threshold_interval_zero_potential, PInterval, RieszKernelValue,
};
pub use spectrum::{load_spectrum, sphere_spectrum, torus_spectrum, CrossSectionSpectrum, Mode};
