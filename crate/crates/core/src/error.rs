use thiserror::Error;

/// Errors raised by the numerical operations in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConeError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid radial range: need 0 < r_min < r_max and n >= 2 (got r_min={r_min}, r_max={r_max}, n={n})")]
    InvalidRange { r_min: f64, r_max: f64, n: usize },

    #[error("cross-section point does not match the cross-section: {0}")]
    UnsupportedCrossSection(String),

    #[error("positivity violated: {0}")]
    PositivityViolation(String),

    #[error("insufficient spectrum: {0}")]
    InsufficientSpectrum(String),

    #[error("spectrum is norms-only (no addition coefficients); kernel assembly unavailable")]
    NormsOnly,

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("spectrum file error: {0}")]
    SpectrumFile(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),
}

pub type Result<T> = std::result::Result<T, ConeError>;
