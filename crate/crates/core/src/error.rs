use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid helix shape: {0}")]
    InvalidShape(String),

    /// The curvature at `phi` is too small for the normal direction to be defined.
    #[error("degenerate Frenet frame at phi = {phi}: curvature {kappa:e} is below the threshold")]
    DegenerateFrame { phi: f64, kappa: f64 },

    #[error("invalid tube point: 1 - q_N * kappa = {g} must be positive")]
    InvalidTubePoint { g: f64 },

    #[error("invalid quadrature spec: {0}")]
    InvalidQuadrature(String),

    /// Point doubling was exhausted. `value` is the best available estimate.
    #[error(
        "quadrature did not converge after {points_used} points (error estimate {error_estimate:e}, tolerance {tolerance:e})"
    )]
    NotConverged {
        value: num_complex::Complex64,
        error_estimate: f64,
        tolerance: f64,
        points_used: usize,
    },

    #[error("matrix is not Hermitian: max |A_mn - conj(A_nm)| = {deviation:e} exceeds {tolerance:e}")]
    HermiticityViolation { deviation: f64, tolerance: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid Bloch basis: {0}")]
    InvalidBasis(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("Boltzmann weight overflows: exponent {exponent} is not representable")]
    Overflow { exponent: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
