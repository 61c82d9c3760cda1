use thiserror::Error;

/// Failures raised by the special-function, ellipsoid and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms (partial sum {estimate:e})")]
    NonConvergence { terms: usize, estimate: f64 },

    #[error("2F1 diverges at z = 1: gamma - alpha - beta = {excess} is not positive")]
    PoleAtUnit { excess: f64 },

    #[error("unit-argument reduction needs {condition} > 0, got {value}")]
    ReductionConditionViolated { condition: &'static str, value: f64 },

    #[error("degenerate shape: {0}")]
    DegenerateShape(String),

    #[error("shape is not a {expected}")]
    KindMismatch { expected: &'static str },

    #[error("quadrature failed to reach tolerance: estimate {estimate:e}, error bound {error:e}")]
    QuadratureFailure { estimate: f64, error: f64 },

    #[error("gamma is only evaluated at integer and half-integer arguments, got {0}")]
    UnsupportedGamma(f64),
}

impl Error {
    /// True for failures caused by iteration or tolerance limits rather than bad input.
    pub fn is_convergence_failure(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::QuadratureFailure { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
