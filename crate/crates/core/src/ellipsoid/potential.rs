use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::ellipsoid::shape::EllipsoidShape;
use crate::error::{Error, Result};
use crate::eval::Tolerance;
use crate::special::appell::{appell_f1, AppellF1Params};

/// Interior potential written as `Φ = amplitude · (1 - x²/α² - y²/β² - z²/γ²)`,
/// with coordinates along the canonical axes `a >= b >= c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialCoefficients {
    pub alpha_sq: f64,
    pub beta_sq: f64,
    pub gamma_sq: f64,
    pub amplitude: f64,
}

impl PotentialCoefficients {
    /// `(L, M, N, W)` implied by the coefficients.
    pub fn quadratic_form(&self) -> [f64; 4] {
        [
            self.amplitude / self.alpha_sq,
            self.amplitude / self.beta_sq,
            self.amplitude / self.gamma_sq,
            self.amplitude,
        ]
    }
}

/// With `F_C = F1(1/2,1/2,1/2,3/2; x, y)` and the three demagnetizing F1 values
/// `F_L, F_M, F_N`: `α² = 3 F_C/F_L · a²`, `β² = 3 F_C/F_M · a²`,
/// `γ² = 3 F_C/F_N · a²` and `amplitude = 2κπ (b/a)(c/a) a² F_C`.
///
/// All three radii scale with `a²`: each demagnetizing factor carries the
/// same prefactor `bc/a²`, so `amplitude/β² = M` and `amplitude/γ² = N`
/// require it.
pub fn interior_potential(shape: &EllipsoidShape, kappa: f64, tol: Tolerance) -> Result<PotentialCoefficients> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    shape.require_solid()?;
    let (a, b, c) = (shape.a(), shape.b(), shape.c());
    let (x, y) = (shape.x(), shape.y());
    let f = |alpha, beta, beta_prime, gamma| -> Result<f64> {
        Ok(appell_f1(&AppellF1Params::new(alpha, beta, beta_prime, gamma, x, y), tol)?.value)
    };
    let fc = f(0.5, 0.5, 0.5, 1.5)?;
    let fl = f(1.5, 0.5, 0.5, 2.5)?;
    let fm = f(1.5, 1.5, 0.5, 2.5)?;
    let fn_ = f(1.5, 0.5, 1.5, 2.5)?;
    Ok(PotentialCoefficients {
        alpha_sq: 3.0 * fc / fl * a * a,
        beta_sq: 3.0 * fc / fm * a * a,
        gamma_sq: 3.0 * fc / fn_ * a * a,
        amplitude: 2.0 * kappa * PI * (b / a) * (c / a) * a * a * fc,
    })
}
