//! Quadrature of the Euler integral shared by Appell F1 and Lauricella F_D:
//!
//! `∫₀¹ u^{α-1} (1-u)^{γ-α-1} Π_j (1 - z_j u)^{-β_j} du = B(α, γ-α) · F_D(α, β; γ; z)`.
//!
//! The interval is split at 1/2. The lower half uses `u = t²` and the upper
//! half `1 - u = s²`, so for half-integer `α` and `γ - α` both endpoint
//! factors become polynomial in the new variable. In the upper half each
//! factor is evaluated as `(1 - z) + z s²` from a separately supplied
//! `1 - z`, which stays accurate when `z` is at or near 1.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, Tolerance};
use crate::quadrature::{decade_cuts, gauss_kronrod, integrate_pieces, QuadOptions};
use crate::special::gamma::inverse_beta;

/// One `(β, z)` slot of the integrand, with `zc = 1 - z` carried separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Slot {
    pub beta: f64,
    pub z: f64,
    pub zc: f64,
}

impl Slot {
    pub fn new(beta: f64, z: f64) -> Self {
        Self { beta, z, zc: 1.0 - z }
    }

    pub fn with_complement(beta: f64, z: f64, zc: f64) -> Self {
        Self { beta, z, zc }
    }
}

pub(crate) fn admissible(alpha: f64, gamma: f64) -> bool {
    alpha > 0.0 && gamma - alpha > 0.0
}

/// Raw integral value (without the Beta normalisation).
pub(crate) fn euler_integral(alpha: f64, gamma: f64, slots: &[Slot], tol: Tolerance) -> Result<(f64, f64, usize)> {
    if !admissible(alpha, gamma) {
        return Err(Error::Domain(format!(
            "integral representation needs alpha > 0 and gamma - alpha > 0 (alpha = {alpha}, gamma = {gamma})"
        )));
    }
    let p_low = 2.0 * alpha - 1.0;
    let q_low = gamma - alpha - 1.0;
    let p_high = 2.0 * (gamma - alpha) - 1.0;
    let q_high = alpha - 1.0;
    let lower = |t: f64| {
        let u = t * t;
        let mut v = 2.0 * t.powf(p_low) * (1.0 - u).powf(q_low);
        for sl in slots {
            v *= (1.0 - sl.z * u).powf(-sl.beta);
        }
        v
    };
    let upper = |s: f64| {
        let s2 = s * s;
        let mut v = 2.0 * s.powf(p_high) * (1.0 - s2).powf(q_high);
        for sl in slots {
            v *= (sl.zc + sl.z * s2).powf(-sl.beta);
        }
        v
    };
    let edge = std::f64::consts::FRAC_1_SQRT_2;
    // Each half gets half the node budget and a slightly tighter target.
    let opts = QuadOptions {
        abs_tol: tol.abs,
        rel_tol: tol.rel * 0.5,
        max_depth: tol.max_quad_depth,
        max_evals: tol.max_terms / 2,
    };
    let lo = gauss_kronrod(lower, 0.0, edge, &opts);
    // a variable within `zc` of 1 puts a knee at `s ≈ √zc`
    let knee = slots
        .iter()
        .map(|sl| sl.zc)
        .filter(|&c| c > 0.0)
        .fold(1.0, f64::min)
        .sqrt();
    let hi = integrate_pieces(upper, 0.0, edge, decade_cuts(knee, edge), &opts, |g, a, b, o| {
        gauss_kronrod(g, a, b, o)
    });
    let total = lo.combine(hi);
    // GK cannot certify much below 100 ulp
    let target = tol.target(total.value).max(100.0 * f64::EPSILON * total.value.abs());
    if !(total.value.is_finite() && total.abs_error <= target && total.evaluations <= tol.max_terms) {
        return Err(Error::QuadratureFailure {
            estimate: total.value,
            error: total.abs_error,
        });
    }
    Ok((total.value, total.abs_error, total.evaluations))
}

/// `F_D(α, β; γ; z)` from the normalised integral.
pub(crate) fn hypergeometric_by_quadrature(
    alpha: f64,
    gamma: f64,
    slots: &[Slot],
    tol: Tolerance,
) -> Result<EvalResult> {
    let norm = inverse_beta(alpha, gamma)?;
    let (value, err, work) = euler_integral(alpha, gamma, slots, tol.tightened(0.5))?;
    Ok(EvalResult {
        value: value * norm,
        abs_error_estimate: (err + 4.0 * f64::EPSILON * value.abs()) * norm.abs(),
        method: Method::IntegralQuadrature,
        work,
    })
}
