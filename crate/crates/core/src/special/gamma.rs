//! Pochhammer symbols and the gamma function at integer and half-integer points.
//!
//! Every gamma factor in the ellipsoid formulas has an argument `k/2`, so only
//! those are supported: integers through the factorial and half-integers
//! through `Γ(k + 1/2) = (2k)! √π / (4^k k!)`. Other arguments are rejected.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Rising factorial `(base)_count = base (base+1) ... (base+count-1)`.
pub fn pochhammer(base: f64, count: u32) -> f64 {
    (0..count).fold(1.0, |acc, k| acc * (base + f64::from(k)))
}

/// `Γ(two_n / 2)` for `two_n >= 1`.
pub fn gamma_half_integer(two_n: i64) -> Result<f64> {
    if two_n <= 0 {
        return Err(Error::Domain(format!(
            "gamma_half_integer needs a positive argument, got {two_n}/2"
        )));
    }
    Ok(positive_half_gamma(two_n))
}

fn positive_half_gamma(two_n: i64) -> f64 {
    debug_assert!(two_n > 0);
    if two_n % 2 == 0 {
        // (k-1)!
        let k = two_n / 2;
        (1..k).fold(1.0, |acc, j| acc * j as f64)
    } else {
        // √π · (1/2)(3/2)...(k - 1/2)
        let k = (two_n - 1) / 2;
        (0..k).fold(PI.sqrt(), |acc, j| acc * (j as f64 + 0.5))
    }
}

/// Returns `Some(2x)` when `x` is an exact multiple of one half.
pub(crate) fn as_half_integer(x: f64) -> Option<i64> {
    let twice = 2.0 * x;
    (twice.is_finite() && twice == twice.round() && twice.abs() < 1e15).then_some(twice as i64)
}

/// Γ at any integer or half-integer argument that is not a pole.
pub(crate) fn gamma(x: f64) -> Result<f64> {
    let two_n = as_half_integer(x).ok_or(Error::UnsupportedGamma(x))?;
    if two_n > 0 {
        return Ok(positive_half_gamma(two_n));
    }
    if two_n % 2 == 0 {
        return Err(Error::Domain(format!("gamma has a pole at {x}")));
    }
    // Γ(x) = Γ(x + k) / (x (x+1) ... (x+k-1)) with x + k = 1/2.
    let k = (1 - two_n) / 2;
    Ok(positive_half_gamma(1) / pochhammer(x, k as u32))
}

/// `1/Γ(x)`, zero at the poles.
pub(crate) fn reciprocal_gamma(x: f64) -> Result<f64> {
    match as_half_integer(x) {
        Some(two_n) if two_n <= 0 && two_n % 2 == 0 => Ok(0.0),
        _ => gamma(x).map(f64::recip),
    }
}

/// Gauss summation `2F1(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))`, valid for `c-a-b > 0`.
pub(crate) fn gauss_unit_factor(a: f64, b: f64, c: f64) -> Result<f64> {
    let excess = c - a - b;
    if excess <= 0.0 {
        return Err(Error::PoleAtUnit { excess });
    }
    Ok(gamma(c)? * gamma(excess)? * reciprocal_gamma(c - a)? * reciprocal_gamma(c - b)?)
}

/// `Γ(gamma) / (Γ(alpha) Γ(gamma - alpha))`, the inverse Beta normalisation of Euler integrals.
pub(crate) fn inverse_beta(alpha: f64, gamma_param: f64) -> Result<f64> {
    Ok(gamma(gamma_param)? * reciprocal_gamma(alpha)? * reciprocal_gamma(gamma_param - alpha)?)
}
