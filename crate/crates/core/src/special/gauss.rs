//! Gauss hypergeometric function `2F1(α, β; γ; z)` for real parameters and `z <= 1`.

use crate::error::{Error, Result};
use crate::eval::{CompensatedSum, EvalResult, Method, StopRule, Tolerance};
use crate::special::euler;
use crate::special::gamma::gauss_unit_factor;
use crate::special::SERIES_RADIUS;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Evaluates `2F1(alpha, beta; gamma; z)`.
///
/// Dispatch: the direct series for `|z| <= 0.5`; for `0.5 < z < 1` the Euler
/// transformation `(1-z)^{γ-α-β} 2F1(γ-α, γ-β; γ; z)` whenever it speeds up
/// the tail, then the series, or the Euler integral once `z > 0.9`; Gauss summation at `z = 1`; the Pfaff
/// transformation onto `z/(z-1)` for `z < -0.5`.
pub fn gauss_2f1(alpha: f64, beta: f64, gamma: f64, z: f64, tol: Tolerance) -> Result<EvalResult> {
    gauss_2f1_complement(alpha, beta, gamma, z, 1.0 - z, tol)
}

/// [`gauss_2f1`] with `zc = 1 - z` supplied by the caller, for arguments
/// close to 1 whose complement is known more accurately than `1 - z`.
pub(crate) fn gauss_2f1_complement(
    alpha: f64,
    beta: f64,
    gamma: f64,
    z: f64,
    zc: f64,
    tol: Tolerance,
) -> Result<EvalResult> {
    if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite() && z.is_finite() && zc.is_finite()) {
        return Err(Error::Domain("2F1 arguments must be finite".into()));
    }
    if z > 1.0 {
        return Err(Error::Domain(format!("2F1 needs z <= 1, got {z}")));
    }
    if z == 0.0 || alpha == 0.0 || beta == 0.0 {
        return Ok(EvalResult::exact(1.0));
    }
    let terminates = is_nonpositive_integer(alpha) || is_nonpositive_integer(beta);
    if is_nonpositive_integer(gamma) && !terminates {
        return Err(Error::Domain(format!("2F1 is undefined for gamma = {gamma}")));
    }
    if zc == 0.0 {
        let value = gauss_unit_factor(alpha, beta, gamma)?;
        return Ok(EvalResult::closed_form(value));
    }
    if z < -SERIES_RADIUS && !terminates {
        // Pfaff: (1-z)^{-a} F(a, c-b; c; z/(z-1)), new argument in (1/3, 1)
        let w = z / (z - 1.0);
        let prefactor = zc.powf(-alpha);
        return gauss_2f1_complement(alpha, gamma - beta, gamma, w, 1.0 / zc, tol).map(|r| r.scaled(prefactor));
    }
    if z > SERIES_RADIUS && !terminates {
        let excess = gamma - alpha - beta;
        let euler_terminates = is_nonpositive_integer(gamma - alpha) || is_nonpositive_integer(gamma - beta);
        if excess < 0.0 || euler_terminates {
            let prefactor = zc.powf(excess);
            let inner = upper_half(gamma - alpha, gamma - beta, gamma, z, zc, tol)?;
            return Ok(inner.scaled(prefactor));
        }
        return upper_half(alpha, beta, gamma, z, zc, tol);
    }
    series(alpha, beta, gamma, z, tol)
}

/// Beyond this the series needs too many terms when `γ-α-β >= 0`.
const INTEGRAL_THRESHOLD: f64 = 0.9;

fn upper_half(a: f64, b: f64, c: f64, z: f64, zc: f64, tol: Tolerance) -> Result<EvalResult> {
    let terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if z > INTEGRAL_THRESHOLD && !terminates {
        // 2F1 = F_D with one slot; either numerator parameter can play the role of α
        for (outer, slot) in [(b, a), (a, b)] {
            if !euler::admissible(outer, c) {
                continue;
            }
            match euler::hypergeometric_by_quadrature(outer, c, &[euler::Slot::with_complement(slot, z, zc)], tol) {
                Err(Error::UnsupportedGamma(_)) => {}
                other => return other,
            }
        }
    }
    series(a, b, c, z, tol)
}

/// Direct hypergeometric series with a ratio-based tail bound.
///
/// After term `t_n` the remaining tail is bounded by `|t_n| ρ/(1-ρ)` with
/// `ρ = max(|t_{n+1}/t_n|, |z|)`; the term ratios are monotone once `n`
/// exceeds the parameter magnitudes, so this holds from that point on.
pub(crate) fn series(a: f64, b: f64, c: f64, z: f64, tol: Tolerance) -> Result<EvalResult> {
    let mut term = 1.0;
    let mut sum = CompensatedSum::new(1.0);
    let mut rule = StopRule::default();
    let settle = (2.0 * a.abs().max(b.abs()).max(c.abs())).ceil() as usize + 2;
    let mut n = 0usize;
    loop {
        if n >= tol.max_terms {
            return Err(Error::NonConvergence {
                terms: n,
                estimate: sum.value(),
            });
        }
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        term *= ratio;
        n += 1;
        if term == 0.0 {
            // terminating polynomial
            return Ok(EvalResult {
                value: sum.value(),
                abs_error_estimate: sum.rounding_bound(),
                method: Method::Series,
                work: n,
            });
        }
        sum.add(term);
        if !term.is_finite() {
            return Err(Error::NonConvergence {
                terms: n,
                estimate: sum.value(),
            });
        }
        let next_ratio = ((a + nf + 1.0) * (b + nf + 1.0) / ((c + nf + 1.0) * (nf + 2.0)) * z).abs();
        let rho = next_ratio.max(z.abs());
        let bound = if rho < 1.0 {
            term.abs() * rho / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        let target = tol.target(sum.value());
        if n >= settle && rule.observe(bound, target) {
            return Ok(EvalResult {
                value: sum.value(),
                abs_error_estimate: bound + sum.rounding_bound(),
                method: Method::Series,
                work: n,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn f(a: f64, b: f64, c: f64, z: f64) -> f64 {
        gauss_2f1(a, b, c, z, Tolerance::default()).unwrap().value
    }

    #[test]
    fn arcsine_identity() {
        assert_relative_eq!(f(0.5, 0.5, 1.5, 0.25), PI / 3.0, max_relative = 1e-14);
        assert_relative_eq!(f(0.5, 0.5, 1.5, 0.25), 1.047_197_551_196_597_6, max_relative = 1e-14);
    }

    #[test]
    fn log_identity() {
        assert_relative_eq!(f(0.5, 1.0, 1.5, 0.25), 3f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn unit_normalisation() {
        assert_eq!(f(2.3, -0.7, 4.1, 0.0), 1.0);
    }

    #[test]
    fn near_unit_arguments() {
        // F(1/2,1/2,3/2;z) = asin(√z)/√z for z close to 1
        for z in [0.6, 0.9, 0.99, 0.9999, 0.999_999] {
            let s: f64 = f64::sqrt(z);
            assert_relative_eq!(f(0.5, 0.5, 1.5, z), s.asin() / s, max_relative = 1e-13);
            // F(1/2,1,3/2;z) = atanh(√z)/√z, with atanh formed from 1 - z directly
            let atanh = 0.5 * (2.0 * s.ln_1p() - (1.0 - z).ln());
            assert_relative_eq!(f(0.5, 1.0, 1.5, z), atanh / s, max_relative = 1e-12);
        }
    }

    #[test]
    fn supplied_complement_near_one() {
        // F(1/2,1,3/2;z) = atanh(√z)/√z with 1 - √z = zc/(1 + √z); z itself
        // rounds to 1 for the smallest complements
        for zc in [1e-6, 1e-10, 1e-14, 1e-18, 1e-30] {
            let z: f64 = 1.0 - zc;
            let s = z.sqrt();
            let atanh = 0.5 * ((1.0 + s).powi(2) / zc).ln();
            let r = gauss_2f1_complement(0.5, 1.0, 1.5, z, zc, Tolerance::default()).unwrap();
            assert_relative_eq!(r.value, atanh / s, max_relative = 1e-13);
        }
    }

    #[test]
    fn euler_branch_for_negative_excess() {
        // F(1/2,3/2,3/2;z) = (1-z)^{-1/2}
        for z in [0.3, 0.75, 0.99] {
            let r = gauss_2f1(0.5, 1.5, 1.5, z, Tolerance::default()).unwrap();
            assert_relative_eq!(r.value, 1.0 / (1.0 - z).sqrt(), max_relative = 1e-14);
        }
    }

    #[test]
    fn pfaff_branch_for_negative_z() {
        // log(1+x)/x = F(1,1;2;-x)
        for x in [0.3, 0.8, 3.0, 20.0] {
            assert_relative_eq!(f(1.0, 1.0, 2.0, -x), (1.0 + x).ln() / x, max_relative = 1e-13);
        }
    }

    #[test]
    fn gauss_summation() {
        // F(1/2,-1/2;1;1) = Γ(1)Γ(1)/(Γ(1/2)Γ(3/2)) = 2/π
        assert_relative_eq!(f(0.5, -0.5, 1.0, 1.0), 2.0 / PI, max_relative = 1e-15);
        assert!(matches!(
            gauss_2f1(0.5, 0.5, 1.0, 1.0, Tolerance::default()),
            Err(Error::PoleAtUnit { .. })
        ));
    }

    #[test]
    fn terminating_series() {
        // F(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, c, z) = (1.5, 2.5, 0.9);
        let expect = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert_relative_eq!(f(-2.0, b, c, z), expect, max_relative = 1e-14);
    }

    #[test]
    fn domain_errors() {
        let tol = Tolerance::default();
        assert!(matches!(gauss_2f1(0.5, 0.5, 1.5, 1.1, tol), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(0.5, 0.5, -1.0, 0.3, tol), Err(Error::Domain(_))));
    }

    #[test]
    fn term_cap_reports_nonconvergence() {
        let tol = Tolerance {
            max_terms: 10,
            ..Tolerance::default()
        };
        assert!(matches!(
            gauss_2f1(0.5, 1.0, 1.5, 0.85, tol),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn work_within_cap() {
        let r = gauss_2f1(0.5, 0.5, 1.0, 0.9999, Tolerance::default()).unwrap();
        assert!(r.work <= Tolerance::default().max_terms);
        assert!(r.abs_error_estimate.is_finite() && r.abs_error_estimate >= 0.0);
    }
}
