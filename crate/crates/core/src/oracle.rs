//! Brute-force quadrature of the defining integrals.
//!
//! Nothing here goes through the hypergeometric series except
//! [`section2_identity_check`], whose right side is by definition an F1 value.
//! Integrals over `u ∈ [0, ∞)` are mapped to `x ∈ (0, 1]` with
//! `1 + u/a₁² = 1/x²`, after which `a_j² + u = (a₁²/x²) q_j(x)` with
//! `q_j = (1 - x²) + (a_j/a₁)² x²`. They are evaluated in `w = 1 - x`, where
//! `q_j = w(2 - w) + r_j²(1 - w)²` has a knee near `w = r_j²`; the interval is
//! split there so thin shapes are resolved.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::ellipsoid::demag::DemagResult;
use crate::ellipsoid::shape::{EllipsoidShape, HyperEllipsoidShape};
use crate::error::{Error, Result};
use crate::eval::{Method, Tolerance};
use crate::quadrature::{
    decade_cuts, integrate, integrate_pieces, integrate_with_fallback, tanh_sinh_offsets, QuadOptions, QuadResult,
    Scheme,
};
use crate::special::appell::{appell_f1, AppellF1Params};
use crate::special::gamma::gamma;
use crate::special::gauss::gauss_2f1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    /// `GaussKronrodAdaptive` falls back to tanh-sinh when its estimate stalls.
    pub scheme: Scheme,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-300,
            rel_tol: 1e-12,
            max_depth: 24,
            scheme: Scheme::GaussKronrodAdaptive,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    /// The same spec with both tolerances scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            abs_tol: self.abs_tol * factor,
            rel_tol: self.rel_tol * factor,
            ..*self
        }
    }

    fn options(&self) -> QuadOptions {
        QuadOptions {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_depth: self.max_depth,
            ..QuadOptions::default()
        }
    }

    fn run<F: FnMut(f64) -> f64>(&self, f: F, a: f64, b: f64) -> QuadResult {
        let opts = self.options();
        match self.scheme {
            Scheme::GaussKronrodAdaptive => integrate_with_fallback(f, a, b, &opts),
            Scheme::DoubleExponential => integrate(f, a, b, Scheme::DoubleExponential, &opts),
        }
    }

    fn run_pieces<F: FnMut(f64) -> f64>(&self, f: F, a: f64, b: f64, cuts: Vec<f64>) -> QuadResult {
        integrate_pieces(f, a, b, cuts, &self.options(), |g, lo, hi, _| self.run(g, lo, hi))
    }

    /// `∫₀¹ f(w) dw`, cut at every decade above the smallest `r²`.
    fn run_split<F: FnMut(f64) -> f64>(&self, f: F, ratios: &[f64]) -> QuadResult {
        let knee = ratios.iter().map(|&r| r * r).filter(|&w| w > 0.0).fold(1.0, f64::min);
        self.run_pieces(f, 0.0, 1.0, decade_cuts(knee, 1.0))
    }

    fn check(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0 && self.rel_tol.is_finite() && self.abs_tol.is_finite()) {
            return Err(Error::Domain("quadrature tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleValue {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

impl OracleValue {
    fn from_quad(r: QuadResult, scale: f64) -> Result<Self> {
        let r = r.into_result()?;
        Ok(Self {
            value: scale * r.value,
            abs_error: scale.abs() * r.abs_error,
            evaluations: r.evaluations,
        })
    }
}

/// `q_j` at `x = 1 - w`.
fn q_factor(w: f64, ratio: f64) -> f64 {
    let x = 1.0 - w;
    w * (2.0 - w) + ratio * ratio * x * x
}

/// Surface area as `8 ∬ √(1+z_x²+z_y²) dx dy` over the positive quadrant of
/// the ellipse `x²/a² + y²/b² <= 1`.
///
/// With `x = a sin θ` and `y = b cos θ sin φ` the edge singularity cancels and
/// the integrand becomes `ab cos θ √(1 - δ sin²θ - ε cos²θ sin²φ)`. The root
/// is evaluated as `√(p cos²φ + g sin²φ)` with `p = cos²θ + (c/a)² sin²θ` and
/// `g = (c/a)² sin²θ + (c/b)² cos²θ`, free of cancellation for flat shapes,
/// and both integrals are split near their knees.
pub fn area_integral(shape: &EllipsoidShape, q: QuadratureSpec) -> Result<OracleValue> {
    q.check()?;
    let (a, b, c) = (shape.a(), shape.b(), shape.c());
    let (ra, rb) = ((c / a).powi(2), (c / b).powi(2));
    let inner_spec = q.scaled(0.1);
    let mut inner_err: f64 = 0.0;
    let mut inner_evals = 0;
    let outer = q.run_pieces(
        |theta| {
            let (s, co) = theta.sin_cos();
            let (s2, c2) = (s * s, co * co);
            let p = c2 + ra * s2;
            let g = ra * s2 + rb * c2;
            let cuts = decade_cuts((g / p).sqrt(), FRAC_PI_2)
                .into_iter()
                .map(|t| FRAC_PI_2 - t)
                .collect();
            let r = inner_spec.run_pieces(
                |phi| {
                    let (sp, cp) = phi.sin_cos();
                    (p * cp * cp + g * sp * sp).sqrt()
                },
                0.0,
                FRAC_PI_2,
                cuts,
            );
            inner_evals += r.evaluations;
            // judged below through its share of the total error
            inner_err = inner_err.max(co * r.abs_error);
            co * r.value
        },
        0.0,
        FRAC_PI_2,
        decade_cuts(c / a, FRAC_PI_2)
            .into_iter()
            .map(|t| FRAC_PI_2 - t)
            .collect(),
    );
    let scale = 8.0 * a * b;
    let error = scale * (outer.abs_error + FRAC_PI_2 * inner_err);
    let target = (q.rel_tol.max(100.0 * f64::EPSILON) * scale * outer.value.abs()).max(q.abs_tol);
    if !(outer.value.is_finite() && error <= target) {
        return Err(Error::QuadratureFailure {
            estimate: scale * outer.value,
            error,
        });
    }
    Ok(OracleValue {
        value: scale * outer.value,
        abs_error: error,
        evaluations: outer.evaluations + inner_evals,
    })
}

/// `1/C = (1/2) ∫₀^∞ du / √∏(a_j² + u)`, which becomes
/// `a₁^{2-n} ∫₀¹ x^{n-3} / √∏q_j dx`.
pub fn capacitance_integral(shape: &HyperEllipsoidShape, q: QuadratureSpec) -> Result<OracleValue> {
    q.check()?;
    let n = shape.dim() as i32;
    let a1 = shape.axes()[0];
    let ratios: Vec<f64> = shape.axes().iter().map(|&aj| aj / a1).collect();
    let r = q.run_split(
        |w| (1.0 - w).powi(n - 3) / ratios.iter().map(|&r| q_factor(w, r)).product::<f64>().sqrt(),
        &ratios,
    );
    let inv = OracleValue::from_quad(r, a1.powi(2 - n))?;
    Ok(OracleValue {
        value: 1.0 / inv.value,
        abs_error: inv.abs_error / (inv.value * inv.value),
        evaluations: inv.evaluations,
    })
}

/// `L_i = πκ ∏a ∫₀^∞ du / ((a_i² + u) √∏(a_j² + u))`, i.e.
/// `2πκ (∏a/a₁ⁿ) ∫₀¹ x^{n-1} / (q_i √∏q_j) dx`. Here `axis` is a
/// canonical (sorted, zero-based) index.
fn factor_integral(ratios: &[f64], axis: usize, kappa: f64, q: &QuadratureSpec) -> Result<OracleValue> {
    let n = ratios.len() as i32;
    let volume: f64 = ratios.iter().product();
    let r = q.run_split(
        |w| {
            let prod: f64 = ratios.iter().map(|&r| q_factor(w, r)).product();
            (1.0 - w).powi(n - 1) / (q_factor(w, ratios[axis]) * prod.sqrt())
        },
        ratios,
    );
    OracleValue::from_quad(r, 2.0 * PI * kappa * volume)
}

fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    Ok(())
}

/// L, M, N and `W = πκabc ∫₀^∞ du/√Δ`, each by its own quadrature.
pub fn demag_integrals(shape: &EllipsoidShape, kappa: f64, q: QuadratureSpec) -> Result<DemagResult> {
    q.check()?;
    check_kappa(kappa)?;
    if shape.is_disk() {
        return Err(Error::DegenerateShape("demagnetizing integrals need c > 0".into()));
    }
    let a = shape.a();
    let ratios = [1.0, shape.b() / a, shape.c() / a];
    let mut coeffs = [0.0; 3];
    let mut err: f64 = 0.0;
    for (i, slot) in coeffs.iter_mut().enumerate() {
        let v = factor_integral(&ratios, i, kappa, &q)?;
        *slot = v.value / (2.0 * PI * kappa);
        err = err.max(v.abs_error / (2.0 * PI * kappa));
    }
    // ∫₀^∞ du/√Δ = (2/a) ∫₀¹ dx/√∏q_j
    let volume: f64 = ratios.iter().product();
    let r = q.run_split(
        |w| 1.0 / ratios.iter().map(|&r| q_factor(w, r)).product::<f64>().sqrt(),
        &ratios,
    );
    let w = OracleValue::from_quad(r, 2.0 * PI * kappa * volume * a * a)?;
    Ok(DemagResult::new(
        coeffs,
        kappa,
        w.value,
        shape,
        Method::IntegralQuadrature,
        err,
    ))
}

/// The n-dimensional factor for the axis at `axis_index` (1-based, input order).
pub fn demag_integral_nd(
    shape: &HyperEllipsoidShape,
    axis_index: usize,
    kappa: f64,
    q: QuadratureSpec,
) -> Result<OracleValue> {
    q.check()?;
    check_kappa(kappa)?;
    let n = shape.dim();
    let k = axis_index
        .checked_sub(1)
        .and_then(|i| shape.canonical_index(i))
        .ok_or_else(|| Error::Domain(format!("axis index must be in 1..={n}, got {axis_index}")))?;
    let a1 = shape.axes()[0];
    let ratios: Vec<f64> = shape.axes().iter().map(|&aj| aj / a1).collect();
    factor_integral(&ratios, k, kappa, &q)
}

/// `∫₀¹ u^{α-1} (1-u)^{γ-α-1} ∏(1 - z_i u)^{-β_i} du` by tanh-sinh on the raw
/// variable, for `γ > α > 0` and every `z_i < 1`.
pub fn euler_integral(alpha: f64, betas: &[f64], gamma_: f64, z: &[f64], q: QuadratureSpec) -> Result<OracleValue> {
    q.check()?;
    if betas.len() != z.len() {
        return Err(Error::Domain("betas and z must have the same length".into()));
    }
    if !(alpha > 0.0 && gamma_ > alpha) {
        return Err(Error::Domain(format!(
            "Euler integral needs gamma > alpha > 0, got alpha = {alpha}, gamma = {gamma_}"
        )));
    }
    if z.iter().any(|&zi| !zi.is_finite() || zi >= 1.0) {
        return Err(Error::Domain("Euler integral needs every z < 1".into()));
    }
    let opts = q.options();
    let r = tanh_sinh_offsets(
        |_, u, v| {
            let mut y = u.powf(alpha - 1.0) * v.powf(gamma_ - alpha - 1.0);
            for (&b, &zi) in betas.iter().zip(z) {
                // 1 - z u written so that it stays accurate as u -> 1
                y *= ((1.0 - zi) + zi * v).powf(-b);
            }
            y
        },
        0.0,
        1.0,
        &opts,
    );
    OracleValue::from_quad(r, 1.0)
}

/// `F_D(α; β; γ; z)` from its Euler integral, normalized by
/// `Γ(γ)/(Γ(α)Γ(γ-α))`. Gamma arguments must be integers or half-integers.
pub fn lauricella_fd_integral(
    alpha: f64,
    betas: &[f64],
    gamma_: f64,
    z: &[f64],
    q: QuadratureSpec,
) -> Result<OracleValue> {
    let raw = euler_integral(alpha, betas, gamma_, z, q)?;
    let norm = gamma(gamma_)? / (gamma(alpha)? * gamma(gamma_ - alpha)?);
    Ok(OracleValue {
        value: raw.value * norm,
        abs_error: raw.abs_error * norm.abs(),
        evaluations: raw.evaluations,
    })
}

/// Both sides of
/// `∫₀¹ √(1-δx²) (π/2) F(1/2, -1/2; 1; (1-x²)ε/(1-δx²)) dx
///  = (π/2)(1-δ) F1(1/2, -1/2, 3/2; 3/2; ε, δ) + (π/6) δ F1(1/2, -1/2, 3/2; 5/2; ε, δ)`,
/// the left by quadrature over Gauss function values, the right by [`appell_f1`].
pub fn section2_identity_check(delta: f64, epsilon: f64, q: QuadratureSpec) -> Result<(f64, f64)> {
    q.check()?;
    if !(0.0 <= epsilon && epsilon <= delta && delta < 1.0) {
        return Err(Error::Domain(format!(
            "need 0 <= epsilon <= delta < 1, got delta = {delta}, epsilon = {epsilon}"
        )));
    }
    let inner = Tolerance::with_rel((q.rel_tol * 0.01).max(1e-15));
    let mut failure = None;
    let r = q.run(
        |x| {
            let d = 1.0 - delta * x * x;
            let w = (1.0 - x) * (1.0 + x) * epsilon / d;
            match gauss_2f1(0.5, -0.5, 1.0, w, inner) {
                Ok(f) => d.sqrt() * FRAC_PI_2 * f.value,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        0.0,
        1.0,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let lhs = r.into_result()?.value;
    let tol = Tolerance::with_rel((q.rel_tol * 0.1).max(1e-15));
    let f3 = appell_f1(&AppellF1Params::new(0.5, -0.5, 1.5, 1.5, epsilon, delta), tol)?.value;
    let f5 = appell_f1(&AppellF1Params::new(0.5, -0.5, 1.5, 2.5, epsilon, delta), tol)?.value;
    let rhs = FRAC_PI_2 * (1.0 - delta) * f3 + PI / 6.0 * delta * f5;
    Ok((lhs, rhs))
}
