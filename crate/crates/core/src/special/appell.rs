//! Appell's first hypergeometric function of two variables,
//!
//! `F1(α, β, β′, γ; x, y) = Σ_{m,n} (α)_{m+n} (β)_m (β′)_n / ((γ)_{m+n} m! n!) x^m y^n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{CompensatedSum, EvalResult, Method, StopRule, Tolerance};
use crate::special::euler;
use crate::special::gamma::gauss_unit_factor;
use crate::special::gauss::{gauss_2f1_complement, is_nonpositive_integer};
use crate::special::SERIES_RADIUS;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AppellF1Params {
    pub alpha: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
    pub x: f64,
    pub y: f64,
    #[serde(skip)]
    xc: Option<f64>,
    #[serde(skip)]
    yc: Option<f64>,
}

impl AppellF1Params {
    pub fn new(alpha: f64, beta: f64, beta_prime: f64, gamma: f64, x: f64, y: f64) -> Self {
        Self {
            alpha,
            beta,
            beta_prime,
            gamma,
            x,
            y,
            xc: None,
            yc: None,
        }
    }

    /// Supplies `1 - x` and `1 - y` directly. Variables near 1 lose digits
    /// in the subtraction; geometric callers usually know the complements
    /// exactly as squared axis ratios.
    pub fn with_complements(mut self, one_minus_x: f64, one_minus_y: f64) -> Self {
        self.xc = Some(one_minus_x);
        self.yc = Some(one_minus_y);
        self
    }

    pub fn one_minus_x(&self) -> f64 {
        self.xc.unwrap_or(1.0 - self.x)
    }

    pub fn one_minus_y(&self) -> f64 {
        self.yc.unwrap_or(1.0 - self.y)
    }

    /// The same function with the two variables exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            beta: self.beta_prime,
            beta_prime: self.beta,
            x: self.y,
            y: self.x,
            xc: self.yc,
            yc: self.xc,
            ..*self
        }
    }

    fn validate(&self) -> Result<()> {
        let all = [self.alpha, self.beta, self.beta_prime, self.gamma, self.x, self.y];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("F1 arguments must be finite".into()));
        }
        if is_nonpositive_integer(self.gamma) {
            return Err(Error::Domain(format!("F1 is undefined for gamma = {}", self.gamma)));
        }
        for v in [self.x, self.y] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain(format!("F1 variables must lie in [0, 1], got {v}")));
            }
        }
        for v in [self.one_minus_x(), self.one_minus_y()] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain(format!(
                    "F1 variable complements must lie in [0, 1], got {v}"
                )));
            }
        }
        if self.one_minus_x() == 0.0 && self.one_minus_y() == 0.0 {
            return Err(Error::Domain("F1 with both variables equal to 1".into()));
        }
        Ok(())
    }
}

/// A pending Gauss function call `2F1(alpha, beta; gamma; z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussCall {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub z: f64,
    /// `1 - z`
    pub zc: f64,
}

impl GaussCall {
    pub fn eval(&self, tol: Tolerance) -> Result<EvalResult> {
        gauss_2f1_complement(self.alpha, self.beta, self.gamma, self.z, self.zc, tol)
    }
}

/// Evaluation strategy for [`appell_f1_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum F1Method {
    /// Reductions first, then the dispatch policy of [`appell_f1`].
    Auto,
    DoubleSeries,
    SingleSum,
    Quadrature,
}

/// Gauss-function reduction when one variable equals 1:
/// `F1(α,β,β′,γ; x, 1) = Γ(γ)Γ(γ-α-β′)/(Γ(γ-α)Γ(γ-β′)) · 2F1(α, β; γ-β′; x)`.
pub fn appell_f1_reduce_unit(p: &AppellF1Params) -> Result<(f64, GaussCall)> {
    p.validate()?;
    let (beta_unit, beta_other, other, other_c) = match (p.one_minus_x() == 0.0, p.one_minus_y() == 0.0) {
        (false, true) => (p.beta_prime, p.beta, p.x, p.one_minus_x()),
        (true, false) => (p.beta, p.beta_prime, p.y, p.one_minus_y()),
        _ => {
            return Err(Error::Domain(
                "unit reduction needs exactly one variable equal to 1".into(),
            ))
        }
    };
    let excess = p.gamma - p.alpha - beta_unit;
    if excess <= 0.0 {
        return Err(Error::ReductionConditionViolated {
            condition: "gamma - alpha - beta(unit slot)",
            value: excess,
        });
    }
    let factor = gauss_unit_factor(p.alpha, beta_unit, p.gamma).map_err(|e| match e {
        Error::PoleAtUnit { excess } => Error::ReductionConditionViolated {
            condition: "gamma - alpha - beta(unit slot)",
            value: excess,
        },
        other => other,
    })?;
    Ok((
        factor,
        GaussCall {
            alpha: p.alpha,
            beta: beta_other,
            gamma: p.gamma - beta_unit,
            z: other,
            zc: other_c,
        },
    ))
}

/// Evaluates F1 with automatic method selection.
///
/// Exact reductions (a zero variable, equal variables, a unit variable) are
/// applied first. Otherwise: the anti-diagonal double series when both
/// variables are at most 0.5, the single-sum reduction over the smaller
/// variable when only one is, and quadrature of the Euler integral when both
/// exceed 0.5.
pub fn appell_f1(p: &AppellF1Params, tol: Tolerance) -> Result<EvalResult> {
    appell_f1_with(p, F1Method::Auto, tol)
}

pub fn appell_f1_with(p: &AppellF1Params, method: F1Method, tol: Tolerance) -> Result<EvalResult> {
    p.validate()?;
    match method {
        F1Method::Auto => auto(p, tol),
        F1Method::DoubleSeries => double_series(p, tol),
        F1Method::SingleSum => {
            if p.x <= p.y {
                single_sum(p, tol)
            } else {
                single_sum(&p.swapped(), tol)
            }
        }
        F1Method::Quadrature => euler::hypergeometric_by_quadrature(
            p.alpha,
            p.gamma,
            &[
                euler::Slot::with_complement(p.beta, p.x, p.one_minus_x()),
                euler::Slot::with_complement(p.beta_prime, p.y, p.one_minus_y()),
            ],
            tol,
        ),
    }
}

fn auto(p: &AppellF1Params, tol: Tolerance) -> Result<EvalResult> {
    let AppellF1Params {
        alpha,
        beta,
        beta_prime,
        gamma,
        x,
        y,
        ..
    } = *p;
    let (xc, yc) = (p.one_minus_x(), p.one_minus_y());
    if (x == 0.0 || beta == 0.0) && (y == 0.0 || beta_prime == 0.0) {
        return Ok(EvalResult::exact(1.0));
    }
    if x == 0.0 || beta == 0.0 {
        return gauss_2f1_complement(alpha, beta_prime, gamma, y, yc, tol);
    }
    if y == 0.0 || beta_prime == 0.0 {
        return gauss_2f1_complement(alpha, beta, gamma, x, xc, tol);
    }
    if x == y && xc == yc {
        return gauss_2f1_complement(alpha, beta + beta_prime, gamma, x, xc, tol);
    }
    if xc == 0.0 || yc == 0.0 {
        let (factor, call) = appell_f1_reduce_unit(p)?;
        return call.eval(tol.tightened(0.5)).map(|r| r.scaled(factor));
    }
    let (lo, hi) = (x.min(y), x.max(y));
    if hi <= SERIES_RADIUS {
        return double_series(p, tol);
    }
    let ordered = if x <= y { *p } else { p.swapped() };
    if lo <= SERIES_RADIUS {
        return single_sum(&ordered, tol);
    }
    if euler::admissible(alpha, gamma) {
        match euler::hypergeometric_by_quadrature(
            alpha,
            gamma,
            &[
                euler::Slot::with_complement(beta, x, xc),
                euler::Slot::with_complement(beta_prime, y, yc),
            ],
            tol,
        ) {
            Err(Error::UnsupportedGamma(_)) => {}
            other => return other,
        }
    }
    single_sum(&ordered, tol)
}

/// Anti-diagonal summation: diagonal `k` is
/// `(α)_k/(γ)_k Σ_{m+n=k} [(β)_m x^m/m!] [(β′)_n y^n/n!]`.
fn double_series(p: &AppellF1Params, tol: Tolerance) -> Result<EvalResult> {
    let r = p.x.abs().max(p.y.abs());
    if r >= 1.0 {
        return Err(Error::Domain("double series needs both variables below 1".into()));
    }
    let mut px = vec![1.0];
    let mut qy = vec![1.0];
    let mut lead = 1.0;
    let mut sum = CompensatedSum::new(1.0);
    let mut rule = StopRule::default();
    let mut prev_mag = 1.0;
    let mut work = 1usize;
    let settle = (2.0
        * [p.alpha, p.beta, p.beta_prime, p.gamma]
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs())))
    .ceil() as usize
        + 2;
    for k in 1.. {
        if work >= tol.max_terms {
            return Err(Error::NonConvergence {
                terms: work,
                estimate: sum.value(),
            });
        }
        let km1 = (k - 1) as f64;
        lead *= (p.alpha + km1) / (p.gamma + km1);
        px.push(px[k - 1] * (p.beta + km1) * p.x / k as f64);
        qy.push(qy[k - 1] * (p.beta_prime + km1) * p.y / k as f64);
        let mut diag = CompensatedSum::default();
        let mut mag = 0.0;
        for m in 0..=k {
            let t = px[m] * qy[k - m];
            diag.add(t);
            mag += t.abs();
        }
        work += k + 1;
        let d = lead * diag.value();
        let mag = lead.abs() * mag;
        sum.add(d);
        if !sum.value().is_finite() {
            return Err(Error::NonConvergence {
                terms: work,
                estimate: sum.value(),
            });
        }
        let ratio = if prev_mag > 0.0 { mag / prev_mag } else { r };
        let rho = ratio.max(r);
        prev_mag = mag;
        let bound = if rho < 1.0 {
            mag * rho / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        if k >= settle && rule.observe(bound, tol.target(sum.value())) {
            return Ok(EvalResult {
                value: sum.value(),
                abs_error_estimate: bound + sum.rounding_bound() + diag.rounding_bound(),
                method: Method::DoubleSeries,
                work,
            });
        }
    }
    unreachable!()
}

/// `F1 = Σ_m (α)_m (β)_m / ((γ)_m m!) x^m · 2F1(α+m, β′; γ+m; y)`, summing over `x`.
fn single_sum(p: &AppellF1Params, tol: Tolerance) -> Result<EvalResult> {
    if p.x >= 1.0 || p.one_minus_x() <= 0.0 {
        return Err(Error::Domain(
            "single-sum reduction needs the outer variable below 1".into(),
        ));
    }
    let inner_tol = tol.tightened(0.1);
    let mut coeff = 1.0;
    let yc = p.one_minus_y();
    let first = gauss_2f1_complement(p.alpha, p.beta_prime, p.gamma, p.y, yc, inner_tol)?;
    let mut sum = CompensatedSum::new(first.value);
    let mut err = first.abs_error_estimate;
    let mut work = first.work;
    let mut rule = StopRule::default();
    let mut prev_mag = first.value.abs();
    let settle = (2.0 * p.alpha.abs().max(p.beta.abs()).max(p.gamma.abs())).ceil() as usize + 2;
    for m in 1.. {
        if work >= tol.max_terms {
            return Err(Error::NonConvergence {
                terms: work,
                estimate: sum.value(),
            });
        }
        let mm1 = (m - 1) as f64;
        coeff *= (p.alpha + mm1) * (p.beta + mm1) / ((p.gamma + mm1) * m as f64) * p.x;
        if coeff == 0.0 {
            break;
        }
        let mf = m as f64;
        let inner = gauss_2f1_complement(p.alpha + mf, p.beta_prime, p.gamma + mf, p.y, yc, inner_tol)?;
        work += inner.work;
        let term = coeff * inner.value;
        sum.add(term);
        err += coeff.abs() * inner.abs_error_estimate;
        let mag = term.abs();
        let ratio = if prev_mag > 0.0 { mag / prev_mag } else { p.x };
        prev_mag = mag;
        let rho = ratio.max(p.x);
        let bound = if rho < 1.0 {
            mag * rho / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        if m >= settle && rule.observe(bound, tol.target(sum.value())) {
            err += bound;
            break;
        }
    }
    Ok(EvalResult {
        value: sum.value(),
        abs_error_estimate: err + sum.rounding_bound(),
        method: Method::SingleSumReduction,
        work,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gauss::gauss_2f1;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn origin_is_one() {
        let p = AppellF1Params::new(0.3, -1.7, 2.2, 4.5, 0.0, 0.0);
        let r = appell_f1(&p, tol()).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.method, Method::ClosedForm);
    }

    #[test]
    fn equal_variables_reduce() {
        let z = 1.0 - 0.25f64.powi(2) / 4.0;
        let p = AppellF1Params::new(0.5, -0.5, 1.5, 1.5, z, z);
        let r = appell_f1(&p, tol()).unwrap();
        let g = gauss_2f1(0.5, 1.0, 1.5, z, tol()).unwrap();
        assert_eq!(r.value, g.value);
        // also against the forced quadrature route
        let q = appell_f1_with(&p, F1Method::Quadrature, tol()).unwrap();
        assert_relative_eq!(q.value, g.value, max_relative = 1e-12);
    }

    #[test]
    fn capacitance_table_entry() {
        // reciprocal of C/a = 0.50822148949 for (a,b,c) = (5,2,1)
        let p = AppellF1Params::new(0.5, 0.5, 0.5, 1.5, 0.84, 0.96);
        let r = appell_f1(&p, tol()).unwrap();
        assert_eq!(r.method, Method::IntegralQuadrature);
        assert_relative_eq!(1.0 / r.value, 0.508_221_489_490_507_9, max_relative = 1e-13);
        assert_relative_eq!(r.value, 1.967_647, max_relative = 1e-6);
    }

    #[test]
    fn unit_reduction_factor() {
        let mu = 0.37;
        let p = AppellF1Params::new(0.5, -0.5, 0.5, 1.5, mu, 1.0);
        let (factor, call) = appell_f1_reduce_unit(&p).unwrap();
        assert_relative_eq!(factor, PI / 2.0, max_relative = 1e-15);
        assert_eq!(
            call,
            GaussCall {
                alpha: 0.5,
                beta: -0.5,
                gamma: 1.0,
                z: mu,
                zc: 1.0 - mu
            }
        );
        let direct = appell_f1_with(&p, F1Method::Quadrature, tol()).unwrap();
        let reduced = factor * call.eval(tol()).unwrap().value;
        assert_relative_eq!(direct.value, reduced, max_relative = 1e-12);
    }

    #[test]
    fn unit_reduction_rejections() {
        let zero = AppellF1Params::new(0.5, -0.5, 0.5, 1.5, 0.3, 0.0);
        assert!(matches!(appell_f1_reduce_unit(&zero), Err(Error::Domain(_))));
        let both = AppellF1Params::new(0.5, -0.5, 0.5, 1.5, 1.0, 1.0);
        assert!(matches!(appell_f1_reduce_unit(&both), Err(Error::Domain(_))));
        assert!(matches!(appell_f1(&both, tol()), Err(Error::Domain(_))));
        let pole = AppellF1Params::new(0.5, 0.5, 1.0, 1.5, 0.3, 1.0);
        assert!(matches!(
            appell_f1_reduce_unit(&pole),
            Err(Error::ReductionConditionViolated { .. })
        ));
        assert!(matches!(
            appell_f1(&pole, tol()),
            Err(Error::ReductionConditionViolated { .. })
        ));
    }

    #[test]
    fn domain_checks() {
        let p = AppellF1Params::new(0.5, 0.5, 0.5, 1.5, 1.2, 0.1);
        assert!(matches!(appell_f1(&p, tol()), Err(Error::Domain(_))));
        let p = AppellF1Params::new(0.5, 0.5, 0.5, -2.0, 0.2, 0.1);
        assert!(matches!(appell_f1(&p, tol()), Err(Error::Domain(_))));
    }

    #[test]
    fn dispatch_records_path() {
        let base = AppellF1Params::new(1.5, 0.5, 0.5, 2.5, 0.2, 0.4);
        assert_eq!(appell_f1(&base, tol()).unwrap().method, Method::DoubleSeries);
        let p = AppellF1Params { y: 0.9, ..base };
        assert_eq!(appell_f1(&p, tol()).unwrap().method, Method::SingleSumReduction);
        let p = AppellF1Params { x: 0.7, y: 0.9, ..base };
        assert_eq!(appell_f1(&p, tol()).unwrap().method, Method::IntegralQuadrature);
    }

    #[test]
    fn methods_agree_on_paper_parameter_sets() {
        let sets = [
            (0.5, 0.5, 0.5, 1.5),
            (0.5, -0.5, 1.5, 1.5),
            (0.5, -0.5, 1.5, 2.5),
            (1.5, 0.5, 0.5, 2.5),
            (1.5, 1.5, 0.5, 2.5),
            (1.5, 0.5, 1.5, 2.5),
        ];
        let grid = [0.1, 0.3, 0.5, 0.7, 0.9];
        for (a, b, bp, c) in sets {
            for &x in &grid {
                for &y in &grid {
                    let p = AppellF1Params::new(a, b, bp, c, x, y);
                    let ds = appell_f1_with(&p, F1Method::DoubleSeries, tol()).unwrap().value;
                    let ss = appell_f1_with(&p, F1Method::SingleSum, tol()).unwrap().value;
                    let q = appell_f1_with(&p, F1Method::Quadrature, tol()).unwrap().value;
                    assert_relative_eq!(ds, ss, max_relative = 1e-10);
                    assert_relative_eq!(ds, q, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn symmetry_under_exchange() {
        let p = AppellF1Params::new(0.5, -0.5, 1.5, 2.5, 0.35, 0.85);
        let a = appell_f1(&p, tol()).unwrap().value;
        let b = appell_f1(&p.swapped(), tol()).unwrap().value;
        assert_relative_eq!(a, b, max_relative = 1e-13);
    }
}
