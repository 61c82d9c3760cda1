//! Lauricella's `F_D(α, β₁..β_m; γ; z₁..z_m)`.
//!
//! Grouping the multiple series by total degree gives
//! `F_D = Σ_k (α)_k/(γ)_k · c_k`, where `c_k` is the coefficient of `t^k` in
//! `Π_j (1 - z_j t)^{-β_j}`. The coefficients follow from the logarithmic
//! derivative: `k c_k = Σ_{i=1..k} s_i c_{k-i}` with `s_i = Σ_j β_j z_j^i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{CompensatedSum, EvalResult, Method, StopRule, Tolerance};
use crate::special::euler;
use crate::special::gamma::gauss_unit_factor;
use crate::special::gauss::{gauss_2f1_complement, is_nonpositive_integer};
use crate::special::SERIES_RADIUS;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LauricellaFdParams {
    pub alpha: f64,
    pub betas: Vec<f64>,
    pub gamma: f64,
    pub z: Vec<f64>,
    #[serde(skip)]
    zc: Option<Vec<f64>>,
}

impl LauricellaFdParams {
    pub fn new(alpha: f64, betas: Vec<f64>, gamma: f64, z: Vec<f64>) -> Self {
        Self {
            alpha,
            betas,
            gamma,
            z,
            zc: None,
        }
    }

    /// Supplies every `1 - z_j` directly, as for
    /// [`AppellF1Params::with_complements`](crate::special::AppellF1Params::with_complements).
    pub fn with_complements(mut self, one_minus_z: Vec<f64>) -> Self {
        self.zc = Some(one_minus_z);
        self
    }

    fn slots(&self) -> Vec<euler::Slot> {
        match &self.zc {
            Some(zc) => self
                .betas
                .iter()
                .zip(&self.z)
                .zip(zc)
                .map(|((&b, &z), &c)| euler::Slot::with_complement(b, z, c))
                .collect(),
            None => self
                .betas
                .iter()
                .zip(&self.z)
                .map(|(&b, &z)| euler::Slot::new(b, z))
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.betas.len() != self.z.len() {
            return Err(Error::Domain(format!(
                "F_D needs one beta per variable ({} betas, {} variables)",
                self.betas.len(),
                self.z.len()
            )));
        }
        let scalars_ok = self.alpha.is_finite() && self.gamma.is_finite();
        if !scalars_ok || self.betas.iter().chain(&self.z).any(|v| !v.is_finite()) {
            return Err(Error::Domain("F_D arguments must be finite".into()));
        }
        if is_nonpositive_integer(self.gamma) {
            return Err(Error::Domain(format!("F_D is undefined for gamma = {}", self.gamma)));
        }
        if let Some(v) = self.z.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::Domain(format!("F_D variables must lie in [0, 1], got {v}")));
        }
        if let Some(zc) = &self.zc {
            if zc.len() != self.z.len() {
                return Err(Error::Domain(format!(
                    "F_D needs one complement per variable ({} complements, {} variables)",
                    zc.len(),
                    self.z.len()
                )));
            }
            if let Some(v) = zc.iter().find(|v| !(0.0..=1.0).contains(*v)) {
                return Err(Error::Domain(format!(
                    "F_D variable complements must lie in [0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Evaluation strategy for [`lauricella_fd_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FdMethod {
    Auto,
    Series,
    Quadrature,
}

/// Evaluates `F_D` with automatic method selection.
///
/// Slots with a zero variable or a zero exponent are dropped and equal
/// variables are merged. A variable equal to 1 is removed by the Gauss-type
/// reduction, which requires `γ - α - β > 0` for that slot. One remaining
/// variable is handled by [`gauss_2f1`]; otherwise the degree-grouped series
/// runs when every variable is at most 0.5 and the Euler integral otherwise.
pub fn lauricella_fd(p: &LauricellaFdParams, tol: Tolerance) -> Result<EvalResult> {
    lauricella_fd_with(p, FdMethod::Auto, tol)
}

pub fn lauricella_fd_with(p: &LauricellaFdParams, method: FdMethod, tol: Tolerance) -> Result<EvalResult> {
    p.validate()?;
    let slots = p.slots();
    match method {
        FdMethod::Auto => auto(p.alpha, p.gamma, slots, tol),
        FdMethod::Series => degree_series(p.alpha, p.gamma, &slots, tol),
        FdMethod::Quadrature => euler::hypergeometric_by_quadrature(p.alpha, p.gamma, &slots, tol),
    }
}

fn simplify(slots: Vec<euler::Slot>) -> Vec<euler::Slot> {
    let mut out: Vec<euler::Slot> = Vec::with_capacity(slots.len());
    for s in slots {
        if s.beta == 0.0 || s.z == 0.0 {
            continue;
        }
        match out.iter_mut().find(|o| o.z == s.z && o.zc == s.zc) {
            Some(slot) => slot.beta += s.beta,
            None => out.push(s),
        }
    }
    out.retain(|s| s.beta != 0.0);
    out
}

fn auto(alpha: f64, gamma: f64, slots: Vec<euler::Slot>, tol: Tolerance) -> Result<EvalResult> {
    let mut slots = simplify(slots);
    let mut gamma = gamma;
    let mut factor = 1.0;
    if let Some(i) = slots.iter().position(|s| s.zc == 0.0) {
        let beta_unit = slots.remove(i).beta;
        factor = gauss_unit_factor(alpha, beta_unit, gamma).map_err(|e| match e {
            Error::PoleAtUnit { excess } => Error::ReductionConditionViolated {
                condition: "gamma - alpha - beta(unit slot)",
                value: excess,
            },
            other => other,
        })?;
        gamma -= beta_unit;
        if is_nonpositive_integer(gamma) {
            return Err(Error::Domain(format!("unit reduction leaves gamma = {gamma}")));
        }
    }
    let inner_tol = if factor == 1.0 { tol } else { tol.tightened(0.5) };
    let result = match slots.len() {
        0 => Ok(EvalResult::exact(1.0)),
        1 => gauss_2f1_complement(alpha, slots[0].beta, gamma, slots[0].z, slots[0].zc, inner_tol),
        _ => {
            let max = slots.iter().fold(0.0f64, |m, s| m.max(s.z));
            if max <= SERIES_RADIUS || !euler::admissible(alpha, gamma) {
                degree_series(alpha, gamma, &slots, inner_tol)
            } else {
                match euler::hypergeometric_by_quadrature(alpha, gamma, &slots, inner_tol) {
                    Err(Error::UnsupportedGamma(_)) => degree_series(alpha, gamma, &slots, inner_tol),
                    other => other,
                }
            }
        }
    }?;
    Ok(if factor == 1.0 { result } else { result.scaled(factor) })
}

fn degree_series(alpha: f64, gamma: f64, slots: &[euler::Slot], tol: Tolerance) -> Result<EvalResult> {
    let r = slots.iter().fold(0.0f64, |m, s| m.max(s.z.abs()));
    if r >= 1.0 {
        return Err(Error::Domain("F_D series needs every variable below 1".into()));
    }
    if slots.is_empty() {
        return Ok(EvalResult::exact(1.0));
    }
    // power sums for the coefficients and for their majorant
    let mut powers: Vec<f64> = vec![1.0; slots.len()];
    let mut s = vec![0.0];
    let mut s_abs = vec![0.0];
    let mut c = vec![1.0];
    let mut c_abs = vec![1.0];
    let mut lead = 1.0;
    let mut sum = CompensatedSum::new(1.0);
    let mut rule = StopRule::default();
    let mut prev_mag = 1.0;
    let mut work = 0usize;
    let biggest = slots
        .iter()
        .fold(alpha.abs().max(gamma.abs()), |m, s| m.max(s.beta.abs()));
    let settle = (2.0 * biggest).ceil() as usize + 2;
    for k in 1.. {
        if work >= tol.max_terms {
            return Err(Error::NonConvergence {
                terms: work,
                estimate: sum.value(),
            });
        }
        let (mut sk, mut sk_abs) = (0.0, 0.0);
        for (p, s) in powers.iter_mut().zip(slots) {
            *p *= s.z;
            sk += s.beta * *p;
            sk_abs += s.beta.abs() * p.abs();
        }
        s.push(sk);
        s_abs.push(sk_abs);
        let (mut ck, mut ck_abs) = (0.0, 0.0);
        for i in 1..=k {
            ck += s[i] * c[k - i];
            ck_abs += s_abs[i] * c_abs[k - i];
        }
        ck /= k as f64;
        ck_abs /= k as f64;
        c.push(ck);
        c_abs.push(ck_abs);
        work += k + slots.len();
        let km1 = (k - 1) as f64;
        lead *= (alpha + km1) / (gamma + km1);
        let term = lead * ck;
        let mag = lead.abs() * ck_abs;
        sum.add(term);
        if !sum.value().is_finite() {
            return Err(Error::NonConvergence {
                terms: work,
                estimate: sum.value(),
            });
        }
        if mag == 0.0 {
            return Ok(EvalResult {
                value: sum.value(),
                abs_error_estimate: sum.rounding_bound(),
                method: Method::MultipleSeries,
                work,
            });
        }
        let rho = (mag / prev_mag).max(r);
        prev_mag = mag;
        let bound = if rho < 1.0 {
            mag * rho / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        if k >= settle && rule.observe(bound, tol.target(sum.value())) {
            return Ok(EvalResult {
                value: sum.value(),
                abs_error_estimate: bound + sum.rounding_bound(),
                method: Method::MultipleSeries,
                work,
            });
        }
    }
    unreachable!()
}
