use serde::{Deserialize, Serialize};
use std::fmt;

/// Accuracy targets and work caps shared by every series and quadrature routine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative accuracy target.
    pub rel: f64,
    /// Absolute accuracy floor.
    pub abs: f64,
    /// Maximum number of series terms, or quadrature nodes, per evaluation.
    pub max_terms: usize,
    /// Maximum bisection depth of adaptive quadrature.
    pub max_quad_depth: u32,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel: 1e-13,
            abs: 1e-300,
            max_terms: 1_000_000,
            max_quad_depth: 20,
        }
    }
}

impl Tolerance {
    pub fn with_rel(rel: f64) -> Self {
        Self { rel, ..Self::default() }
    }

    /// Target absolute error for a result of magnitude `value`.
    pub fn target(&self, value: f64) -> f64 {
        (self.rel * value.abs()).max(self.abs)
    }

    pub(crate) fn tightened(&self, factor: f64) -> Self {
        Self {
            rel: self.rel * factor,
            ..*self
        }
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Elementary closed form or exact product.
    ClosedForm,
    /// One-variable hypergeometric series.
    Series,
    /// Appell double series summed along anti-diagonals.
    DoubleSeries,
    /// Lauricella multiple series summed by total degree.
    MultipleSeries,
    /// Outer single sum over Gauss functions.
    SingleSumReduction,
    /// Quadrature of an Euler-type integral representation.
    IntegralQuadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Series => "series",
            Method::DoubleSeries => "double-series",
            Method::MultipleSeries => "multiple-series",
            Method::SingleSumReduction => "single-sum-reduction",
            Method::IntegralQuadrature => "integral-quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value with its error estimate and the work spent computing it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
    /// Terms summed or integrand evaluations.
    pub work: usize,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            abs_error_estimate: 0.0,
            method: Method::ClosedForm,
            work: 0,
        }
    }

    /// Closed form with a rounding-level error estimate.
    pub(crate) fn closed_form(value: f64) -> Self {
        Self {
            value,
            abs_error_estimate: 8.0 * f64::EPSILON * value.abs(),
            method: Method::ClosedForm,
            work: 0,
        }
    }

    /// Multiplies by a constant known to rounding accuracy.
    pub(crate) fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: (self.abs_error_estimate + 2.0 * f64::EPSILON * self.value.abs()) * factor.abs(),
            ..self
        }
    }

    pub fn rel_error_estimate(&self) -> f64 {
        if self.value == 0.0 {
            self.abs_error_estimate
        } else {
            self.abs_error_estimate / self.value.abs()
        }
    }
}

/// Neumaier compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub fn new(first: f64) -> Self {
        Self {
            sum: first,
            carry: 0.0,
            abs_sum: first.abs(),
        }
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// Bound on accumulated rounding error.
    pub fn rounding_bound(&self) -> f64 {
        2.0 * f64::EPSILON * self.abs_sum
    }
}

/// Counts consecutive small tail bounds; a single small term can be spurious
/// when terms alternate or pass through a near-zero.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct StopRule {
    hits: u32,
}

impl StopRule {
    pub const REQUIRED: u32 = 3;

    pub fn observe(&mut self, bound: f64, target: f64) -> bool {
        if bound <= target {
            self.hits += 1;
        } else {
            self.hits = 0;
        }
        self.hits >= Self::REQUIRED
    }
}
