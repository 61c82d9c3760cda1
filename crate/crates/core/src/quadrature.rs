//! One-dimensional numerical integration.
//!
//! Two independent rules are provided: globally adaptive 21-point
//! Gauss-Kronrod bisection with QUADPACK error scaling, and tanh-sinh
//! (double exponential) quadrature which clusters nodes at the endpoints.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    GaussKronrodAdaptive,
    DoubleExponential,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Bisection depth limit (GK) or refinement level limit (DE).
    pub max_depth: u32,
    pub max_evals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-300,
            rel_tol: 1e-13,
            max_depth: 20,
            max_evals: 1_000_000,
        }
    }
}

impl QuadOptions {
    fn target(&self, value: f64) -> f64 {
        (self.rel_tol.max(MIN_REL_TOL) * value.abs()).max(self.abs_tol)
    }
}

// Below this the QUADPACK rounding floor dominates the error estimate.
const MIN_REL_TOL: f64 = 100.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    pub fn into_result(self) -> Result<QuadResult> {
        if self.converged && self.value.is_finite() {
            Ok(self)
        } else {
            Err(Error::QuadratureFailure {
                estimate: self.value,
                error: self.abs_error,
            })
        }
    }

    pub(crate) fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            abs_error: self.abs_error + other.abs_error,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

pub fn integrate<F>(f: F, a: f64, b: f64, scheme: Scheme, opts: &QuadOptions) -> QuadResult
where
    F: FnMut(f64) -> f64,
{
    match scheme {
        Scheme::GaussKronrodAdaptive => gauss_kronrod(f, a, b, opts),
        Scheme::DoubleExponential => tanh_sinh(f, a, b, opts),
    }
}

/// `t, 10t, 100t, …` below `end`; empty unless `t > 0`.
///
/// Adaptive bisection can report convergence while missing a feature much
/// narrower than its interval. Cutting at every decade above the feature's
/// scale keeps each piece within a few orders of magnitude of it.
pub fn decade_cuts(t: f64, end: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut t = t;
    while t > 0.0 && t < end {
        out.push(t);
        t *= 10.0;
    }
    out
}

/// Integrates `[a, b]` piece by piece between the given cuts with `rule`,
/// judging convergence on the total. The evaluation budget applies to the
/// whole integral.
pub fn integrate_pieces<F, R>(
    mut f: F,
    a: f64,
    b: f64,
    mut cuts: Vec<f64>,
    opts: &QuadOptions,
    mut rule: R,
) -> QuadResult
where
    F: FnMut(f64) -> f64,
    R: FnMut(&mut F, f64, f64, &QuadOptions) -> QuadResult,
{
    cuts.retain(|&t| t > a && t < b);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut total = QuadResult {
        value: 0.0,
        abs_error: 0.0,
        evaluations: 0,
        converged: true,
    };
    let mut lo = a;
    for hi in cuts.into_iter().chain([b]) {
        total = total.combine(rule(&mut f, lo, hi, opts));
        lo = hi;
    }
    // a piece of negligible mass may miss its own relative target
    // without harming the sum
    total.converged =
        total.value.is_finite() && total.abs_error <= opts.target(total.value) && total.evaluations <= opts.max_evals;
    total
}

/// Gauss-Kronrod first; tanh-sinh if the adaptive estimate stalls.
pub fn integrate_with_fallback<F>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> QuadResult
where
    F: FnMut(f64) -> f64,
{
    let gk = gauss_kronrod(&mut f, a, b, opts);
    if gk.converged {
        return gk;
    }
    let de = tanh_sinh(&mut f, a, b, opts);
    if de.converged || de.abs_error < gk.abs_error {
        QuadResult {
            evaluations: de.evaluations + gk.evaluations,
            ..de
        }
    } else {
        gk
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// 21-point rule on one segment: (integral, QUADPACK error estimate).
fn kronrod21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut res_g = 0.0;
    let mut res_k = f_center * WGK[10];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();

    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// Globally adaptive Gauss-Kronrod (21-point) quadrature on `[a, b]`.
pub fn gauss_kronrod<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> QuadResult {
    if a == b {
        return QuadResult {
            value: 0.0,
            abs_error: 0.0,
            evaluations: 0,
            converged: true,
        };
    }
    let (value, error) = kronrod21(&mut f, a, b);
    let mut evaluations = 21;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    heap.push(Segment {
        a,
        b,
        value,
        error,
        depth: 0,
    });
    let mut total = value;
    let mut total_err = error;

    while total_err > opts.target(total) && evaluations + 42 <= opts.max_evals {
        let Some(worst) = heap.pop() else { break };
        if worst.depth >= opts.max_depth {
            frozen.push(worst);
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = kronrod21(&mut f, worst.a, mid);
        let (v2, e2) = kronrod21(&mut f, mid, worst.b);
        evaluations += 42;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
            depth: worst.depth + 1,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
            depth: worst.depth + 1,
        });
    }

    // Resum to remove drift from the running updates.
    let mut segments: Vec<&Segment> = heap.iter().chain(frozen.iter()).collect();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut sum = crate::eval::CompensatedSum::default();
    let mut err = 0.0;
    for s in &segments {
        sum.add(s.value);
        err += s.error;
    }
    let value = sum.value();
    QuadResult {
        value,
        abs_error: err,
        evaluations,
        converged: err <= opts.target(value) && value.is_finite(),
    }
}

/// Tanh-sinh quadrature on `[a, b]`, halving the step each level.
///
/// Nodes are placed as endpoint offsets so the integrand is never evaluated
/// exactly at `a` or `b`; non-finite samples reuse the previous neighbour.
pub fn tanh_sinh<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> QuadResult {
    tanh_sinh_offsets(|x, _, _| if x == a || x == b { 0.0 } else { f(x) }, a, b, opts)
}

/// Like [`tanh_sinh`], but the integrand also receives the exact distances
/// `x - a` and `b - x`, so singular factors at either end can be formed
/// without cancellation.
pub fn tanh_sinh_offsets<F: FnMut(f64, f64, f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> QuadResult {
    let c = 0.5 * (a + b);
    let d = 0.5 * (b - a);
    let mut s = f(c, d, d);
    let mut evaluations = 1;
    let mut h: f64 = 2.0;
    let max_levels = opts.max_depth.clamp(3, 12);
    let mut estimate = f64::NAN;
    let mut diff = f64::INFINITY;

    for level in 0..max_levels {
        h /= 2.0;
        let mut p = 0.0;
        let mut fp = 0.0;
        let mut fm = 0.0;
        let eh0 = h.exp();
        let eh = if level > 0 { eh0 * eh0 } else { eh0 };
        let mut t = eh0;
        loop {
            let u = (1.0 / t - t).exp();
            let r = 2.0 * u / (1.0 + u);
            let w = (t + 1.0 / t) * r / (1.0 + u);
            let x = d * r;
            if x > 0.0 {
                let y = f(a + x, x, 2.0 * d - x);
                evaluations += 1;
                if y.is_finite() {
                    fp = y;
                }
            }
            if x > 0.0 {
                let y = f(b - x, 2.0 * d - x, x);
                evaluations += 1;
                if y.is_finite() {
                    fm = y;
                }
            }
            let q = w * (fp + fm);
            p += q;
            t *= eh;
            if q.abs() <= f64::EPSILON * p.abs() || u == 0.0 || evaluations >= opts.max_evals {
                break;
            }
        }
        let v = s - p;
        s += p;
        let new_estimate = d * s * h;
        if level > 0 {
            diff = (d * h * v).abs();
        }
        estimate = new_estimate;
        if level >= 2 && diff <= opts.target(estimate) {
            break;
        }
        if evaluations >= opts.max_evals {
            break;
        }
    }
    let rounding = 64.0 * f64::EPSILON * estimate.abs();
    let abs_error = diff.max(rounding);
    QuadResult {
        value: estimate,
        abs_error,
        evaluations,
        converged: diff <= opts.target(estimate) && estimate.is_finite(),
    }
}
