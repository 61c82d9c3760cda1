//! Demagnetizing factors of a uniformly magnetized ellipsoid.
//!
//! The interior potential is `Φ = -Lx² - My² - Nz² + W` with
//! `L + M + N = 2πκ`. The dimensionless coefficients `n_i = L_i/(2πκ)` sum
//! to 1 and depend only on the shape; with `κ = 2` they equal the usual
//! `L/4π` tabulation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::ellipsoid::capacitance::{capacitance, capacitance_special, CapacitanceKind};
use crate::ellipsoid::shape::{EllipsoidShape, ShapeClass};
use crate::error::{Error, Result};
use crate::eval::{Method, Tolerance};
use crate::special::appell::{appell_f1, AppellF1Params};
use crate::special::closed_forms::log_ratio;
use crate::special::gauss::gauss_2f1;

/// Susceptibility under which `n_i = L_i/4π`.
pub const TABLE_KAPPA: f64 = 2.0;

/// Below this modulus `1 - c²/a²` spheroids use Gauss-series forms instead
/// of the elementary ones, which cancel badly near the sphere.
pub const SPHEROID_SERIES_LIMIT: f64 = 0.1;

/// Demagnetizing coefficients per canonical axis `a >= b >= c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DemagResult {
    pub n_a: f64,
    pub n_b: f64,
    pub n_c: f64,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "N")]
    pub n: f64,
    pub kappa: f64,
    #[serde(rename = "W")]
    pub w: f64,
    /// Input position of each canonical axis, as in [`EllipsoidShape::perm`].
    pub perm: [usize; 3],
    pub method: Method,
    /// Largest absolute error estimate among `n_a, n_b, n_c`.
    pub abs_error_estimate: f64,
}

impl DemagResult {
    pub(crate) fn new(coeffs: [f64; 3], kappa: f64, w: f64, shape: &EllipsoidShape, method: Method, err: f64) -> Self {
        let s = 2.0 * PI * kappa;
        Self {
            n_a: coeffs[0],
            n_b: coeffs[1],
            n_c: coeffs[2],
            l: s * coeffs[0],
            m: s * coeffs[1],
            n: s * coeffs[2],
            kappa,
            w,
            perm: shape.perm(),
            method,
            abs_error_estimate: err,
        }
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.n_a, self.n_b, self.n_c]
    }

    pub fn factors(&self) -> [f64; 3] {
        [self.l, self.m, self.n]
    }

    fn reorder(&self, v: [f64; 3]) -> [f64; 3] {
        let mut out = v;
        for (k, &i) in self.perm.iter().enumerate() {
            out[i] = v[k];
        }
        out
    }

    /// Coefficients listed in the order the axes were given.
    pub fn coefficients_input_order(&self) -> [f64; 3] {
        self.reorder(self.coefficients())
    }

    pub fn factors_input_order(&self) -> [f64; 3] {
        self.reorder(self.factors())
    }

    /// `|n_a + n_b + n_c - 1|`
    pub fn sum_rule_residual(&self) -> f64 {
        (self.n_a + self.n_b + self.n_c - 1.0).abs()
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    Ok(())
}

/// `L = (2πκ bc / 3a²) F1(3/2, 1/2, 1/2, 5/2; x, y)`; `M` and `N` raise the
/// first and second `β` to 3/2. `W = 2πabcκ/C`.
pub fn demagnetizing_factors(shape: &EllipsoidShape, kappa: f64, tol: Tolerance) -> Result<DemagResult> {
    check_kappa(kappa)?;
    shape.require_solid()?;
    if shape.class() != ShapeClass::Scalene {
        return demagnetizing_special(shape, kappa);
    }
    let (a, b, c) = (shape.a(), shape.b(), shape.c());
    let (x, y) = (shape.x(), shape.y());
    let (xc, yc) = (shape.x_complement(), shape.y_complement());
    let pre = b * c / (3.0 * a * a);
    let mut coeffs = [0.0; 3];
    let mut err: f64 = 0.0;
    let mut method = Method::ClosedForm;
    for (k, (beta, beta_prime)) in [(0.5, 0.5), (1.5, 0.5), (0.5, 1.5)].into_iter().enumerate() {
        let f = appell_f1(
            &AppellF1Params::new(1.5, beta, beta_prime, 2.5, x, y).with_complements(xc, yc),
            tol,
        )?;
        coeffs[k] = pre * f.value;
        err = err.max(pre * f.abs_error_estimate);
        if k == 0 {
            method = f.method;
        }
    }
    let cap = capacitance(shape, tol)?.value;
    let w = 2.0 * PI * a * b * c * kappa / cap;
    Ok(DemagResult::new(coeffs, kappa, w, shape, method, err))
}

/// Elementary coefficients of the oblate spheroid `a = b > c`, `m = a/c > 1`,
/// in canonical order.
pub fn oblate_coefficients(m: f64) -> Result<[f64; 3]> {
    if !(m.is_finite() && m > 1.0) {
        return Err(Error::Domain(format!("aspect ratio must exceed 1, got {m}")));
    }
    let s2 = m * m - 1.0;
    let s = s2.sqrt();
    let arc = (s / m).asin();
    let n_a = 0.5 * (m * m * arc / (s2 * s) - 1.0 / s2);
    let n_c = m * m / s2 * (1.0 - arc / s);
    Ok([n_a, n_a, n_c])
}

/// Elementary coefficients of the prolate spheroid `a > b = c`, `m = a/c > 1`.
///
/// `L = (2πκ/(m²-1)) [ (m / (2√(m²-1))) log((m+√(m²-1))/(m-√(m²-1))) - 1 ]`,
/// `M = N = πκ m/(m²-1) [ m - log(...)/(2√(m²-1)) ]`.
pub fn prolate_coefficients(m: f64) -> Result<[f64; 3]> {
    if !(m.is_finite() && m > 1.0) {
        return Err(Error::Domain(format!("aspect ratio must exceed 1, got {m}")));
    }
    let s2 = m * m - 1.0;
    let s = s2.sqrt();
    let lr = log_ratio(s2 / (m * m));
    let n_a = (m / (2.0 * s) * lr - 1.0) / s2;
    let n_b = m / (2.0 * s2) * (m - lr / (2.0 * s));
    Ok([n_a, n_b, n_b])
}

/// Spheres and spheroids through their corollary forms.
pub fn demagnetizing_special(shape: &EllipsoidShape, kappa: f64) -> Result<DemagResult> {
    check_kappa(kappa)?;
    shape.require_solid()?;
    let (a, b, c) = (shape.a(), shape.b(), shape.c());
    let z = shape.delta();
    let tol = Tolerance::default();
    let series = |p: f64, q: f64| -> Result<f64> { Ok(gauss_2f1(1.5, p, 2.5, q, tol)?.value) };
    let (coeffs, kind) = match shape.class() {
        ShapeClass::Sphere => ([1.0 / 3.0; 3], CapacitanceKind::Sphere),
        ShapeClass::Oblate => {
            let coeffs = if z < SPHEROID_SERIES_LIMIT {
                let pre = c / (3.0 * a);
                let n_a = pre * series(0.5, z)?;
                [n_a, n_a, pre * series(1.5, z)?]
            } else {
                oblate_coefficients(a / c)?
            };
            (coeffs, CapacitanceKind::OblateSpheroid)
        }
        ShapeClass::Prolate => {
            let coeffs = if z < SPHEROID_SERIES_LIMIT {
                let pre = (c / a).powi(2) / 3.0;
                let n_b = pre * series(2.0, z)?;
                [pre * series(1.0, z)?, n_b, n_b]
            } else {
                prolate_coefficients(a / c)?
            };
            (coeffs, CapacitanceKind::ProlateSpheroid)
        }
        ShapeClass::Scalene => {
            return Err(Error::KindMismatch {
                expected: "sphere or spheroid",
            })
        }
    };
    let cap = capacitance_special(kind, shape)?;
    let w = 2.0 * PI * a * b * c * kappa / cap;
    let err = 8.0 * f64::EPSILON;
    Ok(DemagResult::new(coeffs, kappa, w, shape, Method::ClosedForm, err))
}
