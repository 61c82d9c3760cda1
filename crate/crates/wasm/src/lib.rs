//! WebAssembly bindings for the shape explorer in `www/`.
//!
//! Every export is a thin wrapper over a plain function so the numerics can be
//! tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ellipsoid_core::{
    capacitance, capacitance_nd, demagnetizing_factors, surface_area, EllipsoidShape, HyperEllipsoidShape, Result,
    Tolerance,
};

// full double precision, so the sum rule holds to rounding
const TOL: Tolerance = Tolerance {
    rel: 1e-15,
    abs: 1e-300,
    max_terms: 1_000_000,
    max_quad_depth: 20,
};

#[derive(Debug, Clone, Serialize)]
pub struct Demag {
    /// In the order the axes were given.
    pub coefficients: [f64; 3],
    pub factors: [f64; 3],
    pub w: f64,
    pub sum_rule_residual: f64,
    pub method: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Evaluation {
    pub axes: [f64; 3],
    pub capacitance: f64,
    /// Absent for a disk, as is `demag`.
    pub area: Option<f64>,
    pub demag: Option<Demag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Capacitance,
    Area,
    Na,
    Nb,
    Nc,
}

impl std::str::FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "cap" => Quantity::Capacitance,
            "area" => Quantity::Area,
            "n_a" => Quantity::Na,
            "n_b" => Quantity::Nb,
            "n_c" => Quantity::Nc,
            _ => return Err(format!("unknown quantity {s:?}")),
        })
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Curve {
    pub c_over_a: Vec<f64>,
    /// `NaN`, or `null` in JSON, where the evaluation failed.
    pub value: Vec<f64>,
}

pub fn evaluate_shape(a: f64, b: f64, c: f64, kappa: f64) -> Result<Evaluation> {
    let tol = TOL;
    let s = EllipsoidShape::new(a, b, c)?;
    let (area, demag) = if s.is_disk() {
        (None, None)
    } else {
        let d = demagnetizing_factors(&s, kappa, tol)?;
        let demag = Demag {
            coefficients: d.coefficients_input_order(),
            factors: d.factors_input_order(),
            w: d.w,
            sum_rule_residual: d.sum_rule_residual(),
            method: d.method.as_str(),
        };
        (Some(surface_area(&s, tol)?.value), Some(demag))
    };
    Ok(Evaluation {
        axes: [a, b, c],
        capacitance: capacitance(&s, tol)?.value,
        area,
        demag,
    })
}

/// Samples a quantity of the ellipsoid `(1, b/a, c/a)` at `points` values of
/// `c/a` spread evenly over `(0, b/a]`.
pub fn sample_curve(quantity: Quantity, b_over_a: f64, points: usize) -> Result<Curve> {
    EllipsoidShape::new(1.0, b_over_a, b_over_a)?;
    let tol = TOL;
    let mut curve = Curve::default();
    for i in 1..=points {
        let c = b_over_a * i as f64 / points as f64;
        let v = EllipsoidShape::new(1.0, b_over_a, c).and_then(|s| match quantity {
            Quantity::Capacitance => capacitance(&s, tol).map(|r| r.value),
            Quantity::Area => surface_area(&s, tol).map(|r| r.value),
            q => demagnetizing_factors(&s, 1.0, tol).map(|d| {
                let k = [Quantity::Na, Quantity::Nb, Quantity::Nc]
                    .iter()
                    .position(|&p| p == q)
                    .unwrap();
                d.coefficients()[k]
            }),
        });
        curve.c_over_a.push(c);
        curve.value.push(v.unwrap_or(f64::NAN));
    }
    Ok(curve)
}

pub fn hyper_capacitance(axes: &[f64]) -> Result<f64> {
    let h = HyperEllipsoidShape::new(axes)?;
    Ok(capacitance_nd(&h, TOL)?.value)
}

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn to_json(v: &impl Serialize) -> std::result::Result<String, JsError> {
    serde_json::to_string(v).map_err(js_err)
}

/// Area, capacitance and demagnetizing data of one ellipsoid, as JSON.
#[wasm_bindgen]
pub fn evaluate(a: f64, b: f64, c: f64, kappa: f64) -> std::result::Result<String, JsError> {
    to_json(&evaluate_shape(a, b, c, kappa).map_err(js_err)?)
}

/// `{"c_over_a": [...], "value": [...]}` for `quantity` in cap, area, n_a, n_b, n_c.
#[wasm_bindgen]
pub fn curve(quantity: &str, b_over_a: f64, points: usize) -> std::result::Result<String, JsError> {
    let q: Quantity = quantity.parse().map_err(js_err)?;
    to_json(&sample_curve(q, b_over_a, points).map_err(js_err)?)
}

/// Capacitance of the ellipsoid with the given semi-axes in any dimension n >= 3.
#[wasm_bindgen]
pub fn capacitance_n(axes: Vec<f64>) -> std::result::Result<f64, JsError> {
    hyper_capacitance(&axes).map_err(js_err)
}
