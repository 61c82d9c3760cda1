//! Electrostatic capacitance in Gaussian units (a sphere of radius `a` has `C = a`).

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::ellipsoid::shape::{EllipsoidShape, ShapeClass};
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Tolerance};
use crate::special::appell::{appell_f1, AppellF1Params};
use crate::special::closed_forms::log_ratio;
use crate::special::gauss::gauss_2f1_complement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CapacitanceKind {
    OblateSpheroid,
    ProlateSpheroid,
    Sphere,
    EllipticDisk,
}

impl CapacitanceKind {
    /// The special case that applies to `shape`, if any.
    pub fn of(shape: &EllipsoidShape) -> Option<Self> {
        if shape.is_disk() {
            return Some(CapacitanceKind::EllipticDisk);
        }
        match shape.class() {
            ShapeClass::Sphere => Some(CapacitanceKind::Sphere),
            ShapeClass::Oblate => Some(CapacitanceKind::OblateSpheroid),
            ShapeClass::Prolate => Some(CapacitanceKind::ProlateSpheroid),
            ShapeClass::Scalene => None,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            CapacitanceKind::OblateSpheroid => "oblate spheroid",
            CapacitanceKind::ProlateSpheroid => "prolate spheroid",
            CapacitanceKind::Sphere => "sphere",
            CapacitanceKind::EllipticDisk => "elliptic disk",
        }
    }
}

/// `C = a / F1(1/2, 1/2, 1/2, 3/2; 1 - b²/a², 1 - c²/a²)`.
///
/// Spheres, spheroids and the flat disk `c = 0` use their corollary forms.
pub fn capacitance(shape: &EllipsoidShape, tol: Tolerance) -> Result<EvalResult> {
    if let Some(kind) = CapacitanceKind::of(shape) {
        if kind == CapacitanceKind::EllipticDisk && shape.a() != shape.b() {
            return disk(shape, tol);
        }
        return capacitance_special(kind, shape).map(EvalResult::closed_form);
    }
    let p = AppellF1Params::new(0.5, 0.5, 0.5, 1.5, shape.x(), shape.y())
        .with_complements(shape.x_complement(), shape.y_complement());
    let f = appell_f1(&p, tol)?;
    Ok(EvalResult {
        value: shape.a() / f.value,
        abs_error_estimate: shape.a() * f.abs_error_estimate / (f.value * f.value),
        method: f.method,
        work: f.work,
    })
}

fn disk(shape: &EllipsoidShape, tol: Tolerance) -> Result<EvalResult> {
    let f = gauss_2f1_complement(0.5, 0.5, 1.0, shape.x(), shape.x_complement(), tol)?;
    let denom = FRAC_PI_2 * f.value;
    Ok(EvalResult {
        value: shape.a() / denom,
        abs_error_estimate: shape.a() * FRAC_PI_2 * f.abs_error_estimate / (denom * denom),
        method: f.method,
        work: f.work,
    })
}

/// Corollary forms. With `e = √(1 - c²/a²)`:
///
/// * oblate `a = b > c`: `C = a e / arcsin e`
/// * prolate `a > b = c`: `C = 2 a e / log((1+e)/(1-e))`
/// * sphere: `C = a`
/// * disk `c = 0`: `C = a / ((π/2) F(1/2, 1/2; 1; 1 - b²/a²))`
pub fn capacitance_special(kind: CapacitanceKind, shape: &EllipsoidShape) -> Result<f64> {
    if CapacitanceKind::of(shape) != Some(kind) {
        return Err(Error::KindMismatch {
            expected: kind.as_str(),
        });
    }
    let a = shape.a();
    let z = shape.delta();
    let e = z.sqrt();
    Ok(match kind {
        CapacitanceKind::Sphere => a,
        CapacitanceKind::OblateSpheroid => a * e / e.asin(),
        CapacitanceKind::ProlateSpheroid => a * 2.0 * e / log_ratio(z),
        CapacitanceKind::EllipticDisk => {
            if shape.a() == shape.b() {
                a / FRAC_PI_2
            } else {
                disk(shape, Tolerance::default())?.value
            }
        }
    })
}
