//! Surface area of the triaxial ellipsoid and its spheroid limits.

use std::f64::consts::PI;

use crate::ellipsoid::shape::{EllipsoidShape, ShapeClass};
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Tolerance};
use crate::special::appell::{appell_f1, AppellF1Params};
use crate::special::closed_forms::log_ratio;

/// Surface area of a general ellipsoid with `a >= b >= c > 0`:
///
/// `A = 4πab [ (c²/a²) F1(1/2, -1/2, 3/2, 3/2; ε, δ) + (δ/3) F1(1/2, -1/2, 3/2, 5/2; ε, δ) ]`
///
/// with `δ = 1 - c²/a²` and `ε = 1 - c²/b²`. Spheres and spheroids are
/// routed to their elementary forms.
pub fn surface_area(shape: &EllipsoidShape, tol: Tolerance) -> Result<EvalResult> {
    shape.require_solid()?;
    let (a, b, c) = (shape.a(), shape.b(), shape.c());
    match shape.class() {
        ShapeClass::Sphere => return Ok(EvalResult::closed_form(4.0 * PI * a * a)),
        ShapeClass::Oblate => return surface_area_oblate(a, c).map(EvalResult::closed_form),
        ShapeClass::Prolate => return surface_area_prolate(a, b).map(EvalResult::closed_form),
        ShapeClass::Scalene => {}
    }
    let (delta, epsilon) = (shape.delta(), shape.epsilon());
    let inner = tol.tightened(0.5);
    let (ec, dc) = (shape.epsilon_complement(), shape.y_complement());
    let f3 = appell_f1(
        &AppellF1Params::new(0.5, -0.5, 1.5, 1.5, epsilon, delta).with_complements(ec, dc),
        inner,
    )?;
    let f5 = appell_f1(
        &AppellF1Params::new(0.5, -0.5, 1.5, 2.5, epsilon, delta).with_complements(ec, dc),
        inner,
    )?;
    let (p, q) = ((c / a).powi(2), delta / 3.0);
    let scale = 4.0 * PI * a * b;
    let value = scale * (p * f3.value + q * f5.value);
    Ok(EvalResult {
        value,
        abs_error_estimate: scale * (p * f3.abs_error_estimate + q * f5.abs_error_estimate)
            + 4.0 * f64::EPSILON * value,
        method: f3.method,
        work: f3.work + f5.work,
    })
}

fn check_pair(long: f64, short: f64, what: &str) -> Result<()> {
    if !(long.is_finite() && short.is_finite() && short > 0.0 && long > short) {
        return Err(Error::Domain(format!("{what} spheroid needs {long} > {short} > 0")));
    }
    Ok(())
}

/// Oblate spheroid `a = b > c`:
/// `2πa² + πc² (1/e) log((1+e)/(1-e))`, `e = √(1 - c²/a²)`.
pub fn surface_area_oblate(a: f64, c: f64) -> Result<f64> {
    check_pair(a, c, "oblate")?;
    let z = 1.0 - (c / a).powi(2);
    Ok(2.0 * PI * a * a + PI * c * c * log_ratio(z) / z.sqrt())
}

/// Prolate spheroid `a > b = c`:
/// `2abπ (b/a + arcsin(e)/e)`, `e = √(1 - b²/a²)`.
///
/// The printed form groups the second term as `√(1-b²/a²)/(1-b²/a²) · arcsin e`,
/// which is the same quantity.
pub fn surface_area_prolate(a: f64, b: f64) -> Result<f64> {
    check_pair(a, b, "prolate")?;
    let z = 1.0 - (b / a).powi(2);
    let e = z.sqrt();
    Ok(2.0 * a * b * PI * ((b / a) + e / z * e.asin()))
}

/// The same prolate spheroid written with the short axes first, `a = c < b`:
/// `2abπ (c/b + arcsin(e)/e)`, `e = √(1 - c²/b²)`.
pub fn surface_area_prolate_transposed(a: f64, b: f64) -> Result<f64> {
    check_pair(b, a, "prolate")?;
    let c = a;
    let e = (1.0 - (c / b).powi(2)).sqrt();
    Ok(2.0 * a * b * PI * (c / b + e.asin() / e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::appell::{appell_f1_with, F1Method};
    use approx::assert_relative_eq;

    fn area(a: f64, b: f64, c: f64) -> f64 {
        surface_area(&EllipsoidShape::new(a, b, c).unwrap(), Tolerance::default())
            .unwrap()
            .value
    }

    #[test]
    fn printed_examples() {
        // printed truncated to ten decimals; the true value is 13.69921080875381
        let d = area(2.0, 1.0, 0.25) - 13.699_210_808_7;
        assert!((0.0..1e-10).contains(&d), "{d}");
        assert!((area(1.0, 1.0, 0.5) - 8.671_882_703_3).abs() <= 5e-11);
        assert!((area(1.0, 0.8, 0.625) - 8.151_618_922_9).abs() <= 5e-11);
    }

    #[test]
    fn sphere() {
        assert_eq!(area(1.0, 1.0, 1.0), 4.0 * PI);
        assert_relative_eq!(area(1.0, 1.0, 1.0), 12.566_370_614_359_172, max_relative = 1e-15);
    }

    #[test]
    fn oblate_against_general_formula() {
        // the F1 path with equal variables, bypassing the spheroid routing
        let (a, c) = (1.0, 0.5);
        let d = 1.0 - c * c;
        let tol = Tolerance::default();
        let f3 = appell_f1_with(
            &AppellF1Params::new(0.5, -0.5, 1.5, 1.5, d, d),
            F1Method::SingleSum,
            tol,
        )
        .unwrap()
        .value;
        let f5 = appell_f1_with(
            &AppellF1Params::new(0.5, -0.5, 1.5, 2.5, d, d),
            F1Method::SingleSum,
            tol,
        )
        .unwrap()
        .value;
        let general = 4.0 * PI * a * a * (c * c * f3 + d / 3.0 * f5);
        assert_relative_eq!(surface_area_oblate(a, c).unwrap(), general, max_relative = 1e-12);
        assert_relative_eq!(
            surface_area_oblate(2.0, 1.0).unwrap(),
            34.687_530_813_380_21,
            max_relative = 1e-13
        );
    }

    #[test]
    fn prolate_forms_agree() {
        for (a, b) in [(2.0, 1.0), (10.0, 1.0), (1.3, 1.2)] {
            let p = surface_area_prolate(a, b).unwrap();
            let t = surface_area_prolate_transposed(b, a).unwrap();
            assert_relative_eq!(p, t, max_relative = 1e-14);
        }
        assert_relative_eq!(
            surface_area_prolate(2.0, 1.0).unwrap(),
            21.478_435_327_883_74,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            surface_area_prolate(10.0, 1.0).unwrap(),
            99.151_030_544_092_06,
            max_relative = 1e-13
        );
    }

    #[test]
    fn sphere_limits() {
        assert!((surface_area_oblate(1.0, 1.0 - 1e-12).unwrap() - 4.0 * PI).abs() < 1e-9);
        assert!((surface_area_prolate(1.0, 1.0 - 1e-12).unwrap() - 4.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn near_spheroid_general_path_is_continuous() {
        let general = area(2.0, 1.0 + 1e-9, 1.0);
        assert_relative_eq!(general, surface_area_prolate(2.0, 1.0).unwrap(), max_relative = 1e-8);
        let general = area(1.0, 1.0 - 1e-9, 0.5);
        assert_relative_eq!(general, surface_area_oblate(1.0, 0.5).unwrap(), max_relative = 1e-8);
    }

    #[test]
    fn rejections() {
        assert!(surface_area_oblate(1.0, 1.0).is_err());
        assert!(surface_area_prolate(1.0, 2.0).is_err());
        let disk = EllipsoidShape::new(2.0, 1.0, 0.0).unwrap();
        assert!(matches!(
            surface_area(&disk, Tolerance::default()),
            Err(Error::DegenerateShape(_))
        ));
    }
}
