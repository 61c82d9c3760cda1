//! Capacitance and demagnetizing factors in `n >= 3` dimensions via Lauricella's F_D.

use std::f64::consts::PI;

use crate::ellipsoid::shape::HyperEllipsoidShape;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Tolerance};
use crate::special::gamma::gamma_half_integer;
use crate::special::lauricella::{lauricella_fd, LauricellaFdParams};

/// `C = 2 a₁^{n-2} Γ(n/2) / (Γ((n-2)/2) Γ(1)) / F_D((n-2)/2, (1/2,…,1/2), n/2; x₂,…,x_n)`.
pub fn capacitance_nd(shape: &HyperEllipsoidShape, tol: Tolerance) -> Result<EvalResult> {
    let n = shape.dim() as i64;
    let a1 = shape.axes()[0];
    let moduli = shape.moduli();
    let p = LauricellaFdParams::new((n - 2) as f64 / 2.0, vec![0.5; moduli.len()], n as f64 / 2.0, moduli)
        .with_complements(shape.moduli_complements());
    let f = lauricella_fd(&p, tol)?;
    // Γ(1) = 1
    let pre = 2.0 * a1.powi(n as i32 - 2) * gamma_half_integer(n)? / gamma_half_integer(n - 2)?;
    Ok(EvalResult {
        value: pre / f.value,
        abs_error_estimate: pre * f.abs_error_estimate / (f.value * f.value),
        method: f.method,
        work: f.work,
    })
}

/// Demagnetizing factor for the axis given at `axis_index` (1-based, in the
/// order the axes were supplied):
///
/// `πκ (a₁⋯a_n / a₁ⁿ) Γ(n/2)Γ(1)/Γ((n+2)/2) · F_D(n/2, β, (n+2)/2; μ₂,…,μ_n)`,
///
/// where every `β_j = 1/2` except that the slot of the selected axis is 3/2
/// (the longest axis has no slot). The factors of all axes sum to `2πκ`.
pub fn demagnetizing_nd(
    shape: &HyperEllipsoidShape,
    axis_index: usize,
    kappa: f64,
    tol: Tolerance,
) -> Result<EvalResult> {
    let n = shape.dim();
    if axis_index == 0 || axis_index > n {
        return Err(Error::Domain(format!(
            "axis index must be in 1..={n}, got {axis_index}"
        )));
    }
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    let k = shape
        .canonical_index(axis_index - 1)
        .expect("permutation covers every input axis");
    let moduli = shape.moduli();
    let mut betas = vec![0.5; moduli.len()];
    if k > 0 {
        betas[k - 1] = 1.5;
    }
    let a1 = shape.axes()[0];
    let volume_ratio: f64 = shape.axes().iter().map(|&aj| aj / a1).product();
    let p = LauricellaFdParams::new(n as f64 / 2.0, betas, n as f64 / 2.0 + 1.0, moduli)
        .with_complements(shape.moduli_complements());
    let f = lauricella_fd(&p, tol)?;
    let two_n = n as i64;
    let pre = PI * kappa * volume_ratio * gamma_half_integer(two_n)? / gamma_half_integer(two_n + 2)?;
    Ok(EvalResult {
        value: pre * f.value,
        abs_error_estimate: pre * f.abs_error_estimate,
        method: f.method,
        work: f.work,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellipsoid::capacitance::capacitance;
    use crate::ellipsoid::demag::demagnetizing_factors;
    use crate::ellipsoid::shape::EllipsoidShape;
    use approx::assert_relative_eq;

    fn hyper(axes: &[f64]) -> HyperEllipsoidShape {
        HyperEllipsoidShape::new(axes).unwrap()
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn four_dimensional_example() {
        let s = hyper(&[2.0, 5.0 / 3.0, 4.0 / 3.0, 1.0]);
        let c = capacitance_nd(&s, Tolerance::default()).unwrap().value;
        assert_relative_eq!(c, 4.406_592_791_665_676_649, max_relative = 1e-12);
    }

    #[test]
    fn n_spheres() {
        for n in 3..=6 {
            let s = hyper(&vec![1.5; n]);
            let c = capacitance_nd(&s, Tolerance::default()).unwrap().value;
            assert_relative_eq!(c, (n as f64 - 2.0) * 1.5f64.powi(n as i32 - 2), max_relative = 1e-14);
            for axis in 1..=n {
                let d = demagnetizing_nd(&s, axis, 2.0, Tolerance::default()).unwrap().value;
                assert_relative_eq!(d, 4.0 * PI / n as f64, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn three_dimensional_reduction() {
        let axes = [2.0, 3.0, 1.0];
        let s3 = EllipsoidShape::from_axes(axes).unwrap();
        let sn = hyper(&axes);
        let tol = Tolerance::default();
        assert_relative_eq!(
            capacitance_nd(&sn, tol).unwrap().value,
            capacitance(&s3, tol).unwrap().value,
            max_relative = 1e-12
        );
        let d3 = demagnetizing_factors(&s3, 2.0, tol).unwrap().factors_input_order();
        for axis in 1..=3 {
            let dn = demagnetizing_nd(&sn, axis, 2.0, tol).unwrap().value;
            assert_relative_eq!(dn, d3[axis - 1], max_relative = 1e-12);
        }
    }

    #[test]
    fn sum_over_axes() {
        let s = hyper(&[2.0, 5.0 / 3.0, 4.0 / 3.0, 1.0, 0.5]);
        let total: f64 = (1..=5)
            .map(|i| demagnetizing_nd(&s, i, 1.0, Tolerance::default()).unwrap().value)
            .sum();
        assert_relative_eq!(total, 2.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn bad_axis_index() {
        let s = hyper(&[1.0, 1.0, 1.0]);
        assert!(demagnetizing_nd(&s, 0, 1.0, Tolerance::default()).is_err());
        assert!(demagnetizing_nd(&s, 4, 1.0, Tolerance::default()).is_err());
    }
}
