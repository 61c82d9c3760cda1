use std::f64::consts::PI;

use indexmap::IndexMap;

use ellipsoid_core::{
    capacitance, capacitance_nd, demagnetizing_factors, surface_area, EllipsoidShape, Error, HyperEllipsoidShape,
    Result, Tolerance,
};

use crate::record::OutputRecord;

fn shape3(axes: &[f64]) -> Result<EllipsoidShape> {
    match *axes {
        [x, y, z] => EllipsoidShape::new(x, y, z),
        _ => Err(Error::Domain(format!("expected 3 semi-axes, got {}", axes.len()))),
    }
}

fn base(command: &'static str, axes: &[f64], canonical: Vec<f64>, perm: Vec<usize>, tol: Tolerance) -> OutputRecord {
    let mut parameters = IndexMap::new();
    parameters.insert("rel_tol", tol.rel);
    OutputRecord {
        command,
        axes: axes.to_vec(),
        canonical_axes: canonical,
        permutation: perm,
        parameters,
        outputs: IndexMap::new(),
        error_estimates: IndexMap::new(),
        method: String::new(),
    }
}

pub fn area(axes: &[f64], tol: Tolerance) -> Result<OutputRecord> {
    let s = shape3(axes)?;
    let r = surface_area(&s, tol)?;
    let mut rec = base("area", axes, s.axes().to_vec(), s.perm().to_vec(), tol);
    rec.outputs.insert("area", r.value);
    rec.error_estimates.insert("area", r.abs_error_estimate);
    rec.method = r.method.to_string();
    Ok(rec)
}

pub fn cap(axes: &[f64], tol: Tolerance) -> Result<OutputRecord> {
    let (r, canonical, perm) = if axes.len() == 3 {
        let s = shape3(axes)?;
        (capacitance(&s, tol)?, s.axes().to_vec(), s.perm().to_vec())
    } else {
        let h = HyperEllipsoidShape::new(axes)?;
        (capacitance_nd(&h, tol)?, h.axes().to_vec(), h.perm().to_vec())
    };
    let a1 = canonical[0];
    let mut rec = base("cap", axes, canonical, perm, tol);
    rec.outputs.insert("C", r.value);
    rec.outputs.insert("C_over_a1", r.value / a1);
    rec.error_estimates.insert("C", r.abs_error_estimate);
    rec.error_estimates.insert("C_over_a1", r.abs_error_estimate / a1);
    rec.method = r.method.to_string();
    Ok(rec)
}

pub fn demag(axes: &[f64], kappa: f64, tol: Tolerance) -> Result<OutputRecord> {
    let s = shape3(axes)?;
    let d = demagnetizing_factors(&s, kappa, tol)?;
    let c = capacitance(&s, tol)?;
    let mut rec = base("demag", axes, s.axes().to_vec(), s.perm().to_vec(), tol);
    rec.parameters.shift_insert(0, "kappa", kappa);
    let scale = 2.0 * PI * kappa;
    for (k, v) in [("n_a", d.n_a), ("n_b", d.n_b), ("n_c", d.n_c)] {
        rec.outputs.insert(k, v);
        rec.error_estimates.insert(k, d.abs_error_estimate);
    }
    for (k, v) in [("L", d.l), ("M", d.m), ("N", d.n)] {
        rec.outputs.insert(k, v);
        rec.error_estimates.insert(k, scale * d.abs_error_estimate);
    }
    rec.outputs.insert("W", d.w);
    rec.error_estimates.insert("W", d.w * c.abs_error_estimate / c.value);
    rec.outputs.insert("sum_rule_residual", d.sum_rule_residual());
    rec.method = d.method.to_string();
    Ok(rec)
}
