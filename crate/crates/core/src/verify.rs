//! Reference checks against published values, exact identities and the
//! quadrature oracle, collected into a serializable report.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::ellipsoid::{
    capacitance, capacitance_nd, demagnetizing_factors, demagnetizing_nd, surface_area, EllipsoidShape,
    HyperEllipsoidShape,
};
use crate::error::{Error, Result};
use crate::eval::Tolerance;
use crate::oracle::{
    area_integral, capacitance_integral, demag_integrals, lauricella_fd_integral, section2_identity_check,
    QuadratureSpec,
};
use crate::special::{
    appell_f1, appell_f1_with, gauss_2f1, lauricella_fd, AppellF1Params, F1Method, LauricellaFdParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Identities,
    Oracle,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Abs,
    Rel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub value: f64,
    pub reference: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub passed: bool,
    pub total: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn from_checks(suite: Suite, checks: Vec<Check>) -> Self {
        let failures = checks.iter().filter(|c| !c.passed).count();
        let max_residual = checks
            .iter()
            .map(|c| c.residual)
            .filter(|r| r.is_finite())
            .fold(0.0, f64::max);
        Self {
            suite,
            passed: failures == 0,
            total: checks.len(),
            failures,
            max_residual,
            checks,
        }
    }
}

struct Collector {
    suite: Suite,
    checks: Vec<Check>,
}

impl Collector {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: String, value: Result<f64>, reference: f64, tolerance: f64, comparison: Comparison) {
        let check = match value {
            Ok(value) => {
                let diff = (value - reference).abs();
                let residual = match comparison {
                    Comparison::Abs => diff,
                    Comparison::Rel if reference == 0.0 => diff,
                    Comparison::Rel => diff / reference.abs(),
                };
                Check {
                    suite: self.suite,
                    name,
                    value,
                    reference,
                    residual,
                    tolerance,
                    comparison,
                    passed: residual <= tolerance,
                    error: None,
                }
            }
            Err(e) => Check {
                suite: self.suite,
                name,
                value: f64::NAN,
                reference,
                residual: f64::INFINITY,
                tolerance,
                comparison,
                passed: false,
                error: Some(e.to_string()),
            },
        };
        self.checks.push(check);
    }

    fn abs(&mut self, name: impl Into<String>, value: Result<f64>, reference: f64, tol: f64) {
        self.push(name.into(), value, reference, tol, Comparison::Abs);
    }

    fn rel(&mut self, name: impl Into<String>, value: Result<f64>, reference: f64, tol: f64) {
        self.push(name.into(), value, reference, tol, Comparison::Rel);
    }
}

fn shape(a: f64, b: f64, c: f64) -> EllipsoidShape {
    EllipsoidShape::new(a, b, c).expect("reference shapes are valid")
}

/// Surface-area examples, printed to ten decimals.
pub const AREA_EXAMPLES: [([f64; 3], f64); 3] = [
    ([2.0, 1.0, 0.25], 13.6992108087),
    ([1.0, 1.0, 0.5], 8.6718827033),
    ([1.0, 0.8, 0.625], 8.1516189229),
];

/// Capacitance table: axes and `C/a`.
pub const CAPACITANCE_TABLE: [([f64; 3], f64); 3] = [
    ([5.0, 2.0, 1.0], 0.50822148949),
    ([10.0, 5.0, 4.0], 0.621383016235),
    ([10.0, 8.0, 5.0], 0.76121621804),
];

/// Demagnetizing table at κ = 2: axes and `(L, M, N)/4π`.
pub const DEMAG_TABLE: [([f64; 3], [f64; 3]); 3] = [
    (
        [3.0, 2.0, 1.0],
        [0.156300698829271, 0.267154040262005, 0.576545260908724],
    ),
    (
        [4.0, 3.0, 2.0],
        [0.211265605319304, 0.305006257867421, 0.483728136813275],
    ),
    (
        [10.0, 3.0, 2.0],
        [0.0725156494555862, 0.366221770806668, 0.561262579737746],
    ),
];

/// One row of the comparison with earlier numerical results, indexed by
/// `(c/a, b/a)`; `None` marks entries that were not published.
#[derive(Debug, Clone, Copy)]
pub struct ComparisonRow {
    pub c_over_a: f64,
    pub b_over_a: f64,
    pub closed_form: [f64; 3],
    pub numerical: [Option<f64>; 3],
}

pub const COMPARISON_TABLE: [ComparisonRow; 4] = [
    ComparisonRow {
        c_over_a: 0.017452,
        b_over_a: 0.99620,
        closed_form: [0.0133953, 0.0134714, 0.973133],
        numerical: [None, Some(0.013471), None],
    },
    ComparisonRow {
        c_over_a: 0.087156,
        b_over_a: 0.984920,
        closed_form: [0.0613072, 0.062672, 0.876021],
        numerical: [Some(0.06108), Some(0.06281), Some(0.87611)],
    },
    ComparisonRow {
        c_over_a: 0.5,
        b_over_a: 0.98863,
        closed_form: [0.235445, 0.238955, 0.5256],
        numerical: [Some(0.23555), Some(0.23885), Some(0.5256)],
    },
    ComparisonRow {
        c_over_a: 0.087156,
        b_over_a: 1.0,
        closed_form: [0.0615658, 0.0615658, 0.876868],
        numerical: [Some(0.06154), Some(0.06154), Some(0.87692)],
    },
];

pub const FOUR_DIM_AXES: [f64; 4] = [2.0, 5.0 / 3.0, 4.0 / 3.0, 1.0];
#[allow(clippy::excessive_precision)]
pub const FOUR_DIM_CAPACITANCE: f64 = 4.406592791665676649174487;

/// Fixed regression shapes with aspect ratios from 1 to 57.
pub fn regression_grid() -> Vec<EllipsoidShape> {
    const AXES: [[f64; 3]; 25] = [
        [1.0, 1.0, 1.0],
        [2.0, 2.0, 1.0],
        [2.0, 1.0, 1.0],
        [3.0, 2.0, 1.0],
        [4.0, 3.0, 2.0],
        [5.0, 2.0, 1.0],
        [10.0, 5.0, 4.0],
        [10.0, 8.0, 5.0],
        [10.0, 3.0, 2.0],
        [7.0, 3.0, 2.0],
        [1.0, 1.0, 0.5],
        [1.0, 0.8, 0.625],
        [2.0, 1.0, 0.25],
        [57.0, 57.0, 1.0],
        [57.0, 1.0, 1.0],
        [57.0, 30.0, 1.0],
        [57.0, 7.0, 1.0],
        [57.0, 56.0, 55.0],
        [20.0, 19.0, 1.0],
        [20.0, 2.0, 1.9],
        [1.0, 0.99620, 0.017452],
        [1.0, 0.984920, 0.087156],
        [1.0, 0.98863, 0.5],
        [1.0, 1.0, 0.087156],
        [13.0, 5.0, 1.0],
    ];
    AXES.iter().map(|&[a, b, c]| shape(a, b, c)).collect()
}

/// `(δ, ε)` pairs with `0 <= ε <= δ < 1` for [`section2_identity_check`].
pub fn section2_grid() -> Vec<(f64, f64)> {
    vec![
        (0.0, 0.0),
        (0.5, 0.0),
        (0.5, 0.5),
        (0.75, 0.75),
        (0.9375, 0.75),
        (0.9, 0.3),
        (0.96, 0.84),
        (0.99, 0.5),
        (0.999, 0.99),
        (0.3, 0.1),
    ]
}

fn tables(tol: Tolerance) -> Vec<Check> {
    let mut c = Collector::new(Suite::Tables);
    for ([a, b, cc], printed) in AREA_EXAMPLES {
        // one unit in the tenth decimal: the printed digits are truncated, not rounded
        let v = surface_area(&shape(a, b, cc), tol).map(|r| r.value);
        c.abs(format!("area({a}, {b}, {cc})"), v, printed, 1e-10);
    }
    for ([a, b, cc], printed) in CAPACITANCE_TABLE {
        let v = capacitance(&shape(a, b, cc), tol).map(|r| r.value / a);
        c.rel(format!("C/a({a}, {b}, {cc})"), v, printed, 1e-10);
    }
    for ([a, b, cc], row) in DEMAG_TABLE {
        let d = demagnetizing_factors(&shape(a, b, cc), 2.0, tol);
        for (k, (label, want)) in ["L", "M", "N"].iter().zip(row).enumerate() {
            let v = d.as_ref().map(|d| d.factors()[k] / (4.0 * PI)).map_err(Clone::clone);
            c.rel(format!("{label}/4pi({a}, {b}, {cc})"), v, want, 1e-12);
        }
        let sum = d
            .as_ref()
            .map(|d| d.factors().iter().sum::<f64>() / (4.0 * PI))
            .map_err(Clone::clone);
        c.abs(format!("row sum({a}, {b}, {cc})"), sum, 1.0, 1e-12);
    }
    for row in COMPARISON_TABLE {
        let s = shape(1.0, row.b_over_a, row.c_over_a);
        let d = demagnetizing_factors(&s, 2.0, tol);
        for k in 0..3 {
            let label = ["L", "M", "N"][k];
            let v = d.as_ref().map(|d| d.coefficients()[k]).map_err(Clone::clone);
            let tag = format!("c/a={}, b/a={}", row.c_over_a, row.b_over_a);
            c.rel(
                format!("{label} closed form ({tag})"),
                v.clone(),
                row.closed_form[k],
                1e-5,
            );
            if let Some(num) = row.numerical[k] {
                c.abs(format!("{label} numerical ({tag})"), v, num, 2e-3);
            }
        }
    }
    let h = HyperEllipsoidShape::new(&FOUR_DIM_AXES).expect("valid axes");
    c.rel(
        "C(2, 5/3, 4/3, 1)",
        capacitance_nd(&h, tol).map(|r| r.value),
        FOUR_DIM_CAPACITANCE,
        1e-12,
    );
    c.checks
}

fn identities(tol: Tolerance) -> Vec<Check> {
    let mut c = Collector::new(Suite::Identities);
    for r in [0.5, 1.0, 3.0] {
        let s = EllipsoidShape::sphere(r).expect("positive radius");
        c.rel(
            format!("sphere area r={r}"),
            surface_area(&s, tol).map(|v| v.value),
            4.0 * PI * r * r,
            1e-12,
        );
        c.rel(
            format!("sphere C r={r}"),
            capacitance(&s, tol).map(|v| v.value),
            r,
            1e-12,
        );
        let d = demagnetizing_factors(&s, 2.0, tol);
        for k in 0..3 {
            let v = d.as_ref().map(|d| d.coefficients()[k]).map_err(Clone::clone);
            c.abs(format!("sphere n[{k}] r={r}"), v, 1.0 / 3.0, 1e-12);
        }
    }
    for n in 3..=6 {
        let h = HyperEllipsoidShape::new(&vec![1.25; n]).expect("valid axes");
        for axis in 1..=n {
            let v = demagnetizing_nd(&h, axis, 2.0, tol).map(|r| r.value);
            c.rel(format!("{n}-sphere factor axis {axis}"), v, 4.0 * PI / n as f64, 1e-12);
        }
        let v = capacitance_nd(&h, tol).map(|r| r.value);
        c.rel(
            format!("{n}-sphere C"),
            v,
            (n as f64 - 2.0) * 1.25f64.powi(n as i32 - 2),
            1e-12,
        );
    }
    for s in regression_grid() {
        let d = demagnetizing_factors(&s, 2.0, tol).map(|d| d.factors().iter().sum::<f64>());
        c.rel(format!("L+M+N = 4pi {:?}", s.axes()), d, 4.0 * PI, 1e-12);
    }
    // elementary reductions of the hypergeometric functions
    for x in [0.1, 0.4, 0.7, 0.95] {
        let lhs = gauss_2f1(0.5, 1.0, 1.5, x * x, tol).map(|r| 2.0 * x * r.value);
        c.rel(
            format!("log((1+x)/(1-x)) x={x}"),
            lhs,
            ((1.0 + x) / (1.0 - x)).ln(),
            1e-12,
        );
        let lhs = gauss_2f1(0.5, 0.5, 1.5, x, tol).map(|r| r.value);
        c.rel(
            format!("asin(sqrt x)/sqrt x x={x}"),
            lhs,
            x.sqrt().asin() / x.sqrt(),
            1e-12,
        );
        let p = AppellF1Params::new(1.5, 0.5, 1.5, 2.5, x, x);
        let lhs = appell_f1_with(&p, F1Method::Quadrature, tol).map(|r| r.value);
        let rhs = gauss_2f1(1.5, 2.0, 2.5, x, tol).map(|r| r.value).unwrap_or(f64::NAN);
        c.rel(format!("F1 at x = y, x={x}"), lhs, rhs, 1e-12);
        let p = LauricellaFdParams::new(1.0, vec![0.5, 0.5, 0.5], 2.0, vec![x, 0.0, 0.3]);
        let lhs = lauricella_fd(&p, tol).map(|r| r.value);
        let rhs = appell_f1(&AppellF1Params::new(1.0, 0.5, 0.5, 2.0, x, 0.3), tol)
            .map(|r| r.value)
            .unwrap_or(f64::NAN);
        c.rel(format!("F_D zero slot, x={x}"), lhs, rhs, 1e-12);
    }
    c.checks
}

fn oracle_bound(oracle_err: f64) -> f64 {
    1e-8f64.max(10.0 * oracle_err)
}

fn oracle(tol: Tolerance, q: QuadratureSpec) -> Vec<Check> {
    let mut c = Collector::new(Suite::Oracle);
    for s in regression_grid() {
        let tag = format!("{:?}", s.axes());
        match area_integral(&s, q) {
            Ok(o) => c.abs(
                format!("area {tag}"),
                surface_area(&s, tol).map(|r| r.value),
                o.value,
                oracle_bound(o.abs_error),
            ),
            Err(e) => c.abs(format!("area {tag}"), Err(e), f64::NAN, 1e-8),
        }
        let h = HyperEllipsoidShape::try_from(&s).expect("solid shapes lift to n = 3");
        match capacitance_integral(&h, q) {
            Ok(o) => c.abs(
                format!("C {tag}"),
                capacitance(&s, tol).map(|r| r.value),
                o.value,
                oracle_bound(o.abs_error),
            ),
            Err(e) => c.abs(format!("C {tag}"), Err(e), f64::NAN, 1e-8),
        }
        let closed = demagnetizing_factors(&s, 2.0, tol);
        match demag_integrals(&s, 2.0, q) {
            Ok(o) => {
                for k in 0..3 {
                    let v = closed.as_ref().map(|d| d.coefficients()[k]).map_err(Clone::clone);
                    c.abs(
                        format!("n[{k}] {tag}"),
                        v,
                        o.coefficients()[k],
                        oracle_bound(o.abs_error_estimate),
                    );
                }
            }
            Err(e) => c.abs(format!("demag {tag}"), Err(e), f64::NAN, 1e-8),
        }
    }
    for (delta, eps) in section2_grid() {
        let name = format!("area integral identity d={delta} e={eps}");
        match section2_identity_check(delta, eps, q) {
            Ok((lhs, rhs)) => c.abs(name, Ok(lhs), rhs, 1e-9),
            Err(e) => c.abs(name, Err(e), f64::NAN, 1e-9),
        }
    }
    let h = HyperEllipsoidShape::new(&FOUR_DIM_AXES).expect("valid axes");
    c.rel(
        "C(2, 5/3, 4/3, 1) oracle",
        capacitance_integral(&h, q).map(|o| o.value),
        FOUR_DIM_CAPACITANCE,
        1e-10,
    );
    let sets: [(f64, f64, f64, f64); 6] = [
        (0.5, 0.5, 0.5, 1.5),
        (1.5, 0.5, 0.5, 2.5),
        (1.5, 1.5, 0.5, 2.5),
        (1.5, 0.5, 1.5, 2.5),
        (0.5, -0.5, 1.5, 1.5),
        (0.5, -0.5, 1.5, 2.5),
    ];
    for (al, b1, b2, g) in sets {
        let (x, y) = (0.75, 5.0 / 9.0);
        let series = appell_f1(&AppellF1Params::new(al, b1, b2, g, x, y), tol);
        let quad = lauricella_fd_integral(al, &[b1, b2], g, &[x, y], q);
        let name = format!("Euler integral F1({al}, {b1}, {b2}, {g})");
        match quad {
            Ok(o) => c.rel(name, series.map(|r| r.value), o.value, 1e-10),
            Err(e) => c.rel(name, Err(e), f64::NAN, 1e-10),
        }
    }
    c.checks
}

/// Runs `suite`, evaluating closed forms at `tol` and the oracle at `q`.
/// Check tolerances are fixed and do not follow `tol` or `q`.
pub fn run_suite(suite: Suite, tol: Tolerance, q: QuadratureSpec) -> Result<VerifyReport> {
    if !(tol.rel > 0.0 && tol.rel < 1.0) {
        return Err(Error::Domain(format!(
            "relative tolerance must be in (0, 1), got {}",
            tol.rel
        )));
    }
    let checks = match suite {
        Suite::Tables => tables(tol),
        Suite::Identities => identities(tol),
        Suite::Oracle => oracle(tol, q),
        Suite::All => {
            let mut all = tables(tol);
            all.extend(identities(tol));
            all.extend(oracle(tol, q));
            all
        }
    };
    Ok(VerifyReport::from_checks(suite, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fails(r: &VerifyReport) -> Vec<String> {
        r.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {} vs {} ({:e})", c.name, c.value, c.reference, c.residual))
            .collect()
    }

    #[test]
    fn grid_spans_aspect_ratios() {
        let g = regression_grid();
        assert_eq!(g.len(), 25);
        let max = g.iter().map(|s| s.aspect_ratio()).fold(0.0, f64::max);
        assert!((max - 57.3).abs() < 0.1, "{max}");
        assert!(g.iter().any(|s| s.aspect_ratio() == 1.0));
    }

    #[test]
    fn every_suite_passes() {
        for suite in [Suite::Tables, Suite::Identities, Suite::Oracle] {
            let r = run_suite(suite, Tolerance::default(), QuadratureSpec::default()).unwrap();
            assert!(r.passed, "{:?}", fails(&r));
        }
    }

    #[test]
    fn tables_residual() {
        let r = run_suite(Suite::Tables, Tolerance::default(), QuadratureSpec::default()).unwrap();
        assert!(r
            .checks
            .iter()
            .filter(|c| c.comparison == Comparison::Abs && c.tolerance <= 1e-10)
            .all(|c| c.residual < 1e-9));
    }

    #[test]
    fn failed_evaluation_is_reported() {
        let mut c = Collector::new(Suite::Tables);
        c.abs("x", Err(Error::Domain("bad".into())), 1.0, 1.0);
        let r = VerifyReport::from_checks(Suite::Tables, c.checks);
        assert!(!r.passed);
        assert_eq!(r.failures, 1);
        assert!(r.checks[0].error.is_some());
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(run_suite(Suite::Tables, Tolerance::with_rel(0.0), QuadratureSpec::default()).is_err());
    }
}
