//! Elementary closed forms of the Gauss functions that appear in the spheroid limits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The seven tabulated `2F1(α, β; γ; z)` parameter triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GaussClosedForm {
    /// `F(1/2, 1; 3/2; z) = atanh(√z)/√z`
    HalfOneThreeHalves,
    /// `F(1/2, 1; 5/2; z)`
    HalfOneFiveHalves,
    /// `F(1/2, 1/2; 3/2; z) = asin(√z)/√z`
    HalfHalfThreeHalves,
    /// `F(1/2, 3/2; 3/2; z) = (1-z)^{-1/2}`
    HalfThreeHalvesThreeHalves,
    /// `F(1/2, 3/2; 5/2; z)`
    HalfThreeHalvesFiveHalves,
    /// `F(1/2, 1/2; 5/2; z)`
    HalfHalfFiveHalves,
    /// `F(3/2, 3/2; 5/2; z)`
    ThreeHalvesThreeHalvesFiveHalves,
}

impl GaussClosedForm {
    pub const ALL: [GaussClosedForm; 7] = [
        GaussClosedForm::HalfOneThreeHalves,
        GaussClosedForm::HalfOneFiveHalves,
        GaussClosedForm::HalfHalfThreeHalves,
        GaussClosedForm::HalfThreeHalvesThreeHalves,
        GaussClosedForm::HalfThreeHalvesFiveHalves,
        GaussClosedForm::HalfHalfFiveHalves,
        GaussClosedForm::ThreeHalvesThreeHalvesFiveHalves,
    ];

    /// `(α, β, γ)` of the represented function.
    pub fn parameters(self) -> (f64, f64, f64) {
        match self {
            GaussClosedForm::HalfOneThreeHalves => (0.5, 1.0, 1.5),
            GaussClosedForm::HalfOneFiveHalves => (0.5, 1.0, 2.5),
            GaussClosedForm::HalfHalfThreeHalves => (0.5, 0.5, 1.5),
            GaussClosedForm::HalfThreeHalvesThreeHalves => (0.5, 1.5, 1.5),
            GaussClosedForm::HalfThreeHalvesFiveHalves => (0.5, 1.5, 2.5),
            GaussClosedForm::HalfHalfFiveHalves => (0.5, 0.5, 2.5),
            GaussClosedForm::ThreeHalvesThreeHalvesFiveHalves => (1.5, 1.5, 2.5),
        }
    }
}

/// `log((1+s)/(1-s))` for `s = √z`, using `1 - s = (1 - z)/(1 + s)` to stay accurate near 1.
pub(crate) fn log_ratio(z: f64) -> f64 {
    2.0 * z.sqrt().ln_1p() - (1.0 - z).ln()
}

/// Evaluates the elementary expression for `kind` at `z` in `(0, 1)`.
///
/// `z = 0` returns the series value 1; the expressions themselves are
/// indeterminate there and lose accuracy for very small `z`.
pub fn gauss_2f1_closed_form(kind: GaussClosedForm, z: f64) -> Result<f64> {
    if z == 0.0 {
        return Ok(1.0);
    }
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(format!(
            "closed forms are tabulated for 0 < z < 1, got {z}"
        )));
    }
    let s = z.sqrt();
    let w = 1.0 - z;
    let asin_s = s.asin();
    let value = match kind {
        GaussClosedForm::HalfOneThreeHalves => log_ratio(z) / (2.0 * s),
        GaussClosedForm::HalfOneFiveHalves => 1.5 * (1.0 / z - 0.5 * w / (z * s) * log_ratio(z)),
        GaussClosedForm::HalfHalfThreeHalves => asin_s / s,
        GaussClosedForm::HalfThreeHalvesThreeHalves => 1.0 / w.sqrt(),
        GaussClosedForm::HalfThreeHalvesFiveHalves => 1.5 * asin_s / (z * s) - 1.5 * w.sqrt() / z,
        GaussClosedForm::HalfHalfFiveHalves => {
            1.5 * (w * (-asin_s / (2.0 * z * s) + 1.0 / (2.0 * z * w.sqrt())) + 0.5 * asin_s / s)
        }
        GaussClosedForm::ThreeHalvesThreeHalvesFiveHalves => {
            2.0 * (-1.5 * asin_s / (z * s) + 0.75 * w.sqrt() / z + 0.75 / w.sqrt() * (1.0 / z + 1.0))
        }
    };
    Ok(value)
}
