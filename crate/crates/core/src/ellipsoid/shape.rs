use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Axes within this relative distance of each other are treated as equal.
pub const EQUALITY_SNAP: f64 = 1e-14;

/// Validated triaxial semi-axes in canonical order `a >= b >= c >= 0`.
///
/// `perm[k]` is the position in the caller's input of canonical axis `k`,
/// so results can be mapped back to the order the axes were given in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipsoidShape {
    a: f64,
    b: f64,
    c: f64,
    perm: [usize; 3],
}

/// How many distinct axes a shape has after snapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeClass {
    Sphere,
    /// `a = b > c`
    Oblate,
    /// `a > b = c`
    Prolate,
    Scalene,
}

fn sort_descending(axes: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut perm: Vec<usize> = (0..axes.len()).collect();
    perm.sort_by(|&i, &j| axes[j].total_cmp(&axes[i]).then(i.cmp(&j)));
    let mut sorted: Vec<f64> = perm.iter().map(|&i| axes[i]).collect();
    for k in 1..sorted.len() {
        if sorted[k - 1] - sorted[k] <= EQUALITY_SNAP * sorted[k - 1] {
            sorted[k] = sorted[k - 1];
        }
    }
    (sorted, perm)
}

/// Squared axis ratios enter every formula; they must not underflow.
fn check_ratio(long: f64, short: f64) -> Result<()> {
    if short > 0.0 && (short / long).powi(2) < f64::MIN_POSITIVE {
        return Err(Error::DegenerateShape(format!(
            "axis ratio {:e} is too small to represent its square",
            short / long
        )));
    }
    Ok(())
}

fn check_axis(v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::Domain(format!(
            "semi-axes must be finite and non-negative, got {v}"
        )));
    }
    Ok(())
}

impl EllipsoidShape {
    /// Accepts the axes in any order. One zero axis (an elliptic disk) is
    /// allowed; two or more are rejected.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        for v in [x, y, z] {
            check_axis(v)?;
        }
        let (s, p) = sort_descending(&[x, y, z]);
        if s[1] == 0.0 {
            return Err(Error::DegenerateShape("at most one semi-axis may be zero".into()));
        }
        check_ratio(s[0], s[2])?;
        Ok(Self {
            a: s[0],
            b: s[1],
            c: s[2],
            perm: [p[0], p[1], p[2]],
        })
    }

    pub fn from_axes(axes: [f64; 3]) -> Result<Self> {
        Self::new(axes[0], axes[1], axes[2])
    }

    pub fn sphere(r: f64) -> Result<Self> {
        Self::new(r, r, r)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn axes(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    /// Axes in the caller's original order (after snapping).
    pub fn input_axes(&self) -> [f64; 3] {
        self.to_input_order(self.axes())
    }

    /// Reorders per-canonical-axis values into the caller's input order.
    pub fn to_input_order<T: Copy>(&self, canonical: [T; 3]) -> [T; 3] {
        let mut out = canonical;
        for (k, &i) in self.perm.iter().enumerate() {
            out[i] = canonical[k];
        }
        out
    }

    /// `1 - c²/a²`
    pub fn delta(&self) -> f64 {
        1.0 - (self.c / self.a).powi(2)
    }

    /// `1 - c²/b²`
    pub fn epsilon(&self) -> f64 {
        1.0 - (self.c / self.b).powi(2)
    }

    /// `1 - b²/a²`
    pub fn x(&self) -> f64 {
        1.0 - (self.b / self.a).powi(2)
    }

    /// `1 - c²/a²`
    pub fn y(&self) -> f64 {
        self.delta()
    }

    /// `b²/a²`, the complement `1 - x` without cancellation.
    pub fn x_complement(&self) -> f64 {
        (self.b / self.a).powi(2)
    }

    /// `c²/a²`, the complement of `y` and of `δ`.
    pub fn y_complement(&self) -> f64 {
        (self.c / self.a).powi(2)
    }

    /// `c²/b²`, the complement of `ε`.
    pub fn epsilon_complement(&self) -> f64 {
        (self.c / self.b).powi(2)
    }

    /// Aspect ratio `a/c`.
    pub fn aspect_ratio(&self) -> f64 {
        self.a / self.c
    }

    pub fn is_disk(&self) -> bool {
        self.c == 0.0
    }

    pub fn class(&self) -> ShapeClass {
        match (self.a == self.b, self.b == self.c) {
            (true, true) => ShapeClass::Sphere,
            (true, false) => ShapeClass::Oblate,
            (false, true) => ShapeClass::Prolate,
            (false, false) => ShapeClass::Scalene,
        }
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Domain(format!("scale factor must be positive, got {s}")));
        }
        let [x, y, z] = self.input_axes();
        Self::new(s * x, s * y, s * z)
    }

    pub(crate) fn require_solid(&self) -> Result<()> {
        if self.is_disk() {
            return Err(Error::DegenerateShape(
                "this quantity needs three positive semi-axes".into(),
            ));
        }
        Ok(())
    }
}

/// Validated semi-axes of an ellipsoid in `n >= 3` dimensions, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperEllipsoidShape {
    axes: Vec<f64>,
    perm: Vec<usize>,
}

impl HyperEllipsoidShape {
    pub fn new(axes: &[f64]) -> Result<Self> {
        if axes.len() < 3 {
            return Err(Error::Domain(format!("need at least 3 semi-axes, got {}", axes.len())));
        }
        for &v in axes {
            check_axis(v)?;
            if v == 0.0 {
                return Err(Error::DegenerateShape(
                    "n-dimensional semi-axes must be positive".into(),
                ));
            }
        }
        let (axes, perm) = sort_descending(axes);
        check_ratio(axes[0], axes[axes.len() - 1])?;
        Ok(Self { axes, perm })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[f64] {
        &self.axes
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Canonical position of the axis given at `input_index` (0-based).
    pub fn canonical_index(&self, input_index: usize) -> Option<usize> {
        self.perm.iter().position(|&i| i == input_index)
    }

    /// `x_j = 1 - a_j²/a₁²` for `j = 2..n`.
    pub fn moduli(&self) -> Vec<f64> {
        let a1 = self.axes[0];
        self.axes[1..].iter().map(|&aj| 1.0 - (aj / a1).powi(2)).collect()
    }

    /// `(a_j/a₁)²` for `j >= 2`, the complements of [`moduli`](Self::moduli).
    pub fn moduli_complements(&self) -> Vec<f64> {
        let a1 = self.axes[0];
        self.axes[1..].iter().map(|&aj| (aj / a1).powi(2)).collect()
    }
}

impl TryFrom<&EllipsoidShape> for HyperEllipsoidShape {
    type Error = Error;

    fn try_from(s: &EllipsoidShape) -> Result<Self> {
        HyperEllipsoidShape::new(&s.input_axes())
    }
}
