//! Geometric and physical quantities of ellipsoids.

pub mod area;
pub mod capacitance;
pub mod demag;
pub mod ndim;
pub mod potential;
pub mod shape;

pub use area::{surface_area, surface_area_oblate, surface_area_prolate, surface_area_prolate_transposed};
pub use capacitance::{capacitance, capacitance_special, CapacitanceKind};
pub use demag::{
    demagnetizing_factors, demagnetizing_special, oblate_coefficients, prolate_coefficients, DemagResult,
    SPHEROID_SERIES_LIMIT, TABLE_KAPPA,
};
pub use ndim::{capacitance_nd, demagnetizing_nd};
pub use potential::{interior_potential, PotentialCoefficients};
pub use shape::{EllipsoidShape, HyperEllipsoidShape, ShapeClass, EQUALITY_SNAP};
