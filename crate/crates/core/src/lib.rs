//! Surface area, capacitance and demagnetizing factors of ellipsoids through
//! Gauss, Appell F1 and Lauricella F_D hypergeometric functions, with an
//! independent quadrature oracle for the defining integrals.

pub mod ellipsoid;
pub mod error;
pub mod eval;
pub mod oracle;
pub mod quadrature;
pub mod special;
pub mod verify;

pub use ellipsoid::{
    capacitance, capacitance_nd, capacitance_special, demagnetizing_factors, demagnetizing_nd, demagnetizing_special,
    interior_potential, surface_area, CapacitanceKind, DemagResult, EllipsoidShape, HyperEllipsoidShape,
    PotentialCoefficients, ShapeClass,
};
pub use error::{Error, Result};
pub use eval::{EvalResult, Method, Tolerance};
pub use oracle::{OracleValue, QuadratureSpec};
pub use quadrature::Scheme;
