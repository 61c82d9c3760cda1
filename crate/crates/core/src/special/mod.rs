//! Hypergeometric functions of one and several variables.

pub mod appell;
pub mod closed_forms;
pub(crate) mod euler;
pub mod gamma;
pub mod gauss;
pub mod lauricella;

/// Variables at or below this magnitude are summed directly.
pub const SERIES_RADIUS: f64 = 0.5;

pub use appell::{appell_f1, appell_f1_reduce_unit, appell_f1_with, AppellF1Params, F1Method, GaussCall};
pub use closed_forms::{gauss_2f1_closed_form, GaussClosedForm};
pub use gamma::{gamma_half_integer, pochhammer};
pub use gauss::gauss_2f1;
pub use lauricella::{lauricella_fd, lauricella_fd_with, FdMethod, LauricellaFdParams};
