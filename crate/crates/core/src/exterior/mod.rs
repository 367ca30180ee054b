//! Exterior algebra over named coframes.

pub mod coframe;
pub mod form;
pub mod frame;
pub mod gram;

pub use coframe::{d_squared_check, ext_d, CoframeSpec};
pub use form::{wedge, wedge_all, Blade, Form};
pub use frame::{det_adj, hodge_star, hodge_star_frame, to_frame_basis, OrthoFrame};
pub use gram::{gram_matrix, sum_of_squares};
