//! so(5), the invariant 3-form of the Berger space, and the pullback frame.

pub mod pullback;
pub mod so5;

pub use pullback::{maurer_cartan_sign, maurer_cartan_so4, pullback_frame, pullback_matrix, FormMatrix};
pub use so5::{
    bracket, coordinates, eps_basis, gamma_basis, invariant_three_form, rho, rho_action_check, trace_pairing,
    FrameCurve, InvariantThreeForm, Mat5, RhoReport, So5Element,
};
