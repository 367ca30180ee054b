//! The Berger space B⁷ = SO(5)/SO(3): the frame Y obtained by pulling back
//! the Maurer–Cartan form along R(t), and the NP₂ form ξ∧Y₇ + Re Ξ.

use crate::exterior::{to_frame_basis, CoframeSpec, Form, OrthoFrame};
use crate::liealg::{invariant_three_form, maurer_cartan_so4, pullback_frame};
use crate::scalars::{AlgebraicScalar, FourierComponent, TrigScalar};

use super::su3::Su3Structure;

pub fn b7_frame(cf: &CoframeSpec) -> OrthoFrame {
    let y = pullback_frame(&maurer_cartan_so4(cf), cf).expect("printed Maurer-Cartan matrix is flat");
    OrthoFrame::new(y).expect("1-forms")
}

/// φ = ξ∧Y₇ + Re Ξ over (p, n, dt), with the frame Y.
pub fn build_b7() -> (Form, OrthoFrame, CoframeSpec) {
    let cf = CoframeSpec::b7();
    let frame = b7_frame(&cf);
    let su3 = Su3Structure::from_frame(frame.elements());
    let phi = &su3.xi.wedge(frame.x(6)) + &su3.re_xi;
    (phi, frame, cf)
}

/// φ rewritten over the frame equals the normalized invariant 3-form
/// Σ tr([γi,γj]γk) γ*_ijk under Y ↔ γ*.
pub fn matches_invariant_form() -> bool {
    let (phi, frame, cf) = build_b7();
    match to_frame_basis(&phi, &frame, &cf) {
        Ok(pf) => pf == invariant_three_form().normalized,
        Err(_) => false,
    }
}

/// Exact value at t = 0: the constant plus every cosine coefficient.
pub fn value_at_zero(x: &TrigScalar) -> AlgebraicScalar {
    x.components()
        .into_iter()
        .filter(|(c, _)| !matches!(c, FourierComponent::Sin(_)))
        .fold(AlgebraicScalar::zero(), |acc, (_, v)| &acc + &v)
}

/// Y₂ vanishes at t = 0 (the singular orbit).
pub fn y2_vanishes_at_zero(frame: &OrthoFrame) -> bool {
    frame.x(1).terms().all(|(_, c)| c.as_trig().is_some_and(|t| value_at_zero(&t).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ParamPoly;
    use crate::structures::np2::np2_mu;

    #[test]
    fn im_xi_pattern() {
        let (_, frame, _) = build_b7();
        let su3 = Su3Structure::from_frame(frame.elements());
        let m = |i: &[usize], c: i64| frame.expand(&Form::from_indices(i, ParamPoly::integer(c)));
        let expected = &(&(&m(&[1, 3, 5], -1) + &m(&[1, 2, 4], 1)) + &m(&[0, 3, 4], 1)) + &m(&[0, 2, 5], 1);
        assert_eq!(su3.im_xi, expected);
    }

    #[test]
    fn invariant_pattern_and_singular_orbit() {
        assert!(matches_invariant_form());
        let (_, frame, _) = build_b7();
        assert!(y2_vanishes_at_zero(&frame));
        assert!(!value_at_zero(&TrigScalar::c(1)).is_zero());
    }

    #[test]
    fn b7_is_nearly_parallel() {
        let (phi, frame, cf) = build_b7();
        let mu = np2_mu(&phi, &frame, &cf).unwrap();
        assert_eq!(mu, AlgebraicScalar::sqrt5_times(-6, 5));
    }
}
