//! The quaternionic data on S⁷ = P̃⁻S⁴ over the coframe (e, f, dt) and the
//! squashed NP₂ structure built from it.

use crate::exterior::{CoframeSpec, Form, OrthoFrame};
use crate::quaternionic::{quat_wedge, verify_curvature_components, QuatForm};
use crate::scalars::{AlgebraicScalar, ParamPoly, TrigScalar};

use super::su3::Su3Structure;

/// 2c_k + 1.
fn two_c_plus_one(k: usize) -> TrigScalar {
    &TrigScalar::c(k).scale(&AlgebraicScalar::integer(2)) + &TrigScalar::one()
}

fn vector_from(f: impl Fn(usize) -> Form) -> QuatForm {
    QuatForm::vector(f(1), f(2), f(3))
}

/// The connection on Λ²₋T*S⁴: φ_k = −(2c_k + 1) e_k.
pub fn connection(cf: &CoframeSpec) -> QuatForm {
    vector_from(|k| cf.gen(&format!("e{k}")).scale_trig(&-two_c_plus_one(k)))
}

/// β_k = (2c_k + 1) e_k + f_k.
pub fn beta(cf: &CoframeSpec) -> QuatForm {
    vector_from(|k| &cf.gen(&format!("e{k}")).scale_trig(&two_c_plus_one(k)) + &cf.gen(&format!("f{k}")))
}

/// The ASD basis ω_k = 4s_k dt∧e_k − 16 s_i s_j e_ij.
pub fn omega(cf: &CoframeSpec) -> QuatForm {
    vector_from(|k| {
        let (i, j) = (k % 3 + 1, (k + 1) % 3 + 1);
        let e = |n: usize| cf.gen(&format!("e{n}"));
        let first = cf.dt().wedge(&e(k)).scale_trig(&TrigScalar::s(k).scale(&AlgebraicScalar::integer(4)));
        let ss = (&TrigScalar::s(i) * &TrigScalar::s(j)).scale(&AlgebraicScalar::integer(16));
        &first - &e(i).wedge(&e(j)).scale_trig(&ss)
    })
}

/// Φ = dφ + φ∧φ for the connection above.
pub fn curvature(cf: &CoframeSpec) -> QuatForm {
    verify_curvature_components(&connection(cf), cf).expect("S7 coframe generators")
}

/// Θ = −Re(Φ∧β) = Σ Φ_k∧β_k.
pub fn theta(cf: &CoframeSpec) -> Form {
    -quat_wedge(&curvature(cf), &beta(cf)).re()
}

/// Υ = β₁₂₃ = −(1/6) Re(β∧β∧β).
pub fn upsilon(cf: &CoframeSpec) -> Form {
    let b = beta(cf);
    quat_wedge(&quat_wedge(&b, &b), &b)
        .re()
        .scale_alg(&AlgebraicScalar::ratio(-1, 6))
}

/// χ = −Re(Φ∧Φ).
pub fn chi(cf: &CoframeSpec) -> Form {
    let p = curvature(cf);
    -quat_wedge(&p, &p).re()
}

/// λ = 2/√5.
pub fn squashing() -> AlgebraicScalar {
    AlgebraicScalar::sqrt5_times(2, 5)
}

/// X_{2k−1} = λf_k + λ(2c_k+1)e_k, X_{2k} = 4s_k e_k, X₇ = −dt.
pub fn s7_frame(cf: &CoframeSpec, lambda: &AlgebraicScalar) -> OrthoFrame {
    let mut x = Vec::with_capacity(7);
    for k in 1..=3 {
        let e = cf.gen(&format!("e{k}"));
        let f = cf.gen(&format!("f{k}"));
        x.push(&f.scale_alg(lambda) + &e.scale_trig(&two_c_plus_one(k).scale(lambda)));
        x.push(e.scale_trig(&TrigScalar::s(k).scale(&AlgebraicScalar::integer(4))));
    }
    x.push(-cf.dt());
    OrthoFrame::new(x).expect("1-forms")
}

/// φ = 2λΘ + λ³Υ with λ = 2/√5, over (e, f, dt), with the frame X.
pub fn build_s7_squashed() -> (Form, OrthoFrame, CoframeSpec) {
    let cf = CoframeSpec::s7();
    let lam = squashing();
    let phi = &theta(&cf).scale_alg(&(&lam * &AlgebraicScalar::integer(2)))
        + &upsilon(&cf).scale_alg(&lam.pow(3));
    let frame = s7_frame(&cf, &lam);
    (phi, frame, cf)
}

/// The same structure in its frame normal form ξ∧X₇ + Re Ξ. With X₇ = −dt
/// the dt-terms are −dt∧ξ.
pub fn build_s7_canonical() -> (Form, OrthoFrame, CoframeSpec) {
    let cf = CoframeSpec::s7();
    let frame = s7_frame(&cf, &squashing());
    let su3 = Su3Structure::from_frame(frame.elements());
    let phi = &su3.xi.wedge(frame.x(6)) + &su3.re_xi;
    (phi, frame, cf)
}

/// Frame monomial X_I over the base coframe.
pub fn frame_monomial(frame: &OrthoFrame, idx: &[usize]) -> Form {
    frame.expand(&Form::from_indices(idx, ParamPoly::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upsilon_is_triple_product() {
        let cf = CoframeSpec::s7();
        let b = beta(&cf);
        let direct = b.c[1].wedge(&b.c[2]).wedge(&b.c[3]);
        assert_eq!(upsilon(&cf), direct);
    }

    #[test]
    fn curvature_is_half_omega() {
        let cf = CoframeSpec::s7();
        let half = omega(&cf).scale(&AlgebraicScalar::ratio(1, 2));
        assert_eq!(curvature(&cf), half);
    }

    #[test]
    fn varphi_build_matches_frame_normal_form() {
        let (a, frame, _) = build_s7_squashed();
        let (b, _, _) = build_s7_canonical();
        assert_eq!(a, b);
        assert_eq!(upsilon(&CoframeSpec::s7()).scale_alg(&squashing().pow(3)), frame_monomial(&frame, &[0, 2, 4]));
    }

    #[test]
    fn chi_is_volume_multiple() {
        let cf = CoframeSpec::s7();
        let frame = s7_frame(&cf, &squashing());
        // χ = −(3/2) dt∧X₂₄₆ and dt∧X₂₄₆ = X₂₄₆₇ since X₇ = −dt
        let expected = frame_monomial(&frame, &[1, 3, 5, 6]).scale_alg(&AlgebraicScalar::ratio(-3, 2));
        assert_eq!(chi(&cf), expected);
    }
}
