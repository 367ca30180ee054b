//! The nearly-parallel condition dφ = μ *φ.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::exterior::{ext_d, CoframeSpec, Form, OrthoFrame};
use crate::scalars::{AlgebraicScalar, ParamPoly};

use super::report::VerificationReport;

/// The constant μ with dφ = μ *φ, or `NotProportional` carrying the
/// offending coefficient.
pub fn np2_mu(phi: &Form, frame: &OrthoFrame, cf: &CoframeSpec) -> Result<AlgebraicScalar> {
    if phi.degree().is_some_and(|d| d != 3) {
        return Err(Error::DegreeError {
            expected: 3,
            found: format!("{:?}", phi.degree()),
        });
    }
    let dphi = ext_d(phi, cf)?;
    let star = frame.hodge_star(phi, cf)?;
    // read μ off the first coefficient of *φ with a constant Fourier part
    let mut mu = None;
    for (b, c) in star.terms() {
        let Some(c) = c.as_trig() else {
            return Err(Error::NotProportional(format!("{} has parameters", cf.render(&star))));
        };
        let Some(u) = dphi.coefficient(*b).as_trig() else {
            return Err(Error::NotProportional(cf.render(&dphi)));
        };
        if let Some((comp, v)) = c.components().into_iter().last() {
            mu = Some(&u.component(comp) / &v);
            break;
        }
    }
    let mu = mu.unwrap_or_else(AlgebraicScalar::zero);
    let residual = &dphi - &star.scale(&ParamPoly::algebraic(mu.clone()));
    if residual.is_zero() {
        Ok(mu)
    } else {
        Err(Error::NotProportional(worst_coefficient(&residual, cf)))
    }
}

/// The residual term with the most Fourier terms, rendered over the coframe.
pub fn worst_coefficient(x: &Form, cf: &CoframeSpec) -> String {
    x.terms()
        .max_by_key(|(_, c)| c.terms().map(|(_, t)| t.components().len()).sum::<usize>())
        .map(|(b, c)| cf.render(&Form::monomial(*b, c.clone())))
        .unwrap_or_default()
}

pub fn verify_np2(identity: &str, phi: &Form, frame: &OrthoFrame, cf: &CoframeSpec) -> VerificationReport {
    let start = Instant::now();
    match np2_mu(phi, frame, cf) {
        Ok(mu) => VerificationReport::holds_with_mu(identity, &mu),
        Err(e) => VerificationReport::fails(identity, e.to_string()),
    }
    .timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::s7::{build_s7_squashed, frame_monomial};

    #[test]
    fn squashed_s7_mu() {
        let (phi, frame, cf) = build_s7_squashed();
        let mu = np2_mu(&phi, &frame, &cf).unwrap();
        assert_eq!(mu.square(), AlgebraicScalar::ratio(36, 5));
        assert_eq!(mu, AlgebraicScalar::sqrt5_times(-6, 5));
    }

    #[test]
    fn single_monomial_is_not_proportional() {
        let (_, frame, cf) = build_s7_squashed();
        let x123 = frame_monomial(&frame, &[0, 1, 2]);
        assert!(matches!(np2_mu(&x123, &frame, &cf), Err(Error::NotProportional(_))));
    }
}
