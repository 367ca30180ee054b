//! Two-parameter-family frames on S⁷ and B⁷ and the nearly-half-flat
//! residuals of the SU(3) structures they define on the principal orbits.

use std::fmt;

use serde::Serialize;

use crate::exterior::{ext_d, CoframeSpec, Form, OrthoFrame};
use crate::scalars::{AlgebraicScalar, Bindings, ParamPoly, TrigScalar, Unknown};

use super::su3::Su3Structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnsatzFamily {
    /// [[λ, λ(ac_k+b)], [0, 4s_k]] acting on (f_k, e_k).
    S7Style,
    /// [[2λ, 2λac_k], [b, 2s_k]] acting on (p_k, n_k).
    B7Style,
}

/// Which of the two evolution equations to impose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum System {
    /// d Re Ξ = μ ½ξ² on the orbit.
    Nhf,
    /// The flow equation together with the NHF equation, sharing μ.
    Joint,
}

impl fmt::Display for AnsatzFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnsatzFamily::S7Style => "s7-style",
            AnsatzFamily::B7Style => "b7-style",
        })
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::Nhf => "nhf",
            System::Joint => "flow+nhf",
        })
    }
}

fn var(u: Unknown) -> ParamPoly {
    ParamPoly::var(u)
}

fn trig(x: TrigScalar) -> ParamPoly {
    ParamPoly::constant(x)
}

fn int(n: i64) -> ParamPoly {
    ParamPoly::integer(n)
}

impl AnsatzFamily {
    pub fn coframe(self) -> CoframeSpec {
        match self {
            AnsatzFamily::S7Style => CoframeSpec::s7(),
            AnsatzFamily::B7Style => CoframeSpec::b7(),
        }
    }

    /// The seven frame 1-forms with coefficients in λ, a, b and t.
    pub fn frame(self) -> Vec<Form> {
        let cf = self.coframe();
        let (lam, a, b) = (var(Unknown::Lambda), var(Unknown::A), var(Unknown::B));
        let mut x = Vec::with_capacity(7);
        for k in 1..=3 {
            let ck = trig(TrigScalar::c(k));
            let sk = trig(TrigScalar::s(k));
            match self {
                AnsatzFamily::S7Style => {
                    let (f, e) = (cf.gen(&format!("f{k}")), cf.gen(&format!("e{k}")));
                    let slope = &lam * &(&(&a * &ck) + &b);
                    x.push(&f.scale(&lam) + &e.scale(&slope));
                    x.push(e.scale(&(&int(4) * &sk)));
                }
                AnsatzFamily::B7Style => {
                    let (p, n) = (cf.gen(&format!("p{k}")), cf.gen(&format!("n{k}")));
                    let two_lam = &int(2) * &lam;
                    x.push(&p.scale(&two_lam) + &n.scale(&(&(&two_lam * &a) * &ck)));
                    x.push(&p.scale(&b) + &n.scale(&(&int(2) * &sk)));
                }
            }
        }
        x.push(-cf.dt());
        x
    }

    /// (λ, a, b) at which the family reduces to the NP₂ frame.
    pub fn canonical_bindings(self) -> Bindings {
        let lam = AlgebraicScalar::sqrt5_times(2, 5);
        let (a, b) = match self {
            AnsatzFamily::S7Style => (AlgebraicScalar::integer(2), AlgebraicScalar::one()),
            AnsatzFamily::B7Style => (AlgebraicScalar::ratio(1, 2), AlgebraicScalar::zero()),
        };
        Bindings::new()
            .with(Unknown::Lambda, lam)
            .with(Unknown::A, a)
            .with(Unknown::B, b)
    }

    pub fn canonical_frame(self) -> OrthoFrame {
        let b = self.canonical_bindings();
        OrthoFrame::new(self.frame().iter().map(|x| x.specialize(&b)).collect()).expect("1-forms")
    }

    pub fn su3(self) -> Su3Structure {
        Su3Structure::from_frame(&self.frame())
    }
}

/// Drop every term containing dt.
pub fn horizontal(x: &Form, cf: &CoframeSpec) -> Form {
    x.without_generator(cf.t_index())
}

fn mu() -> ParamPoly {
    var(Unknown::Mu)
}

/// [d Re Ξ]_H − μ ½ξ², over the base coframe.
pub fn nhf_residual(family: AnsatzFamily) -> Form {
    let cf = family.coframe();
    let su3 = family.su3();
    let d_re = horizontal(&ext_d(&su3.re_xi, &cf).expect("family generators"), &cf);
    &d_re - &su3.half_xi_squared().scale(&mu())
}

/// [dξ]_H + ∂_t Re Ξ − μ Im Ξ, with ∂_t acting on coefficients over the
/// fixed base generators. The sign of ∂_t comes from X₇ = −dt.
pub fn flow_residual(family: AnsatzFamily) -> Form {
    let cf = family.coframe();
    let su3 = family.su3();
    let d_xi = horizontal(&ext_d(&su3.xi, &cf).expect("family generators"), &cf);
    let dt_re = su3.re_xi.map_coeffs(ParamPoly::deriv_t);
    &(&d_xi + &dt_re) - &su3.im_xi.scale(&mu())
}

/// The residual forms imposed by `system`.
pub fn residuals(family: AnsatzFamily, system: System) -> Vec<Form> {
    match system {
        System::Nhf => vec![nhf_residual(family)],
        System::Joint => vec![flow_residual(family), nhf_residual(family)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::b7::b7_frame;
    use crate::structures::s7::{s7_frame, squashing};

    #[test]
    fn canonical_values_recover_np2_frames() {
        let s7 = AnsatzFamily::S7Style.canonical_frame();
        assert_eq!(s7, s7_frame(&CoframeSpec::s7(), &squashing()));
        let b7 = AnsatzFamily::B7Style.canonical_frame();
        assert_eq!(b7, b7_frame(&CoframeSpec::b7()));
    }

    #[test]
    fn half_xi_squared_pattern() {
        // ½ξ² = −16λ²(s₂s₃ e₂₃f₂₃ + …) in the S7 family
        let cf = CoframeSpec::s7();
        let h = AnsatzFamily::S7Style.su3().half_xi_squared();
        let lam2 = var(Unknown::Lambda).pow(2);
        let ss = trig(&TrigScalar::s(2) * &TrigScalar::s(3));
        let idx = |n: &str| cf.index_of(n).unwrap();
        let c = h.coefficient_of(&[idx("e2"), idx("e3"), idx("f2"), idx("f3")]);
        assert_eq!(c, &(&int(-16) * &lam2) * &ss);
    }

    #[test]
    fn e23f23_coefficient() {
        let cf = CoframeSpec::s7();
        let r = nhf_residual(AnsatzFamily::S7Style);
        let idx = |n: &str| cf.index_of(n).unwrap();
        let got = r.coefficient_of(&[idx("e2"), idx("e3"), idx("f2"), idx("f3")]);
        let (l, a, b) = (var(Unknown::Lambda), var(Unknown::A), var(Unknown::B));
        let l3 = l.pow(3);
        let c23 = trig(&TrigScalar::c(2) * &TrigScalar::c(3));
        let c1 = trig(TrigScalar::c(1));
        // −2λ³(b+b²) − 16λ − 2λ(16+a²λ²)c₂c₃ + 2λ³(ab−a)c₁ − μ·8λ²(1+2c₂c₃)
        let mut want = &(&int(-2) * &l3) * &(&b + &b.pow(2));
        want = &want - &(&int(16) * &l);
        want = &want - &(&(&(&int(2) * &l) * &(&int(16) + &(&a.pow(2) * &l.pow(2)))) * &c23);
        want = &want + &(&(&(&int(2) * &l3) * &(&(&a * &b) - &a)) * &c1);
        let mu_part = &(&int(8) * &l.pow(2)) * &(&int(1) + &(&int(2) * &c23));
        want = &want - &(&mu() * &mu_part);
        assert_eq!(got, want);
    }

    #[test]
    fn flow_sign_is_fixed_by_the_np2_point() {
        for fam in [AnsatzFamily::S7Style, AnsatzFamily::B7Style] {
            let mut at = fam.canonical_bindings();
            at.set(Unknown::Mu, AlgebraicScalar::sqrt5_times(-6, 5));
            assert!(flow_residual(fam).specialize(&at).is_zero(), "{fam}");
            // the opposite sign of the t-derivative leaves a residual
            let cf = fam.coframe();
            let su3 = fam.su3();
            let d_xi = horizontal(&ext_d(&su3.xi, &cf).unwrap(), &cf);
            let dt_re = su3.re_xi.map_coeffs(ParamPoly::deriv_t);
            let other = &(&d_xi - &dt_re) - &su3.im_xi.scale(&mu());
            assert!(!other.specialize(&at).is_zero(), "{fam}");
        }
    }
}
