//! Named verification spaces: every identity of the suite, grouped the way
//! the command line exposes them.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exterior::{d_squared_check, CoframeSpec, Form, OrthoFrame};
use crate::liealg::{
    bracket, coordinates, eps_basis, gamma_basis, invariant_three_form, maurer_cartan_sign, maurer_cartan_so4,
    rho_action_check, trace_pairing, So5Element,
};
use crate::scalars::{AlgebraicScalar, ParamPoly, TrigScalar};
use crate::structures::ansatz::{AnsatzFamily, System};
use crate::structures::b7::{build_b7, matches_invariant_form, y2_vanishes_at_zero};
use crate::structures::numeric::{best_mu, stacked, t_samples};
use crate::structures::s7::{chi, frame_monomial, s7_frame, squashing, upsilon};
use crate::structures::solutions::{s7_family_report, s7_flow_check, b7_family_report};
use crate::structures::sweep::{numeric_sweep, on_claimed_variety, SweepConfig};
use crate::structures::{
    build_s7_canonical, build_s7_squashed, family_constraints, gram_blocks_report, np2_mu, verify_connection,
    verify_beta_identity, verify_np2, Su3Structure, SubCheck, VerificationReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    S7Squashed,
    S7Canonical,
    B7,
    BetaIdentity,
    Connection,
    GramBlocks,
    LieChecks,
}

impl Space {
    pub const ALL: [Space; 7] = [
        Space::S7Squashed,
        Space::S7Canonical,
        Space::B7,
        Space::BetaIdentity,
        Space::Connection,
        Space::GramBlocks,
        Space::LieChecks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Space::S7Squashed => "s7-squashed",
            Space::S7Canonical => "s7-canonical",
            Space::B7 => "b7",
            Space::BetaIdentity => "lemma-1-1",
            Space::Connection => "connection",
            Space::GramBlocks => "gram-blocks",
            Space::LieChecks => "lie-checks",
        }
    }

    /// The ansatz family whose constraints and sweep belong to this space.
    pub fn family(self) -> Option<AnsatzFamily> {
        match self {
            Space::S7Squashed | Space::S7Canonical => Some(AnsatzFamily::S7Style),
            Space::B7 => Some(AnsatzFamily::B7Style),
            _ => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown space '{s}'")))
    }
}

fn check(identity: &str, ok: bool, residual: impl FnOnce() -> String) -> VerificationReport {
    let start = Instant::now();
    VerificationReport::check(identity, ok, residual).timed(start)
}

fn from_sub(identity: &str, c: SubCheck) -> VerificationReport {
    VerificationReport::check(identity, c.holds, || c.residual.unwrap_or_default())
}

fn s7_reports() -> Vec<VerificationReport> {
    let cf = CoframeSpec::s7();
    let (phi, frame, _) = build_s7_squashed();
    let (canon, _, _) = build_s7_canonical();
    let lam3_ups = upsilon(&cf).scale_alg(&squashing().pow(3));
    let x135 = frame_monomial(&frame, &[0, 2, 4]);
    let chi_expected = frame_monomial(&frame, &[1, 3, 5, 6]).scale_alg(&AlgebraicScalar::ratio(-3, 2));
    let chi_actual = chi(&cf);
    vec![
        check("s7-coframe-d-squared", d_squared_check(&cf), || "d^2 != 0".into()),
        verify_np2("s7-squashed-np2", &phi, &frame, &cf),
        check("s7-varphi-equals-frame-normal-form", phi == canon, || cf.render(&(&phi - &canon))),
        check("s7-lambda3-upsilon-is-x135", lam3_ups == x135, || cf.render(&(&lam3_ups - &x135))),
        check("s7-chi-is-minus-three-halves-volume", chi_actual == chi_expected, || {
            cf.render(&(&chi_actual - &chi_expected))
        }),
        from_sub("s7-style-flow-at-np2-point", s7_flow_check()),
    ]
}

fn s7_canonical_reports() -> Vec<VerificationReport> {
    let (phi, frame, cf) = build_s7_canonical();
    let su3 = Su3Structure::from_frame(frame.elements());
    let fam = AnsatzFamily::S7Style.canonical_frame();
    vec![
        verify_np2("s7-canonical-np2", &phi, &frame, &cf),
        check("s7-su3-compatibility", su3.is_compatible(frame.elements()), || "incompatible".into()),
        check("s7-style-family-at-canonical-values", fam == s7_frame(&cf, &squashing()), || {
            "family frame differs".into()
        }),
    ]
}

/// (Y_{2k−1}, Y_{2k}) = [[2λ, λc_k], [0, 2s_k]] (p_k, n_k) and Y₇ = −dt.
pub fn pullback_matches_triangular_form(frame: &OrthoFrame, cf: &CoframeSpec) -> bool {
    let lam = squashing();
    (0..3).all(|k| {
        let (p, n) = (cf.gen(&format!("p{}", k + 1)), cf.gen(&format!("n{}", k + 1)));
        let odd = &p.scale_alg(&(&lam * &AlgebraicScalar::integer(2))) + &n.scale_trig(&TrigScalar::c(k + 1).scale(&lam));
        let even = n.scale_trig(&TrigScalar::s(k + 1).scale(&AlgebraicScalar::integer(2)));
        *frame.x(2 * k) == odd && *frame.x(2 * k + 1) == even
    }) && *frame.x(6) == -cf.dt()
}

/// μ of B⁷ from the floating-point evaluator at `n` t-samples, compared
/// with the exact value.
pub fn b7_numeric_mu(n: usize) -> (f64, f64) {
    let lam = squashing().to_f64();
    let (a, b) = stacked(AnsatzFamily::B7Style, System::Joint, lam, 0.5, 0.0, &t_samples(n));
    best_mu(&a, &b)
}

fn b7_reports() -> Vec<VerificationReport> {
    let cf = CoframeSpec::b7();
    let (phi, frame, _) = build_b7();
    let su3 = Su3Structure::from_frame(frame.elements());
    let sign = maurer_cartan_sign(&maurer_cartan_so4(&cf), &cf);
    let exact_mu = np2_mu(&phi, &frame, &cf).ok();
    let (num_mu, num_res) = b7_numeric_mu(10);
    let mu_diff = exact_mu.as_ref().map(|m| (m.to_f64() - num_mu).abs());
    let m = |i: &[usize], c: i64| frame.expand(&Form::from_indices(i, ParamPoly::integer(c)));
    let im_expected = &(&(&m(&[1, 3, 5], -1) + &m(&[1, 2, 4], 1)) + &m(&[0, 3, 4], 1)) + &m(&[0, 2, 5], 1);
    vec![
        check("b7-coframe-d-squared", d_squared_check(&cf), || "d^2 != 0".into()),
        check("b7-maurer-cartan-equation", sign.is_ok(), || "neither sign gives a flat connection".into())
            .with_detail(json!({ "sign": sign.as_ref().ok() })),
        check("b7-pullback-frame-triangular", pullback_matches_triangular_form(&frame, &cf), || {
            "pullback frame differs".into()
        }),
        verify_np2("b7-np2", &phi, &frame, &cf),
        check(
            "b7-np2-numeric-mu",
            mu_diff.is_some_and(|d| d < 1e-9) && num_res < 1e-9,
            || format!("numeric mu {num_mu}, residual {num_res:e}"),
        )
        .with_detail(json!({ "t_samples": 10, "numeric_mu": num_mu })),
        check("b7-im-xi-pattern", su3.im_xi == im_expected, || cf.render(&(&su3.im_xi - &im_expected))),
        check("b7-phi-is-invariant-3-form", matches_invariant_form(), || "pattern differs".into()),
        check("b7-y2-vanishes-at-t0", y2_vanishes_at_zero(&frame), || cf.render(frame.x(1))),
        check("b7-su3-compatibility", su3.is_compatible(frame.elements()), || "incompatible".into()),
    ]
}

fn trace_matrix(x: &[So5Element], y: &[So5Element]) -> Vec<Vec<AlgebraicScalar>> {
    x.iter().map(|a| y.iter().map(|b| trace_pairing(a, b)).collect()).collect()
}

fn render_matrix(m: &[Vec<AlgebraicScalar>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn is_minus_two_identity(m: &[Vec<AlgebraicScalar>]) -> bool {
    m.iter().enumerate().all(|(i, r)| {
        r.iter()
            .enumerate()
            .all(|(j, v)| *v == if i == j { AlgebraicScalar::integer(-2) } else { AlgebraicScalar::zero() })
    })
}

/// Triples carrying the invariant 3-form and their expected coefficients.
pub const INVARIANT_TRIPLES: [([usize; 3], i64); 7] = [
    ([1, 2, 7], 1),
    ([1, 3, 5], 1),
    ([1, 4, 6], -1),
    ([2, 3, 6], -1),
    ([2, 4, 5], -1),
    ([3, 4, 7], 1),
    ([5, 6, 7], 1),
];

fn lie_reports() -> Vec<VerificationReport> {
    let eps = eps_basis();
    let gam = gamma_basis();
    let ee = trace_matrix(&eps, &eps);
    let gg = trace_matrix(&gam, &gam);
    let ge = trace_matrix(&gam, &eps);
    let traces_ok = is_minus_two_identity(&ee) && is_minus_two_identity(&gg) && ge.iter().flatten().all(|v| v.is_zero());
    let traces = check("so5-trace-pairings", traces_ok, || "trace matrix is not -2I".into()).with_detail(json!({
        "eps_eps": render_matrix(&ee),
        "gamma_gamma": render_matrix(&gg),
        "gamma_eps": render_matrix(&ge),
    }));

    let kappa = AlgebraicScalar::sqrt5_times(-1, 5);
    let brackets_ok = (0..3).all(|k| {
        let (c, rest) = coordinates(&bracket(&eps[k], &eps[(k + 1) % 3]), &eps);
        rest.is_zero() && (0..3).all(|j| c[j] == if j == (k + 2) % 3 { kappa.clone() } else { AlgebraicScalar::zero() })
    });
    let brackets = check("so5-eps-brackets", brackets_ok, || "bracket constants differ".into())
        .with_detail(json!({ "constant": kappa.to_string() }));

    let rho = rho_action_check();
    let rho_report = check("so5-rho-cycling", rho.holds(), || format!("{rho:?}")).with_detail(json!({
        "rho_cubed_is_identity": rho.rho_cubed_is_identity,
        "eps_cycle": rho.eps_cycle.iter().map(|c| c.map(|(i, j, s)| format!("eps{i} -> {}eps{j}", if s < 0 { "-" } else { "+" }))).collect::<Vec<_>>(),
        "gamma_pairs_cycle": rho.gamma_pairs_cycle,
        "gamma_pairs_cycle_inverse_convention": rho.gamma_pairs_cycle_inverse_convention,
        "gamma7_fixed": rho.gamma7_fixed,
    }));

    let inv = invariant_three_form();
    let pattern_ok = inv.raw.len() == INVARIANT_TRIPLES.len()
        && INVARIANT_TRIPLES
            .iter()
            .all(|(t, c)| inv.coefficient(*t) == AlgebraicScalar::integer(*c));
    let coefficients: Vec<_> = INVARIANT_TRIPLES
        .iter()
        .map(|(t, _)| json!({ "triple": t, "coefficient": inv.coefficient(*t).to_string() }))
        .collect();
    let three_form = check("so5-invariant-3-form", pattern_ok, || format!("{} terms", inv.raw.len()))
        .with_detail(json!({ "coefficients": coefficients, "scale": inv.scale.to_string() }));
    vec![traces, brackets, rho_report, three_form]
}

pub fn verify_space(space: Space) -> Vec<VerificationReport> {
    match space {
        Space::S7Squashed => s7_reports(),
        Space::S7Canonical => s7_canonical_reports(),
        Space::B7 => b7_reports(),
        Space::BetaIdentity => vec![verify_beta_identity()],
        Space::Connection => vec![verify_connection()],
        Space::GramBlocks => vec![gram_blocks_report()],
        Space::LieChecks => lie_reports(),
    }
}

/// The extracted constraint systems and the claimed solution sets.
pub fn constraint_reports(space: Space) -> Result<Vec<VerificationReport>> {
    let family = space
        .family()
        .ok_or_else(|| Error::Config(format!("space '{space}' has no constraint system")))?;
    let (system, report) = match family {
        AnsatzFamily::S7Style => (System::Nhf, s7_family_report()),
        AnsatzFamily::B7Style => (System::Joint, b7_family_report()),
    };
    let cf = family.coframe();
    let names = cf.names();
    let listing: Vec<String> = family_constraints(family, system).iter().map(|c| c.render(&names)).collect();
    let summary = VerificationReport::holds(&format!("{family}-{system}-constraints"))
        .with_detail(json!({ "count": listing.len(), "constraints": listing }));
    Ok(vec![summary, report])
}

/// The system swept for each family.
pub fn swept_system(family: AnsatzFamily) -> System {
    match family {
        AnsatzFamily::S7Style => System::Nhf,
        AnsatzFamily::B7Style => System::Joint,
    }
}

pub fn sweep_report(space: Space, cfg: &SweepConfig) -> Result<VerificationReport> {
    let family = space
        .family()
        .ok_or_else(|| Error::Config(format!("space '{space}' has no sweep")))?;
    let system = swept_system(family);
    let start = Instant::now();
    let r = numeric_sweep(family, system, cfg);
    let off: Vec<_> = r
        .zeros
        .iter()
        .filter(|z| on_claimed_variety(family, system, z.params(), 1e-4) == Some(false))
        .collect();
    let identity = format!("{family}-{system}-sweep");
    let report = if off.is_empty() {
        VerificationReport::holds(&identity)
    } else {
        VerificationReport::fails(&identity, format!("{} zeros off the claimed set, first {:?}", off.len(), off[0]))
    };
    Ok(report
        .with_detail(json!({
            "config": cfg,
            "grid_points": r.grid_points,
            "candidates": r.candidates,
            "zeros": r.zeros.len(),
            "off_variety": off.len(),
            "clusters": r.clusters,
        }))
        .timed(start))
}

/// Every exact verification in declared order, with zeroed timings so the
/// output is byte-stable.
pub fn report_all() -> Vec<VerificationReport> {
    let mut out: Vec<VerificationReport> = Space::ALL.into_iter().flat_map(verify_space).collect();
    for space in [Space::S7Squashed, Space::B7] {
        out.extend(constraint_reports(space).expect("spaces with families"));
    }
    for r in &mut out {
        r.elapsed_ms = 0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Space::ALL {
            assert_eq!(s.name().parse::<Space>().unwrap(), s);
        }
        assert!("nosuch".parse::<Space>().is_err());
    }

    #[test]
    fn every_exact_report_holds() {
        for r in report_all() {
            assert!(r.ok(), "{}", r.render_text());
        }
    }
}
