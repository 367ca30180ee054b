//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values are recomputed here rather than read back from
//! the library where that is practical.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use g2forms::exterior::{d_squared_check, CoframeSpec};
use g2forms::liealg::{
    eps_basis, gamma_basis, invariant_three_form, maurer_cartan_so4, pullback_frame, rho_action_check, So5Element,
};
use g2forms::scalars::{AlgebraicScalar, TrigScalar};
use g2forms::structures::ansatz::{AnsatzFamily, System};
use g2forms::structures::numeric::{best_mu, stacked, t_samples};
use g2forms::structures::solutions::{s7_family_report, b7_family_report};
use g2forms::structures::sweep::{numeric_sweep, on_claimed_variety, SweepConfig};
use g2forms::structures::{
    build_b7, build_s7_canonical, build_s7_squashed, gram_blocks_report, np2_mu, verify_connection, verify_beta_identity,
    verify_np2, Status,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    ensure(d_squared_check(&CoframeSpec::s7()), || "d^2 != 0 on the S7 coframe".into())?;
    ensure(d_squared_check(&CoframeSpec::b7()), || "d^2 != 0 on the B7 coframe".into())?;
    Ok("d^2 = 0 on both coframes".into())
}

fn criterion_2() -> Outcome {
    let r = verify_connection();
    ensure(r.ok(), || r.render_text())?;
    Ok("curvature is half omega, dPhi = -2 phi^Phi componentwise".into())
}

fn criterion_3() -> Outcome {
    let r = verify_beta_identity();
    ensure(r.ok(), || r.render_text())?;
    Ok("residual is the zero quaternionic form".into())
}

fn criterion_4() -> Outcome {
    let (phi, frame, cf) = build_s7_squashed();
    let r = verify_np2("s7-squashed", &phi, &frame, &cf);
    ensure(r.status == Status::HoldsWithMu, || r.render_text())?;
    let mu = np2_mu(&phi, &frame, &cf).map_err(|e| e.to_string())?;
    ensure(mu.square() == AlgebraicScalar::ratio(36, 5), || format!("mu = {mu}"))?;
    let (canon, _, _) = build_s7_canonical();
    ensure(phi == canon, || "the two builds of phi differ".into())?;
    Ok(format!("mu = {mu}, mu^2 = 36/5, builds agree"))
}

fn trace(x: &So5Element, y: &So5Element) -> AlgebraicScalar {
    let (a, b) = (x.matrix(), y.matrix());
    let mut s = AlgebraicScalar::zero();
    for i in 0..5 {
        for k in 0..5 {
            s += &(&a[i][k] * &b[k][i]);
        }
    }
    s
}

fn criterion_5() -> Outcome {
    let eps = eps_basis();
    let gam = gamma_basis();
    let delta = |i: usize, j: usize| AlgebraicScalar::integer(if i == j { -2 } else { 0 });
    let mut pairings = 0;
    for (x, y, diag) in [(&eps[..], &eps[..], true), (&gam[..], &gam[..], true), (&gam[..], &eps[..], false)] {
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                let want = if diag { delta(i, j) } else { AlgebraicScalar::zero() };
                let got = trace(a, b);
                ensure(got == want, || format!("pairing ({i},{j}) is {got}"))?;
                pairings += 1;
            }
        }
    }
    ensure(pairings == 9 + 49 + 21, || format!("{pairings} pairings"))?;
    let rho = rho_action_check();
    ensure(rho.holds(), || format!("{rho:?}"))?;
    let expected: [([usize; 3], i64); 7] = [
        ([1, 2, 7], 1),
        ([1, 3, 5], 1),
        ([1, 4, 6], -1),
        ([2, 3, 6], -1),
        ([2, 4, 5], -1),
        ([3, 4, 7], 1),
        ([5, 6, 7], 1),
    ];
    let inv = invariant_three_form();
    ensure(inv.raw.len() == 7, || format!("{} terms", inv.raw.len()))?;
    for (t, c) in expected {
        let got = inv.coefficient(t);
        ensure(got == AlgebraicScalar::integer(c), || format!("coefficient of {t:?} is {got}"))?;
    }
    Ok(format!("{pairings} pairings exact, rho cycles, 7-term 3-form exact"))
}

fn criterion_6() -> Outcome {
    let cf = CoframeSpec::b7();
    let y = pullback_frame(&maurer_cartan_so4(&cf), &cf).map_err(|e| e.to_string())?;
    let lam = AlgebraicScalar::sqrt5_times(2, 5);
    for k in 0..3 {
        let p = cf.gen(&format!("p{}", k + 1));
        let n = cf.gen(&format!("n{}", k + 1));
        let two_lam = &lam * &AlgebraicScalar::integer(2);
        let odd = &p.scale_alg(&two_lam) + &n.scale_trig(&TrigScalar::c(k + 1).scale(&lam));
        let even = n.scale_trig(&TrigScalar::s(k + 1).scale(&AlgebraicScalar::integer(2)));
        ensure(y[2 * k] == odd && y[2 * k + 1] == even, || format!("block {} differs", k + 1))?;
    }
    ensure(y[6] == -cf.dt(), || "Y7 differs".into())?;
    let (phi, frame, cf) = build_b7();
    let r = verify_np2("b7", &phi, &frame, &cf);
    ensure(r.status == Status::HoldsWithMu, || r.render_text())?;
    let mu = np2_mu(&phi, &frame, &cf).map_err(|e| e.to_string())?;
    ensure(!mu.is_zero(), || "mu = 0".into())?;
    let (a, b) = stacked(AnsatzFamily::B7Style, System::Joint, lam.to_f64(), 0.5, 0.0, &t_samples(10));
    let (num_mu, res) = best_mu(&a, &b);
    let diff = (num_mu - mu.to_f64()).abs();
    ensure(diff < 1e-9 && res < 1e-9, || format!("numeric mu {num_mu}, diff {diff:e}, residual {res:e}"))?;
    Ok(format!("triangular frame exact, mu = {mu}, numeric diff {diff:.1e}"))
}

fn criterion_7() -> Outcome {
    let r = gram_blocks_report();
    ensure(r.ok(), || r.render_text())?;
    Ok("both blocks entry-exact".into())
}

fn sweep_summary(family: AnsatzFamily, system: System, on_claim: impl Fn([f64; 3]) -> bool) -> Outcome {
    let start = Instant::now();
    let r = numeric_sweep(family, system, &SweepConfig::default());
    let off: Vec<_> = r.zeros.iter().filter(|z| !on_claim(z.params())).collect();
    ensure(off.is_empty(), || format!("{} zeros off the claimed set, e.g. {:?}", off.len(), off[0]))?;
    Ok(format!(
        "{} grid points, {} zeros in {} clusters, none off the claimed set ({:.0} s)",
        r.grid_points,
        r.zeros.len(),
        r.clusters.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_8() -> Outcome {
    let r = s7_family_report();
    ensure(r.ok(), || r.render_text())?;
    let (fam, sys) = (AnsatzFamily::S7Style, System::Nhf);
    let sweep = sweep_summary(fam, sys, |p| on_claimed_variety(fam, sys, p, 1e-4) == Some(true))?;
    Ok(format!("displayed system and claims exact; sweep: {sweep}"))
}

fn criterion_9() -> Outcome {
    let r = b7_family_report();
    ensure(r.ok(), || r.render_text())?;
    // the only joint solution with λ > 0 is the triple (2/√5, 1/2, 0)
    let lam = 2.0 / 5f64.sqrt();
    let near_triple = |p: [f64; 3]| (p[0] - lam).abs() < 1e-4 && (p[1] - 0.5).abs() < 1e-4 && p[2].abs() < 1e-4;
    let sweep = sweep_summary(AnsatzFamily::B7Style, System::Joint, near_triple)?;
    Ok(format!("(i) and (ii) exact; joint sweep: {sweep}"))
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6732);
    for degree in 0..=7 {
        for _ in 0..20 {
            hodge_involution(&random_form(&mut rng, 7, Some(degree), 6))?;
        }
    }
    for _ in 0..100 {
        let d = |rng: &mut StdRng| Some(rand::Rng::gen_range(rng, 0..=3));
        let (dx, dy, dz) = (d(&mut rng), d(&mut rng), d(&mut rng));
        let x = random_form(&mut rng, 7, dx, 4);
        let y = random_form(&mut rng, 7, dy, 4);
        let z = random_form(&mut rng, 7, dz, 4);
        wedge_laws(&x, &y, &z)?;
    }
    for _ in 0..100 {
        double_cover(&random_unit_quaternion(&mut rng), &random_unit_quaternion(&mut rng))?;
    }
    for _ in 0..100 {
        let (x, y, z) = (random_trig(&mut rng), random_trig(&mut rng), random_trig(&mut rng));
        trig_ring_and_leibniz(&x, &y, &z, rand::Rng::gen_range(&mut rng, 0.0..3.0))?;
    }
    let exact = [ExactResiduals::new(AnsatzFamily::S7Style), ExactResiduals::new(AnsatzFamily::B7Style)];
    for i in 0..100 {
        let t = rand::Rng::gen_range(&mut rng, 0.01..1.04);
        exact_vs_float(&exact[i % 2], random_rational_point(&mut rng), t)?;
    }
    Ok("hodge, wedge, double cover, trig ring, exact-vs-float (100 points)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("structure equations integrate", criterion_1),
        ("connection curvature and Bianchi identity", criterion_2),
        ("quaternionic lemma on the S7 coframe", criterion_3),
        ("nearly parallel G2 on squashed S7", criterion_4),
        ("so(5) traces, rho action, invariant 3-form", criterion_5),
        ("B7 pullback frame and nearly parallel G2", criterion_6),
        ("Gram blocks", criterion_7),
        ("S7-style nearly half-flat solutions", criterion_8),
        ("B7-style flow and nearly half-flat solutions", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("PASS criterion {:>2}: {name}: {msg} [{} ms]", i + 1, start.elapsed().as_millis()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
