//! Randomized property checks shared by the acceptance gate and the
//! property-test targets. Each check returns a description of the first
//! counterexample.

#![allow(dead_code)]

use g2forms::exterior::{hodge_star_frame, Blade, Form};
use g2forms::quaternionic::{mat3_mul, rational_unit_quaternion, so3_matrix, so3_matrix_formula, Quaternion};
use g2forms::scalars::{AlgebraicScalar, Bindings, ParamPoly, TrigScalar, Unknown};
use g2forms::structures::ansatz::{residuals, AnsatzFamily, System};
use g2forms::structures::numeric::residual_components;
use rand::Rng;

pub type Check = Result<(), String>;

pub fn small_alg(rng: &mut impl Rng) -> AlgebraicScalar {
    let q = AlgebraicScalar::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    match rng.gen_range(0..3) {
        0 => q,
        1 => &q + &AlgebraicScalar::sqrt5_times(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
        _ => &q + &AlgebraicScalar::sqrt3_times(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
    }
}

pub fn random_trig(rng: &mut impl Rng) -> TrigScalar {
    let mut x = TrigScalar::zero();
    for _ in 0..rng.gen_range(0..4) {
        let t = TrigScalar::term(rng.gen_range(0..5), small_alg(rng), small_alg(rng));
        x = &x + &t;
    }
    x
}

/// A random form over `n` generators with up to `terms` monomials of the
/// given degree (any degree when `None`).
pub fn random_form(rng: &mut impl Rng, n: usize, degree: Option<usize>, terms: usize) -> Form {
    let mut x = Form::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let idx: Vec<usize> = loop {
            let bits: u32 = rng.gen_range(0..(1u32 << n));
            if degree.is_none_or(|d| bits.count_ones() as usize == d) {
                break (0..n).filter(|i| bits >> i & 1 == 1).collect();
            }
        };
        let c = ParamPoly::constant(TrigScalar::constant(small_alg(rng)));
        x = &x + &Form::from_indices(&idx, c);
    }
    x
}

/// ** = 1 on every degree of a 7-dimensional Riemannian frame, and
/// x ∧ *x is the squared norm times the volume form.
pub fn hodge_involution(x: &Form) -> Check {
    let star = hodge_star_frame(x, 7);
    if hodge_star_frame(&star, 7) != *x {
        return Err(format!("** != 1 on {x:?}"));
    }
    let norm2 = x
        .terms()
        .fold(ParamPoly::zero(), |acc, (_, c)| &acc + &(c * c));
    let vol = Form::from_indices(&[0, 1, 2, 3, 4, 5, 6], norm2);
    if x.degree().is_some() && x.wedge(&star) != vol {
        return Err(format!("x ^ *x is not |x|^2 vol for {x:?}"));
    }
    Ok(())
}

pub fn wedge_laws(x: &Form, y: &Form, z: &Form) -> Check {
    if x.wedge(&y.wedge(z)) != x.wedge(y).wedge(z) {
        return Err("wedge is not associative".into());
    }
    let (p, q) = (x.degree().unwrap_or(0), y.degree().unwrap_or(0));
    let yx = y.wedge(x);
    let expected = if p * q % 2 == 0 { yx } else { -yx };
    if x.wedge(y) != expected {
        return Err(format!("graded commutativity fails in degrees {p}, {q}"));
    }
    if x.wedge(&(y + z)) != &x.wedge(y) + &x.wedge(z) {
        return Err("wedge is not distributive".into());
    }
    Ok(())
}

pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    rational_unit_quaternion(std::array::from_fn(|_| rng.gen_range(-9..=9)))
}

/// so3(ab) = so3(a) so3(b), and the matrix matches the quadratic formula.
pub fn double_cover(a: &Quaternion, b: &Quaternion) -> Check {
    let ma = so3_matrix(a).map_err(|e| e.to_string())?;
    let mb = so3_matrix(b).map_err(|e| e.to_string())?;
    let mab = so3_matrix(&(a * b)).map_err(|e| e.to_string())?;
    if mab != mat3_mul(&ma, &mb) {
        return Err(format!("homomorphism fails for {a:?}, {b:?}"));
    }
    if ma != so3_matrix_formula(a) {
        return Err(format!("quadratic formula differs for {a:?}"));
    }
    Ok(())
}

pub fn trig_ring_and_leibniz(x: &TrigScalar, y: &TrigScalar, z: &TrigScalar, t: f64) -> Check {
    if &(x * y) * z != x * &(y * z) {
        return Err("product is not associative".into());
    }
    if x * y != y * x {
        return Err("product is not commutative".into());
    }
    if x * &(y + z) != &(x * y) + &(x * z) {
        return Err("product is not distributive".into());
    }
    if &(x + y) - y != *x || x * &TrigScalar::one() != *x {
        return Err("additive or multiplicative identity fails".into());
    }
    if (x * y).deriv() != &(&x.deriv() * y) + &(x * &y.deriv()) {
        return Err("Leibniz rule fails".into());
    }
    // float oracle: evaluation is a ring homomorphism
    let (xv, yv) = (x.eval(t), y.eval(t));
    let pv = (x * y).eval(t);
    if (pv - xv * yv).abs() > 1e-9 * (1.0 + (xv * yv).abs()) {
        return Err(format!("product evaluates to {pv}, expected {}", xv * yv));
    }
    Ok(())
}

/// Exact residual forms of a family, in the float evaluator's layout.
pub struct ExactResiduals {
    pub family: AnsatzFamily,
    pub forms: Vec<Form>,
}

impl ExactResiduals {
    pub fn new(family: AnsatzFamily) -> Self {
        ExactResiduals {
            family,
            forms: residuals(family, System::Joint),
        }
    }

    /// Specialize exactly at the rational point, then evaluate at t.
    pub fn eval(&self, p: [(i64, i64); 4], t: f64) -> Vec<f64> {
        let mut b = Bindings::new();
        for (u, (n, d)) in Unknown::ALL.into_iter().zip(p) {
            b.set(u, AlgebraicScalar::ratio(n, d));
        }
        let mut out = vec![0.0; 64 * self.forms.len()];
        for (k, f) in self.forms.iter().enumerate() {
            for (blade, c) in f.specialize(&b).terms() {
                let Blade(bits) = *blade;
                let c = c.as_trig().expect("all unknowns bound");
                out[64 * k + bits as usize] = c.eval(t);
            }
        }
        out
    }
}

pub fn random_rational_point(rng: &mut impl Rng) -> [(i64, i64); 4] {
    let lam = loop {
        let n = rng.gen_range(-12..=12);
        if n != 0 {
            break n;
        }
    };
    [
        (lam, rng.gen_range(1..=6)),
        (rng.gen_range(-12..=12), rng.gen_range(1..=6)),
        (rng.gen_range(-8..=8), rng.gen_range(1..=6)),
        (rng.gen_range(-12..=12), rng.gen_range(1..=6)),
    ]
}

/// Exact and float residuals agree to 1e-9 relative to their scale.
pub fn exact_vs_float(exact: &ExactResiduals, p: [(i64, i64); 4], t: f64) -> Check {
    let e = exact.eval(p, t);
    let pf = p.map(|(n, d)| n as f64 / d as f64);
    let f = residual_components(exact.family, System::Joint, pf, t);
    let scale = 1.0 + e.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for (i, (x, y)) in e.iter().zip(&f).enumerate() {
        if (x - y).abs() > 1e-9 * scale {
            return Err(format!("{} component {i} at {p:?}, t={t}: exact {x}, float {y}", exact.family));
        }
    }
    Ok(())
}
