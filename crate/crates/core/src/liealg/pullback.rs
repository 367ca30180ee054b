//! Maurer–Cartan form of SO(4) ⊂ SO(5) and its pullback along the curve R(t).

use super::so5::{gamma_basis, FrameCurve};
use crate::error::{Error, Result};
use crate::exterior::{ext_d, CoframeSpec, Form};
use crate::scalars::{AlgebraicScalar, ParamPoly};

pub type FormMatrix = Vec<Vec<Form>>;

fn zero_matrix() -> FormMatrix {
    vec![vec![Form::zero(); 5]; 5]
}

/// The so(4)-valued Maurer–Cartan matrix over p1..p3, n1..n3:
/// A = 2·(entries n3, n2, n1 in row 2 and the p_k block below).
pub fn maurer_cartan_so4(cf: &CoframeSpec) -> FormMatrix {
    let mut a = zero_matrix();
    let g = |name: &str| cf.gen(name);
    let mut set = |i: usize, j: usize, f: Form| {
        let f = f.scale_alg(&AlgebraicScalar::integer(2));
        a[j - 1][i - 1] = -&f;
        a[i - 1][j - 1] = f;
    };
    set(2, 3, g("n3"));
    set(2, 4, g("n2"));
    set(2, 5, g("n1"));
    set(3, 4, -g("p1"));
    set(3, 5, g("p2"));
    set(4, 5, -g("p3"));
    a
}

fn wedge_product(x: &FormMatrix, y: &FormMatrix) -> FormMatrix {
    let mut out = zero_matrix();
    for i in 0..5 {
        for j in 0..5 {
            let mut acc = Form::zero();
            for k in 0..5 {
                if !x[i][k].is_zero() && !y[k][j].is_zero() {
                    acc = &acc + &x[i][k].wedge(&y[k][j]);
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Which Maurer–Cartan equation the matrix satisfies: +1 for dA + A∧A = 0,
/// −1 for dA − A∧A = 0.
pub fn maurer_cartan_sign(a: &FormMatrix, cf: &CoframeSpec) -> Result<i32> {
    let aa = wedge_product(a, a);
    let mut plus = true;
    let mut minus = true;
    for i in 0..5 {
        for j in 0..5 {
            let da = ext_d(&a[i][j], cf)?;
            plus &= (&da + &aa[i][j]).is_zero();
            minus &= (&da - &aa[i][j]).is_zero();
        }
    }
    match (plus, minus) {
        (true, _) => Ok(1),
        (false, true) => Ok(-1),
        _ => Err(Error::NotIntegrable("Maurer-Cartan matrix".into())),
    }
}

/// Gauge transform P = R⁻¹AR + σ R⁻¹R′ dt, where σ is the Maurer–Cartan
/// sign of A; P is then again a flat connection.
pub fn pullback_matrix(a: &FormMatrix, cf: &CoframeSpec) -> Result<FormMatrix> {
    let sigma = maurer_cartan_sign(a, cf)?;
    let r = FrameCurve::r();
    let rt = r.transpose();
    let rinv_dr = rt.mul(&r.deriv());
    let dt = cf.dt();
    let mut p = zero_matrix();
    for i in 0..5 {
        for j in 0..5 {
            let mut acc = Form::zero();
            for k in 0..5 {
                if rt.m[i][k].is_zero() {
                    continue;
                }
                for l in 0..5 {
                    if a[k][l].is_zero() || r.m[l][j].is_zero() {
                        continue;
                    }
                    acc = &acc + &a[k][l].scale_trig(&(&rt.m[i][k] * &r.m[l][j]));
                }
            }
            let g = &rinv_dr.m[i][j];
            if !g.is_zero() {
                let term = dt.scale_trig(g);
                acc = if sigma > 0 { &acc + &term } else { &acc - &term };
            }
            p[i][j] = acc;
        }
    }
    Ok(p)
}

/// Y_i = γ*_i(P) = −½ tr(γ_i P) for the pullback P of the Maurer–Cartan
/// form; returns Y_1..Y_7 over the coframe of `cf`.
pub fn pullback_frame(mc: &FormMatrix, cf: &CoframeSpec) -> Result<Vec<Form>> {
    let p = pullback_matrix(mc, cf)?;
    let minus_half = AlgebraicScalar::ratio(-1, 2);
    Ok(gamma_basis()
        .iter()
        .map(|g| {
            let gm = g.matrix();
            let mut acc = Form::zero();
            for i in 0..5 {
                for k in 0..5 {
                    if !gm[i][k].is_zero() && !p[k][i].is_zero() {
                        acc = &acc + &p[k][i].scale_alg(&gm[i][k]);
                    }
                }
            }
            acc.scale(&ParamPoly::algebraic(minus_half.clone()))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::TrigScalar;

    #[test]
    fn printed_matrix_satisfies_minus_sign() {
        let cf = CoframeSpec::b7();
        let a = maurer_cartan_so4(&cf);
        assert_eq!(maurer_cartan_sign(&a, &cf).unwrap(), -1);
    }

    #[test]
    fn pullback_frame_matches_triangular_form() {
        let cf = CoframeSpec::b7();
        let y = pullback_frame(&maurer_cartan_so4(&cf), &cf).unwrap();
        let lam = AlgebraicScalar::sqrt5_times(2, 5);
        for k in 0..3 {
            let p = Form::generator(k);
            let n = Form::generator(k + 3);
            let odd = &p.scale_alg(&(&lam * &AlgebraicScalar::integer(2)))
                + &n.scale_trig(&TrigScalar::c(k + 1).scale(&lam));
            let even = n.scale_trig(&TrigScalar::s(k + 1).scale(&AlgebraicScalar::integer(2)));
            assert_eq!(y[2 * k], odd, "Y{}", 2 * k + 1);
            assert_eq!(y[2 * k + 1], even, "Y{}", 2 * k + 2);
        }
        assert_eq!(y[6], -cf.dt());
    }
}
