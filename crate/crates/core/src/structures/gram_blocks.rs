//! The 2×2 blocks of the round metric g₇ and of g_B on the plane ⟨f₁, e₁⟩.

use std::time::Instant;

use crate::exterior::{sum_of_squares, CoframeSpec, Form};
use crate::scalars::{AlgebraicScalar, ParamPoly, TrigScalar};

use super::b7::b7_frame;
use super::report::{SubCheck, VerificationReport};
use super::s7::beta;

pub type Block = [[TrigScalar; 2]; 2];

fn int(n: i64) -> TrigScalar {
    TrigScalar::integer(n)
}

fn to_block(g: &[Vec<ParamPoly>]) -> Block {
    std::array::from_fn(|i| std::array::from_fn(|j| g[i][j].as_trig().expect("no parameters")))
}

fn scale_block(b: &Block, k: &AlgebraicScalar) -> Block {
    std::array::from_fn(|i| std::array::from_fn(|j| b[i][j].scale(k)))
}

fn mul(x: &Block, y: &Block) -> Block {
    std::array::from_fn(|i| std::array::from_fn(|j| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j])))
}

fn transpose(x: &Block) -> Block {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

/// cos²(t/2) = (1 + cos t)/2.
fn cos2_tau() -> TrigScalar {
    (&int(1) + &TrigScalar::cos_n(1)).scale(&AlgebraicScalar::ratio(1, 2))
}

/// g₇ = dt² + 4Σβ_k² + 16Σ(s_k e_k)² restricted to (f₁, e₁).
pub fn g7_block() -> Block {
    let cf = CoframeSpec::s7();
    let b = beta(&cf);
    let mut forms: Vec<Form> = vec![cf.dt()];
    for k in 1..=3 {
        forms.push(b.c[k].scale_alg(&AlgebraicScalar::integer(2)));
        forms.push(cf.gen(&format!("e{k}")).scale_trig(&TrigScalar::s(k).scale(&AlgebraicScalar::integer(4))));
    }
    to_block(&sum_of_squares(&forms, &[3, 0]).expect("1-forms"))
}

/// 4[[1, −1+4cos²τ], [−1+4cos²τ, 1+8cos²τ]] with τ = t/2.
pub fn g7_block_printed() -> Block {
    let off = &int(-1) + &cos2_tau().scale(&AlgebraicScalar::integer(4));
    let corner = &int(1) + &cos2_tau().scale(&AlgebraicScalar::integer(8));
    scale_block(&[[int(1), off.clone()], [off, corner]], &AlgebraicScalar::integer(4))
}

/// M₁ from the pullback frame: (Y₁, Y₂) = M₁ (p₁, n₁).
pub fn m1() -> Block {
    let cf = CoframeSpec::b7();
    let y = b7_frame(&cf);
    let (p1, n1) = (cf.index_of("p1").unwrap(), cf.index_of("n1").unwrap());
    to_block(&[
        vec![y.x(0).coefficient_of(&[p1]), y.x(0).coefficient_of(&[n1])],
        vec![y.x(1).coefficient_of(&[p1]), y.x(1).coefficient_of(&[n1])],
    ])
}

/// L = ½[[1, −1], [1, 1]] as printed, (p, n) = L (f, e).
pub fn l_printed() -> Block {
    scale_block(&[[int(1), int(-1)], [int(1), int(1)]], &AlgebraicScalar::ratio(1, 2))
}

/// The product LᵀM₁ᵀM₁L.
pub fn gb_block_product() -> Block {
    let l = l_printed();
    let m = m1();
    mul(&mul(&transpose(&l), &transpose(&m)), &mul(&m, &l))
}

/// The same block obtained by substituting p_k = ½(f_k + e_k),
/// n_k = ½(e_k − f_k) into ΣY_i² and restricting to (f₁, e₁).
pub fn gb_block_prose() -> Block {
    let b7 = CoframeSpec::b7();
    let s7 = CoframeSpec::s7();
    let half = ParamPoly::algebraic(AlgebraicScalar::ratio(1, 2));
    let mut images = vec![Form::zero(); 7];
    for k in 1..=3 {
        let e = s7.gen(&format!("e{k}"));
        let f = s7.gen(&format!("f{k}"));
        images[b7.index_of(&format!("p{k}")).unwrap()] = (&f + &e).scale(&half);
        images[b7.index_of(&format!("n{k}")).unwrap()] = (&e - &f).scale(&half);
    }
    images[b7.t_index()] = s7.dt();
    let y = b7_frame(&b7);
    let forms: Vec<Form> = y.elements().iter().map(|x| x.substitute(&images)).collect();
    to_block(&sum_of_squares(&forms, &[3, 0]).expect("1-forms"))
}

/// (1/5)[[5+4sin²t+4cos t, 1−4cos²t], [1−4cos²t, 5+4sin²t−4cos t]].
pub fn gb_block_printed() -> Block {
    let cos = TrigScalar::cos_n(1);
    let sin2 = &TrigScalar::sin_n(1) * &TrigScalar::sin_n(1);
    let cos2 = &cos * &cos;
    let base = &int(5) + &sin2.scale(&AlgebraicScalar::integer(4));
    let four_cos = cos.scale(&AlgebraicScalar::integer(4));
    let off = &int(1) - &cos2.scale(&AlgebraicScalar::integer(4));
    scale_block(
        &[[&base + &four_cos, off.clone()], [off, &base - &four_cos]],
        &AlgebraicScalar::ratio(1, 5),
    )
}

pub fn render_block(b: &Block) -> String {
    format!("[[{}, {}], [{}, {}]]", b[0][0], b[0][1], b[1][0], b[1][1])
}

pub fn gram_block_checks() -> Vec<SubCheck> {
    let g7 = g7_block();
    let printed = g7_block_printed();
    let two_c1 = TrigScalar::c(1).scale(&AlgebraicScalar::integer(2));
    let off = &two_c1 + &int(1);
    let corner = &int(5) + &two_c1.scale(&AlgebraicScalar::integer(2));
    let closed = scale_block(&[[int(1), off.clone()], [off, corner]], &AlgebraicScalar::integer(4));
    let product = gb_block_product();
    let gb_printed = gb_block_printed();
    let prose = gb_block_prose();
    vec![
        SubCheck::new("g7 block = 4[[1, 2c1+1], [2c1+1, 5+4c1]]", g7 == closed, || render_block(&g7)),
        SubCheck::new("g7 block = printed block with tau = t/2", g7 == printed, || render_block(&printed)),
        SubCheck::new("g7 block symmetric", g7 == transpose(&g7), || render_block(&g7)),
        SubCheck::new("L^T M1^T M1 L = printed g_B block", product == gb_printed, || render_block(&product)),
        SubCheck::new("g_B block symmetric", product == transpose(&product), || render_block(&product)),
        // the prose combinations give the printed block with e and −f swapped
        SubCheck::new(
            "prose p,n give the printed block in the basis (e1, -f1)",
            prose[0][0] == gb_printed[1][1] && prose[1][1] == gb_printed[0][0] && prose[0][1] == -&gb_printed[0][1],
            || render_block(&prose),
        ),
    ]
}

pub fn gram_blocks_report() -> VerificationReport {
    let start = Instant::now();
    let detail = serde_json::json!({
        "g7": render_block(&g7_block()),
        "g_B": render_block(&gb_block_product()),
        "g_B_prose_basis": render_block(&gb_block_prose()),
    });
    let mut r = VerificationReport::from_checks("gram-blocks", gram_block_checks());
    if let Some(serde_json::Value::Object(m)) = r.detail.as_mut() {
        m.insert("blocks".into(), detail);
    }
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_match() {
        for c in gram_block_checks() {
            assert!(c.holds, "{}: {:?}", c.name, c.residual);
        }
    }
}
