//! Orthonormal frames of 1-forms, the Hodge star they define, and the
//! change of basis back from a coframe.

use super::coframe::CoframeSpec;
use super::form::{Blade, Form};
use crate::error::{Error, Result};
use crate::scalars::ParamPoly;

/// A declared orthonormal coframe; the volume form is frame[0] ∧ … ∧ frame[n−1].
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoFrame {
    frame: Vec<Form>,
}

impl OrthoFrame {
    pub fn new(frame: Vec<Form>) -> Result<Self> {
        for f in &frame {
            if f.degree() != Some(1) {
                return Err(Error::DegreeError {
                    expected: 1,
                    found: format!("{:?}", f.degree()),
                });
            }
        }
        Ok(OrthoFrame { frame })
    }

    pub fn dim(&self) -> usize {
        self.frame.len()
    }

    pub fn elements(&self) -> &[Form] {
        &self.frame
    }

    /// The i-th frame 1-form (zero-based), over the base coframe.
    pub fn x(&self, i: usize) -> &Form {
        &self.frame[i]
    }

    /// Rewrite a form written over frame indices into the base coframe.
    pub fn expand(&self, x_frame: &Form) -> Form {
        x_frame.substitute(&self.frame)
    }

    /// Specialize every frame coefficient.
    pub fn specialize(&self, b: &crate::scalars::Bindings) -> Self {
        OrthoFrame {
            frame: self.frame.iter().map(|f| f.specialize(b)).collect(),
        }
    }

    /// Coefficient matrix M with frame[i] = Σ_j M[i][j] g_j.
    pub fn matrix(&self, cf: &CoframeSpec) -> Vec<Vec<ParamPoly>> {
        self.frame
            .iter()
            .map(|f| (0..cf.dim()).map(|j| f.coefficient(Blade::generator(j))).collect())
            .collect()
    }

    /// Hodge star of a form given over the base coframe: convert to the
    /// frame, apply [`hodge_star_frame`], expand back.
    pub fn hodge_star(&self, x: &Form, cf: &CoframeSpec) -> Result<Form> {
        let xf = to_frame_basis(x, self, cf)?;
        Ok(self.expand(&hodge_star_frame(&xf, self.dim())))
    }
}

/// Star on forms written over the frame indices 0..n: X_I ↦ sign(I, Iᶜ) X_{Iᶜ}.
pub fn hodge_star_frame(x: &Form, n: usize) -> Form {
    let full = ((1u32 << n) - 1) as u16;
    let mut out = Form::zero();
    for (b, c) in x.terms() {
        let comp = Blade(full & !b.0);
        let (sign, _) = b.wedge(comp).expect("complement is disjoint");
        out.accumulate(comp, if sign < 0 { -c.clone() } else { c.clone() });
    }
    out
}

/// Determinant of the submatrix on `rows` × `cols`, by Laplace expansion
/// along rows with memoization on the remaining column set.
fn minor(m: &[Vec<ParamPoly>], rows: &[usize], cols: &[usize]) -> ParamPoly {
    let k = rows.len();
    let mut memo: Vec<Option<ParamPoly>> = vec![None; 1 << k];
    fn go(
        m: &[Vec<ParamPoly>],
        rows: &[usize],
        cols: &[usize],
        used: usize,
        memo: &mut Vec<Option<ParamPoly>>,
    ) -> ParamPoly {
        let r = used.count_ones() as usize;
        if r == rows.len() {
            return ParamPoly::one();
        }
        if let Some(v) = &memo[used] {
            return v.clone();
        }
        let mut acc = ParamPoly::zero();
        let mut parity = 0;
        for (ci, &c) in cols.iter().enumerate() {
            if used & (1 << ci) != 0 {
                continue;
            }
            let entry = &m[rows[r]][c];
            if !entry.is_zero() {
                let sub = go(m, rows, cols, used | (1 << ci), memo);
                let term = entry * &sub;
                acc = if parity % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            parity += 1;
        }
        memo[used] = Some(acc.clone());
        acc
    }
    go(m, rows, cols, 0, &mut memo)
}

/// Determinant and adjugate of a square ParamPoly matrix.
pub fn det_adj(m: &[Vec<ParamPoly>]) -> (ParamPoly, Vec<Vec<ParamPoly>>) {
    let n = m.len();
    let all: Vec<usize> = (0..n).collect();
    let det = minor(m, &all, &all);
    let mut adj = vec![vec![ParamPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
            let mm = minor(m, &rows, &cols);
            adj[i][j] = if (i + j) % 2 == 0 { mm } else { -mm };
        }
    }
    (det, adj)
}

/// Rewrite `x` (over the base coframe) as a combination of frame monomials.
pub fn to_frame_basis(x: &Form, of: &OrthoFrame, cf: &CoframeSpec) -> Result<Form> {
    if of.dim() != cf.dim() {
        return Err(Error::SingularFrame);
    }
    let m = of.matrix(cf);
    let (det, adj) = det_adj(&m);
    if det.is_zero() {
        return Err(Error::SingularFrame);
    }
    // g_j = (1/det) Σ_i adj[j][i] X_i
    let images: Vec<Form> = (0..cf.dim())
        .map(|j| {
            let mut f = Form::zero();
            for (i, a) in adj[j].iter().enumerate() {
                f.accumulate(Blade::generator(i), a.clone());
            }
            f
        })
        .collect();
    let raw = x.substitute(&images);
    let mut out = Form::zero();
    let mut powers = vec![ParamPoly::one()];
    for (b, c) in raw.terms() {
        while powers.len() <= b.degree() {
            let next = powers.last().unwrap() * &det;
            powers.push(next);
        }
        let q = c
            .div_exact(&powers[b.degree()])
            .ok_or_else(|| Error::NonPolynomialCoefficient(format!("{c}")))?;
        out.accumulate(*b, q);
    }
    Ok(out)
}

/// Combinatorial Hodge star in a frame, for forms given over the base
/// coframe. Equivalent to [`OrthoFrame::hodge_star`].
pub fn hodge_star(x: &Form, of: &OrthoFrame, cf: &CoframeSpec) -> Result<Form> {
    of.hodge_star(x, cf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{AlgebraicScalar, TrigScalar};

    fn s7_test_frame() -> (CoframeSpec, OrthoFrame) {
        let cf = CoframeSpec::s7();
        let lam = AlgebraicScalar::sqrt5_times(2, 5);
        let mut frame = Vec::new();
        for k in 0..3 {
            let ck = TrigScalar::c(k + 1);
            let two_c_plus_one = &ck.scale(&AlgebraicScalar::integer(2)) + &TrigScalar::one();
            let x_odd = &Form::generator(k + 3).scale_alg(&lam)
                + &Form::generator(k).scale_trig(&two_c_plus_one.scale(&lam));
            let x_even = Form::generator(k).scale_trig(&TrigScalar::s(k + 1).scale(&AlgebraicScalar::integer(4)));
            frame.push(x_odd);
            frame.push(x_even);
        }
        frame.push(-cf.dt());
        (cf, OrthoFrame::new(frame).unwrap())
    }

    #[test]
    fn complementary_monomials() {
        let x123 = Form::from_indices(&[0, 1, 2], ParamPoly::one());
        assert_eq!(hodge_star_frame(&x123, 7), Form::from_indices(&[3, 4, 5, 6], ParamPoly::one()));
        let vol = Form::from_indices(&[0, 1, 2, 3, 4, 5, 6], ParamPoly::one());
        assert_eq!(hodge_star_frame(&Form::one(), 7), vol);
    }

    #[test]
    fn frame_round_trip() {
        let (cf, of) = s7_test_frame();
        for i in 0..7 {
            let back = to_frame_basis(of.x(i), &of, &cf).unwrap();
            assert_eq!(back, Form::generator(i));
        }
        let x = of.expand(&Form::from_indices(&[0, 3, 6], ParamPoly::constant(TrigScalar::c(2))));
        let back = to_frame_basis(&x, &of, &cf).unwrap();
        assert_eq!(back, Form::from_indices(&[0, 3, 6], ParamPoly::constant(TrigScalar::c(2))));
    }

    #[test]
    fn bare_generator_needs_division() {
        // e1 = X2 / (4 s1) is not polynomial
        let (cf, of) = s7_test_frame();
        assert!(matches!(
            to_frame_basis(&cf.gen("e1"), &of, &cf),
            Err(Error::NonPolynomialCoefficient(_))
        ));
    }

    #[test]
    fn singular_frame_rejected() {
        let cf = CoframeSpec::s7();
        let frame = vec![cf.gen("e1"); 7];
        let of = OrthoFrame::new(frame).unwrap();
        assert!(matches!(to_frame_basis(&cf.gen("e1"), &of, &cf), Err(Error::SingularFrame)));
    }
}
