//! Symmetric products of 1-forms restricted to a plane of generators.

use super::form::{Blade, Form};
use crate::error::{Error, Result};
use crate::scalars::ParamPoly;

/// Matrix of Σ coeff·(θ ⊗ θ) in the given ordered generator basis.
pub fn gram_matrix(metric_terms: &[(ParamPoly, Form)], basis: &[usize]) -> Result<Vec<Vec<ParamPoly>>> {
    let n = basis.len();
    let mut g = vec![vec![ParamPoly::zero(); n]; n];
    for (coeff, theta) in metric_terms {
        if theta.is_zero() {
            continue;
        }
        if theta.degree() != Some(1) {
            return Err(Error::DegreeError {
                expected: 1,
                found: format!("{:?}", theta.degree()),
            });
        }
        let v: Vec<ParamPoly> = basis.iter().map(|&j| theta.coefficient(Blade::generator(j))).collect();
        for i in 0..n {
            for j in 0..n {
                g[i][j] = &g[i][j] + &(&(coeff * &v[i]) * &v[j]);
            }
        }
    }
    Ok(g)
}

/// Gram matrix of a sum of squares Σ θ².
pub fn sum_of_squares(forms: &[Form], basis: &[usize]) -> Result<Vec<Vec<ParamPoly>>> {
    let terms: Vec<(ParamPoly, Form)> = forms.iter().map(|f| (ParamPoly::one(), f.clone())).collect();
    gram_matrix(&terms, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_frame_is_identity() {
        let frame: Vec<Form> = (0..7).map(Form::generator).collect();
        let g = sum_of_squares(&frame, &(0..7).collect::<Vec<_>>()).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn rejects_two_forms() {
        let two = Form::from_indices(&[0, 1], ParamPoly::one());
        assert!(gram_matrix(&[(ParamPoly::one(), two)], &[0, 1]).is_err());
    }
}
