//! SU(3) structures (ξ, Ξ) built from six 1-forms X₁..X₆ through
//! Ξ = (X₁ + iX₂)∧(X₃ + iX₄)∧(X₅ + iX₆).

use crate::exterior::{wedge_all, Form};
use crate::scalars::{AlgebraicScalar, ParamPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct Su3Structure {
    pub xi: Form,
    pub re_xi: Form,
    pub im_xi: Form,
}

fn triple(x: &[Form], i: usize, j: usize, k: usize) -> Form {
    wedge_all(&[&x[i], &x[j], &x[k]])
}

impl Su3Structure {
    /// ξ = X₁₂ + X₃₄ + X₅₆, Re Ξ = X₁₃₅ − X₁₄₆ − X₂₃₆ − X₂₄₅,
    /// Im Ξ = X₁₃₆ + X₁₄₅ + X₂₃₅ − X₂₄₆.
    pub fn from_frame(x: &[Form]) -> Self {
        assert!(x.len() >= 6, "an SU(3) structure needs six 1-forms");
        let xi = &(&x[0].wedge(&x[1]) + &x[2].wedge(&x[3])) + &x[4].wedge(&x[5]);
        let re_xi = &(&(&triple(x, 0, 2, 4) - &triple(x, 0, 3, 5)) - &triple(x, 1, 2, 5))
            - &triple(x, 1, 3, 4);
        let im_xi = &(&(&triple(x, 0, 2, 5) + &triple(x, 0, 3, 4)) + &triple(x, 1, 2, 4))
            - &triple(x, 1, 3, 5);
        Su3Structure { xi, re_xi, im_xi }
    }

    /// The structure written over abstract frame indices 0..5.
    pub fn standard() -> Self {
        let x: Vec<Form> = (0..6).map(Form::generator).collect();
        Self::from_frame(&x)
    }

    /// ½ξ².
    pub fn half_xi_squared(&self) -> Form {
        self.xi
            .wedge(&self.xi)
            .scale(&ParamPoly::algebraic(AlgebraicScalar::ratio(1, 2)))
    }

    /// ξ∧ReΞ = 0, ξ∧ImΞ = 0 and ReΞ∧ImΞ = 4·X₁∧…∧X₆ for the given six forms.
    pub fn is_compatible(&self, x: &[Form]) -> bool {
        let vol = wedge_all(&x[..6].iter().collect::<Vec<_>>());
        self.xi.wedge(&self.re_xi).is_zero()
            && self.xi.wedge(&self.im_xi).is_zero()
            && self.re_xi.wedge(&self.im_xi) == vol.scale_alg(&AlgebraicScalar::integer(4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_structure_is_compatible() {
        let x: Vec<Form> = (0..6).map(Form::generator).collect();
        assert!(Su3Structure::standard().is_compatible(&x));
    }

    #[test]
    fn xi_cubed_is_six_volumes() {
        let s = Su3Structure::standard();
        let cube = s.xi.wedge(&s.xi).wedge(&s.xi);
        assert_eq!(cube, Form::from_indices(&[0, 1, 2, 3, 4, 5], ParamPoly::integer(6)));
    }

    #[test]
    fn star_of_the_g2_form() {
        use crate::exterior::hodge_star_frame;
        let s = Su3Structure::standard();
        let x7 = Form::generator(6);
        let phi = &s.xi.wedge(&x7) + &s.re_xi;
        let want = &s.half_xi_squared() - &x7.wedge(&s.im_xi);
        assert_eq!(hodge_star_frame(&phi, 7), want);
    }
}
