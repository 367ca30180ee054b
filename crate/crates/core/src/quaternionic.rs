//! Quaternions over the exact field, quaternion-valued forms, and the
//! double cover SU(2) → SO(3).

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exterior::{ext_d, CoframeSpec, Form};
use crate::scalars::AlgebraicScalar;

/// q0 + q1 i + q2 j + q3 k.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quaternion {
    pub q: [AlgebraicScalar; 4],
}

pub type Mat3 = [[AlgebraicScalar; 3]; 3];

impl Quaternion {
    pub fn new(q0: AlgebraicScalar, q1: AlgebraicScalar, q2: AlgebraicScalar, q3: AlgebraicScalar) -> Self {
        Quaternion { q: [q0, q1, q2, q3] }
    }

    pub fn real(x: AlgebraicScalar) -> Self {
        Self::new(x, AlgebraicScalar::zero(), AlgebraicScalar::zero(), AlgebraicScalar::zero())
    }

    /// The unit quaternion 1, i, j or k for `axis` = 0..3.
    pub fn basis(axis: usize) -> Self {
        let mut q = Quaternion::default();
        q.q[axis] = AlgebraicScalar::one();
        q
    }

    pub fn conjugate(&self) -> Self {
        let [a, b, c, d] = &self.q;
        Self::new(a.clone(), -b, -c, -d)
    }

    pub fn norm_squared(&self) -> AlgebraicScalar {
        self.q.iter().fold(AlgebraicScalar::zero(), |acc, x| &acc + &x.square())
    }
}

/// Quaternion product on the components of any algebra, given the
/// component product `mul`.
fn hamilton<T, F>(a: &[T; 4], b: &[T; 4], mul: F) -> [T; 4]
where
    T: Clone,
    for<'x> &'x T: Add<&'x T, Output = T> + Sub<&'x T, Output = T>,
    F: Fn(&T, &T) -> T,
{
    let p = |i: usize, j: usize| mul(&a[i], &b[j]);
    let add = |x: T, y: T| &x + &y;
    let sub = |x: T, y: T| &x - &y;
    [
        sub(sub(sub(p(0, 0), p(1, 1)), p(2, 2)), p(3, 3)),
        sub(add(add(p(0, 1), p(1, 0)), p(2, 3)), p(3, 2)),
        add(add(sub(p(0, 2), p(1, 3)), p(2, 0)), p(3, 1)),
        add(sub(add(p(0, 3), p(1, 2)), p(2, 1)), p(3, 0)),
    ]
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            q: hamilton(&self.q, &rhs.q, |x, y| x * y),
        }
    }
}

/// Matrix of v ↦ a v ā on Im H in the basis i, j, k, computed by
/// conjugating each basis vector.
pub fn so3_matrix(a: &Quaternion) -> Result<Mat3> {
    let n = a.norm_squared();
    if !n.is_one() {
        return Err(Error::NotUnit(n.to_string()));
    }
    let abar = a.conjugate();
    let mut m: Mat3 = Default::default();
    for col in 0..3 {
        let image = &(a * &Quaternion::basis(col + 1)) * &abar;
        for (row, entry) in m.iter_mut().enumerate() {
            entry[col] = image.q[row + 1].clone();
        }
    }
    Ok(m)
}

/// The same matrix written out as quadratics in the components.
pub fn so3_matrix_formula(a: &Quaternion) -> Mat3 {
    let [a0, a1, a2, a3] = &a.q;
    let sq = |x: &AlgebraicScalar| x.square();
    let two = AlgebraicScalar::integer(2);
    let tw = |x: AlgebraicScalar| &two * &x;
    [
        [
            &(&(&sq(a0) + &sq(a1)) - &sq(a2)) - &sq(a3),
            tw(&(a1 * a2) - &(a0 * a3)),
            tw(&(a0 * a2) + &(a3 * a1)),
        ],
        [
            tw(&(a0 * a3) + &(a1 * a2)),
            &(&(&sq(a0) - &sq(a1)) + &sq(a2)) - &sq(a3),
            tw(&(a2 * a3) - &(a0 * a1)),
        ],
        [
            tw(&(a3 * a1) - &(a0 * a2)),
            tw(&(a0 * a1) + &(a2 * a3)),
            &(&(&sq(a0) - &sq(a1)) - &sq(a2)) + &sq(a3),
        ],
    ]
}

pub fn mat3_mul(x: &Mat3, y: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(AlgebraicScalar::zero(), |acc, k| &acc + &(&x[i][k] * &y[k][j]))
        })
    })
}

pub fn mat3_transpose(x: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

pub fn mat3_identity() -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { AlgebraicScalar::one() } else { AlgebraicScalar::zero() })
    })
}

/// Rational point of S³ ⊂ H: inverse stereographic projection of
/// (x, y, z)/d, i.e. (d² − r², 2dx, 2dy, 2dz)/(d² + r²).
pub fn rational_unit_quaternion(m: [i64; 4]) -> Quaternion {
    let [d, x, y, z] = m;
    let d = if d == 0 { 1 } else { d };
    let r2 = x * x + y * y + z * z;
    let den = d * d + r2;
    Quaternion::new(
        AlgebraicScalar::ratio(d * d - r2, den),
        AlgebraicScalar::ratio(2 * d * x, den),
        AlgebraicScalar::ratio(2 * d * y, den),
        AlgebraicScalar::ratio(2 * d * z, den),
    )
}

/// A quaternion-valued form (real, i, j, k components).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QuatForm {
    pub c: [Form; 4],
}

impl QuatForm {
    pub fn new(c: [Form; 4]) -> Self {
        QuatForm { c }
    }

    /// A vector-valued form i·x + j·y + k·z.
    pub fn vector(x: Form, y: Form, z: Form) -> Self {
        QuatForm { c: [Form::zero(), x, y, z] }
    }

    pub fn re(&self) -> &Form {
        &self.c[0]
    }

    /// Imaginary part, as a vector-valued form.
    pub fn im(&self) -> QuatForm {
        QuatForm {
            c: [Form::zero(), self.c[1].clone(), self.c[2].clone(), self.c[3].clone()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Form::is_zero)
    }

    pub fn scale(&self, k: &AlgebraicScalar) -> QuatForm {
        QuatForm {
            c: std::array::from_fn(|i| self.c[i].scale_alg(k)),
        }
    }

    pub fn d(&self, cf: &CoframeSpec) -> Result<QuatForm> {
        Ok(QuatForm {
            c: [
                ext_d(&self.c[0], cf)?,
                ext_d(&self.c[1], cf)?,
                ext_d(&self.c[2], cf)?,
                ext_d(&self.c[3], cf)?,
            ],
        })
    }
}

impl Add for &QuatForm {
    type Output = QuatForm;
    fn add(self, rhs: &QuatForm) -> QuatForm {
        QuatForm {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &QuatForm {
    type Output = QuatForm;
    fn sub(self, rhs: &QuatForm) -> QuatForm {
        QuatForm {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Neg for &QuatForm {
    type Output = QuatForm;
    fn neg(self) -> QuatForm {
        QuatForm {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

/// Quaternion multiplication of the values combined with wedge of the forms.
pub fn quat_wedge(x: &QuatForm, y: &QuatForm) -> QuatForm {
    QuatForm {
        c: hamilton(&x.c, &y.c, |a, b| a.wedge(b)),
    }
}

/// Φ = dφ + φ∧φ. For a vector-valued 1-form the k-th component is
/// dφ_k + 2φ_i∧φ_j.
pub fn verify_curvature_components(phi: &QuatForm, cf: &CoframeSpec) -> Result<QuatForm> {
    Ok(&phi.d(cf)? + &quat_wedge(phi, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ParamPoly;

    #[test]
    fn unit_quaternions() {
        let a = rational_unit_quaternion([1, 2, -1, 3]);
        assert!(a.norm_squared().is_one());
        let prod = &a * &a.conjugate();
        assert_eq!(prod, Quaternion::real(AlgebraicScalar::one()));
    }

    #[test]
    fn identity_and_rotation() {
        assert_eq!(so3_matrix(&Quaternion::real(AlgebraicScalar::one())).unwrap(), mat3_identity());
        let a = Quaternion::new(
            AlgebraicScalar::ratio(3, 5),
            AlgebraicScalar::ratio(4, 5),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
        );
        let m = so3_matrix(&a).unwrap();
        assert!(m[0][0].is_one());
        assert_eq!(m[1][1], AlgebraicScalar::ratio(-7, 25));
        assert_eq!(m[2][1], AlgebraicScalar::ratio(24, 25));
        assert_eq!(m, so3_matrix_formula(&a));
    }

    #[test]
    fn rejects_non_unit() {
        let a = Quaternion::real(AlgebraicScalar::integer(2));
        assert!(matches!(so3_matrix(&a), Err(Error::NotUnit(_))));
    }

    #[test]
    fn ij_is_k() {
        let e = |i| Form::generator(i);
        let x = QuatForm::vector(e(0), Form::zero(), Form::zero());
        let y = QuatForm::vector(Form::zero(), e(1), Form::zero());
        let p = quat_wedge(&x, &y);
        assert!(p.c[0].is_zero() && p.c[1].is_zero() && p.c[2].is_zero());
        assert_eq!(p.c[3], Form::from_indices(&[0, 1], ParamPoly::one()));
    }

    #[test]
    fn flat_connection_has_no_curvature() {
        let cf = CoframeSpec::s7();
        let zero = QuatForm::default();
        assert!(verify_curvature_components(&zero, &cf).unwrap().is_zero());
    }
}
