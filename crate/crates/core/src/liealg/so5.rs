//! so(5) as 5×5 skew matrices, with the principal so(3) and its complement.

use std::ops::{Add, Mul, Sub};

use crate::exterior::Form;
use crate::scalars::{AlgebraicScalar, ParamPoly, TrigScalar};

pub type Mat5 = [[AlgebraicScalar; 5]; 5];

fn zero5() -> Mat5 {
    Default::default()
}

pub fn identity5() -> Mat5 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { AlgebraicScalar::one() } else { AlgebraicScalar::zero() })
    })
}

pub fn mat5_mul(x: &Mat5, y: &Mat5) -> Mat5 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..5).fold(AlgebraicScalar::zero(), |acc, k| {
                if x[i][k].is_zero() || y[k][j].is_zero() {
                    acc
                } else {
                    &acc + &(&x[i][k] * &y[k][j])
                }
            })
        })
    })
}

pub fn mat5_transpose(x: &Mat5) -> Mat5 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

/// A skew-symmetric 5×5 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So5Element {
    m: Mat5,
}

impl So5Element {
    /// Wrap a matrix; `None` unless it is skew.
    pub fn new(m: Mat5) -> Option<Self> {
        for i in 0..5 {
            for j in 0..5 {
                if m[i][j] != -&m[j][i] {
                    return None;
                }
            }
        }
        Some(So5Element { m })
    }

    pub fn zero() -> Self {
        So5Element { m: zero5() }
    }

    /// E_ij: +1 at (i, j), −1 at (j, i); indices are 1-based.
    pub fn e(i: usize, j: usize) -> Self {
        let mut m = zero5();
        m[i - 1][j - 1] = AlgebraicScalar::one();
        m[j - 1][i - 1] = -AlgebraicScalar::one();
        So5Element { m }
    }

    pub fn matrix(&self) -> &Mat5 {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(AlgebraicScalar::is_zero)
    }

    pub fn scale(&self, k: &AlgebraicScalar) -> Self {
        So5Element {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] * k)),
        }
    }

    /// g x g⁻¹ for an orthogonal g.
    pub fn conjugate_by(&self, g: &Mat5) -> Self {
        So5Element {
            m: mat5_mul(&mat5_mul(g, &self.m), &mat5_transpose(g)),
        }
    }
}

impl Add for &So5Element {
    type Output = So5Element;
    fn add(self, rhs: &So5Element) -> So5Element {
        So5Element {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] + &rhs.m[i][j])),
        }
    }
}

impl Sub for &So5Element {
    type Output = So5Element;
    fn sub(self, rhs: &So5Element) -> So5Element {
        So5Element {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] - &rhs.m[i][j])),
        }
    }
}

impl Mul<&So5Element> for &AlgebraicScalar {
    type Output = So5Element;
    fn mul(self, rhs: &So5Element) -> So5Element {
        rhs.scale(self)
    }
}

/// xy − yx.
pub fn bracket(x: &So5Element, y: &So5Element) -> So5Element {
    let xy = mat5_mul(&x.m, &y.m);
    let yx = mat5_mul(&y.m, &x.m);
    So5Element {
        m: std::array::from_fn(|i| std::array::from_fn(|j| &xy[i][j] - &yx[i][j])),
    }
}

/// tr(xy).
pub fn trace_pairing(x: &So5Element, y: &So5Element) -> AlgebraicScalar {
    let mut acc = AlgebraicScalar::zero();
    for i in 0..5 {
        for k in 0..5 {
            if !x.m[i][k].is_zero() && !y.m[k][i].is_zero() {
                acc += &(&x.m[i][k] * &y.m[k][i]);
            }
        }
    }
    acc
}

fn inv_sqrt5() -> AlgebraicScalar {
    AlgebraicScalar::sqrt5_times(1, 5)
}

/// Fixed rotation constants cos(2π/3), sin(2π/3). These are unrelated to the
/// ansatz unknowns a, b.
pub fn third_turn() -> (AlgebraicScalar, AlgebraicScalar) {
    (AlgebraicScalar::ratio(-1, 2), AlgebraicScalar::sqrt3_times(1, 2))
}

fn combo(terms: &[(AlgebraicScalar, usize, usize)]) -> So5Element {
    terms
        .iter()
        .fold(So5Element::zero(), |acc, (k, i, j)| &acc + &So5Element::e(*i, *j).scale(k))
}

/// Basis ε1, ε2, ε3 of the principal so(3).
pub fn eps_basis() -> [So5Element; 3] {
    let r = inv_sqrt5();
    let one = AlgebraicScalar::one();
    let two = AlgebraicScalar::integer(2);
    let s3 = AlgebraicScalar::sqrt3();
    [
        combo(&[(two.clone(), 2, 3), (one.clone(), 4, 5)]).scale(&r),
        combo(&[(one.clone(), 2, 4), (one.clone(), 3, 5), (s3.clone(), 1, 4)]).scale(&r),
        combo(&[(-&one, 2, 5), (one.clone(), 3, 4), (s3, 1, 5)]).scale(&r),
    ]
}

/// Basis γ1..γ7 of the complement m.
pub fn gamma_basis() -> [So5Element; 7] {
    let r = inv_sqrt5();
    let (a, b) = third_turn();
    let one = AlgebraicScalar::one();
    let two = AlgebraicScalar::integer(2);
    [
        combo(&[(one.clone(), 2, 3), (-&two, 4, 5)]).scale(&r),
        combo(&[(-&one, 1, 3)]),
        combo(&[(b.clone(), 1, 5), (a.clone(), 2, 5), (-&two, 3, 4)]).scale(&r),
        combo(&[(-&a, 1, 5), (b.clone(), 2, 5)]),
        combo(&[(-&b, 1, 4), (a.clone(), 2, 4), (two.clone(), 3, 5)]).scale(&r),
        combo(&[(-&a, 1, 4), (-&b, 2, 4)]),
        combo(&[(one, 1, 2)]),
    ]
}

/// Coordinates of x against a trace-orthonormal basis (tr(b_i b_j) = −2δ_ij),
/// together with the part of x outside the span.
pub fn coordinates(x: &So5Element, basis: &[So5Element]) -> (Vec<AlgebraicScalar>, So5Element) {
    let minus_half = AlgebraicScalar::ratio(-1, 2);
    let coords: Vec<AlgebraicScalar> = basis.iter().map(|b| &trace_pairing(b, x) * &minus_half).collect();
    let mut rest = x.clone();
    for (c, b) in coords.iter().zip(basis) {
        rest = &rest - &b.scale(c);
    }
    (coords, rest)
}

/// A t-dependent 5×5 matrix with trigonometric entries.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameCurve {
    pub m: [[TrigScalar; 5]; 5],
}

impl FrameCurve {
    /// R(t): a rotation by t in the (1,2)-plane and a cyclic permutation
    /// in the lower 3×3 block.
    pub fn r() -> Self {
        let mut m: [[TrigScalar; 5]; 5] = Default::default();
        m[0][0] = TrigScalar::cos_n(1);
        m[0][1] = TrigScalar::sin_n(1);
        m[1][0] = -TrigScalar::sin_n(1);
        m[1][1] = TrigScalar::cos_n(1);
        m[2][3] = TrigScalar::one();
        m[3][4] = TrigScalar::one();
        m[4][2] = TrigScalar::one();
        FrameCurve { m }
    }

    pub fn transpose(&self) -> Self {
        FrameCurve {
            m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].clone())),
        }
    }

    pub fn deriv(&self) -> Self {
        FrameCurve {
            m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[i][j].deriv())),
        }
    }

    pub fn mul(&self, other: &FrameCurve) -> Self {
        FrameCurve {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..5).fold(TrigScalar::zero(), |acc, k| &acc + &(&self.m[i][k] * &other.m[k][j]))
                })
            }),
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        let p = self.transpose().mul(self);
        (0..5).all(|i| (0..5).all(|j| if i == j { p.m[i][j].is_one() } else { p.m[i][j].is_zero() }))
    }

    /// Value at the angle 2π/3, exactly.
    pub fn at_third_turn(&self) -> Mat5 {
        let (c, s) = third_turn();
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut acc = AlgebraicScalar::zero();
                for (n, cc, ss) in self.m[i][j].iter() {
                    // only frequencies 0 and 1 occur in R(t)
                    match n {
                        0 => acc += cc,
                        1 => {
                            acc += &(cc * &c);
                            acc += &(ss * &s);
                        }
                        _ => panic!("frequency {n} in a frame curve"),
                    }
                }
                acc
            })
        })
    }
}

/// ρ = R(2π/3).
pub fn rho() -> Mat5 {
    FrameCurve::r().at_third_turn()
}

/// Outcome of the ρ-conjugation checks.
#[derive(Clone, Debug)]
pub struct RhoReport {
    pub rho_cubed_is_identity: bool,
    /// For each k: ρ⁻¹ ε_k ρ = sign·ε_{k+1}, as (k, k+1, sign); `None` if
    /// the image is not a signed basis vector.
    pub eps_cycle: Vec<Option<(usize, usize, i32)>>,
    /// ρ (γ_{2k−1}, γ_{2k}) ρ⁻¹ = (γ_{2k+1}, γ_{2k+2}) for k = 1, 2, 3.
    pub gamma_pairs_cycle: bool,
    /// Same relation read with ρ⁻¹ on the left, as printed in the literature.
    pub gamma_pairs_cycle_inverse_convention: bool,
    pub gamma7_fixed: bool,
}

impl RhoReport {
    pub fn holds(&self) -> bool {
        self.rho_cubed_is_identity
            && self.eps_cycle.iter().all(Option::is_some)
            && self.gamma_pairs_cycle
            && self.gamma7_fixed
    }
}

fn signed_basis_vector(coords: &[AlgebraicScalar]) -> Option<(usize, i32)> {
    let nonzero: Vec<usize> = (0..coords.len()).filter(|&i| !coords[i].is_zero()).collect();
    if nonzero.len() != 1 {
        return None;
    }
    let c = &coords[nonzero[0]];
    if c.is_one() {
        Some((nonzero[0], 1))
    } else if (-c).is_one() {
        Some((nonzero[0], -1))
    } else {
        None
    }
}

pub fn rho_action_check() -> RhoReport {
    let r = rho();
    let rinv = mat5_transpose(&r);
    let eps = eps_basis();
    let gam = gamma_basis();
    let cube = mat5_mul(&mat5_mul(&r, &r), &r);
    let eps_cycle = (0..3)
        .map(|k| {
            let img = eps[k].conjugate_by(&rinv);
            let (coords, rest) = coordinates(&img, &eps);
            if !rest.is_zero() {
                return None;
            }
            let (j, s) = signed_basis_vector(&coords)?;
            (j == (k + 1) % 3).then_some((k + 1, j + 1, s))
        })
        .collect();
    let pairs = |g: &Mat5| {
        (0..6).all(|m| {
            let target = (m + 2) % 6;
            gam[m].conjugate_by(g) == gam[target]
        })
    };
    RhoReport {
        rho_cubed_is_identity: cube == identity5(),
        eps_cycle,
        gamma_pairs_cycle: pairs(&r),
        gamma_pairs_cycle_inverse_convention: pairs(&rinv),
        gamma7_fixed: gam[6].conjugate_by(&r) == gam[6],
    }
}

/// The invariant 3-form Σ tr([γi,γj]γk) γ*_ijk, with its raw coefficients.
#[derive(Clone, Debug)]
pub struct InvariantThreeForm {
    /// Nonzero tr([γi,γj]γk) over i < j < k (1-based).
    pub raw: Vec<([usize; 3], AlgebraicScalar)>,
    /// The 3-form over γ*_1..γ*_7 divided by its γ*_127 coefficient.
    pub normalized: Form,
    /// The γ*_127 coefficient used as normalization.
    pub scale: AlgebraicScalar,
}

impl InvariantThreeForm {
    pub fn coefficient(&self, triple: [usize; 3]) -> AlgebraicScalar {
        let c = self.normalized.coefficient_of(&[triple[0] - 1, triple[1] - 1, triple[2] - 1]);
        c.as_constant().unwrap_or_default()
    }
}

pub fn invariant_three_form() -> InvariantThreeForm {
    let gam = gamma_basis();
    let mut raw = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            let br = bracket(&gam[i], &gam[j]);
            for k in j + 1..7 {
                let v = trace_pairing(&br, &gam[k]);
                if !v.is_zero() {
                    raw.push(([i + 1, j + 1, k + 1], v));
                }
            }
        }
    }
    let scale = raw
        .iter()
        .find(|(t, _)| *t == [1, 2, 7])
        .map(|(_, v)| v.clone())
        .expect("the 127 component is nonzero");
    let inv = scale.inverse().expect("nonzero");
    let mut normalized = Form::zero();
    for (t, v) in &raw {
        normalized = &normalized
            + &Form::from_indices(&[t[0] - 1, t[1] - 1, t[2] - 1], ParamPoly::algebraic(v * &inv));
    }
    InvariantThreeForm { raw, normalized, scale }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_orthonormality() {
        let eps = eps_basis();
        let gam = gamma_basis();
        let m2 = AlgebraicScalar::integer(-2);
        for i in 0..3 {
            for j in 0..3 {
                let v = trace_pairing(&eps[i], &eps[j]);
                assert_eq!(v, if i == j { m2.clone() } else { AlgebraicScalar::zero() });
            }
        }
        for i in 0..7 {
            for j in 0..7 {
                let v = trace_pairing(&gam[i], &gam[j]);
                assert_eq!(v, if i == j { m2.clone() } else { AlgebraicScalar::zero() });
            }
            for e in &eps {
                assert!(trace_pairing(&gam[i], e).is_zero());
            }
        }
    }

    #[test]
    fn eps_bracket_constant() {
        let eps = eps_basis();
        for k in 0..3 {
            let br = bracket(&eps[k], &eps[(k + 1) % 3]);
            let (coords, rest) = coordinates(&br, &eps);
            assert!(rest.is_zero());
            // [ε_i, ε_j] = −κ′ ε_k with κ′ = 1/√5
            assert_eq!(coords[(k + 2) % 3], AlgebraicScalar::sqrt5_times(-1, 5));
        }
        assert!(bracket(&eps[0], &eps[0]).is_zero());
    }

    #[test]
    fn frame_curve_orthogonal() {
        assert!(FrameCurve::r().is_orthogonal());
        let r = rho();
        assert_eq!(mat5_mul(&mat5_mul(&r, &r), &r), identity5());
    }

    #[test]
    fn three_form_pattern() {
        let f = invariant_three_form();
        let expect = [
            ([1, 2, 7], 1),
            ([1, 3, 5], 1),
            ([1, 4, 6], -1),
            ([2, 3, 6], -1),
            ([2, 4, 5], -1),
            ([3, 4, 7], 1),
            ([5, 6, 7], 1),
        ];
        assert_eq!(f.raw.len(), 7);
        for (t, s) in expect {
            assert_eq!(f.coefficient(t), AlgebraicScalar::integer(s));
        }
        assert!(f.coefficient([1, 2, 5]).is_zero());
        assert_eq!(f.scale.abs(), AlgebraicScalar::sqrt5_times(2, 5));
    }
}
