//! Polynomials in the ansatz unknowns λ, a, b, μ over trigonometric
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::algebraic::{forward_owned, AlgebraicScalar};
use super::trig::{join_signed, FourierComponent, TrigScalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Unknown {
    Lambda,
    A,
    B,
    Mu,
}

impl Unknown {
    pub const ALL: [Unknown; 4] = [Unknown::Lambda, Unknown::A, Unknown::B, Unknown::Mu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Unknown::Lambda => "lambda",
            Unknown::A => "a",
            Unknown::B => "b",
            Unknown::Mu => "mu",
        }
    }
}

/// Exponent vector over (λ, a, b, μ); array order is lexicographic.
pub type Monomial = [u8; 4];

/// A partial assignment of exact values to unknowns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    values: [Option<AlgebraicScalar>; 4],
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, u: Unknown, v: AlgebraicScalar) -> Self {
        self.values[u.index()] = Some(v);
        self
    }

    pub fn set(&mut self, u: Unknown, v: AlgebraicScalar) {
        self.values[u.index()] = Some(v);
    }

    pub fn get(&self, u: Unknown) -> Option<&AlgebraicScalar> {
        self.values[u.index()].as_ref()
    }

    pub fn without(mut self, u: Unknown) -> Self {
        self.values[u.index()] = None;
        self
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Unknown::ALL
            .iter()
            .filter_map(|u| self.get(*u).map(|v| format!("{}={}", u.name(), v)))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, TrigScalar>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    std::array::from_fn(|i| a[i] + b[i])
}

fn mono_divides(d: &Monomial, m: &Monomial) -> bool {
    d.iter().zip(m).all(|(x, y)| x <= y)
}

fn mono_render(m: &Monomial) -> String {
    let parts: Vec<String> = Unknown::ALL
        .iter()
        .zip(m)
        .filter(|(_, e)| **e > 0)
        .map(|(u, e)| {
            if *e == 1 {
                u.name().to_string()
            } else {
                format!("{}^{}", u.name(), e)
            }
        })
        .collect();
    parts.join("*")
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TrigScalar::one())
    }

    pub fn constant(c: TrigScalar) -> Self {
        Self::term([0; 4], c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(TrigScalar::integer(n))
    }

    pub fn algebraic(c: AlgebraicScalar) -> Self {
        Self::constant(TrigScalar::constant(c))
    }

    pub fn term(m: Monomial, c: TrigScalar) -> Self {
        let mut out = Self::zero();
        out.accumulate(m, c);
        out
    }

    pub fn var(u: Unknown) -> Self {
        let mut m = [0; 4];
        m[u.index()] = 1;
        Self::term(m, TrigScalar::one())
    }

    fn accumulate(&mut self, m: Monomial, c: TrigScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_trig().is_some_and(|t| t.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &TrigScalar)> {
        self.terms.iter()
    }

    /// The coefficient when no unknown occurs.
    pub fn as_trig(&self) -> Option<TrigScalar> {
        match self.terms.len() {
            0 => Some(TrigScalar::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<AlgebraicScalar> {
        self.as_trig()?.as_constant()
    }

    pub fn occurs(&self, u: Unknown) -> bool {
        self.terms.keys().any(|m| m[u.index()] > 0)
    }

    pub fn degree_in(&self, u: Unknown) -> u8 {
        self.terms.keys().map(|m| m[u.index()]).max().unwrap_or(0)
    }

    /// Coefficient of u^k, as a polynomial in the remaining unknowns.
    pub fn coefficient_of(&self, u: Unknown, k: u8) -> ParamPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m[u.index()] == k {
                let mut m2 = *m;
                m2[u.index()] = 0;
                out.accumulate(m2, c.clone());
            }
        }
        out
    }

    pub fn scale_trig(&self, k: &TrigScalar) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.accumulate(*m, c * k);
        }
        out
    }

    pub fn scale(&self, k: &AlgebraicScalar) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.accumulate(*m, c.scale(k));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise d/dt, unknowns held constant.
    pub fn deriv_t(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.accumulate(*m, c.deriv());
        }
        out
    }

    /// Substitute whichever unknowns are bound, leaving the rest symbolic.
    pub fn specialize(&self, b: &Bindings) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut factor = AlgebraicScalar::one();
            let mut rest = *m;
            for u in Unknown::ALL {
                if let Some(v) = b.get(u) {
                    factor = &factor * &v.pow(m[u.index()] as u32);
                    rest[u.index()] = 0;
                }
            }
            out.accumulate(rest, c.scale(&factor));
        }
        out
    }

    /// Full evaluation; every occurring unknown must be bound.
    pub fn substitute(&self, b: &Bindings) -> Result<TrigScalar> {
        for u in Unknown::ALL {
            if self.occurs(u) && b.get(u).is_none() {
                return Err(Error::MissingBinding(u.name().to_string()));
            }
        }
        Ok(self.specialize(b).as_trig().expect("all unknowns bound"))
    }

    pub fn eval_f64(&self, vals: &[f64; 4], t: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m.iter().zip(vals).map(|(e, v)| v.powi(*e as i32)).product();
                mono * c.eval(t)
            })
            .sum()
    }

    /// Split into Fourier components, each a polynomial with constant
    /// coefficients. The input vanishes for all t iff every part does.
    pub fn fourier_parts(&self) -> BTreeMap<FourierComponent, ParamPoly> {
        let mut out: BTreeMap<FourierComponent, ParamPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (which, v) in c.components() {
                out.entry(which)
                    .or_default()
                    .accumulate(*m, TrigScalar::constant(v));
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn leading(&self) -> Option<(&Monomial, &TrigScalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient by `d`, using lexicographic leading terms; `None` if
    /// `d` does not divide `self`.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        let (dm, dc) = d.leading()?;
        if d.terms.len() == 1 {
            let mut out = Self::zero();
            for (m, c) in &self.terms {
                if !mono_divides(dm, m) {
                    return None;
                }
                let q: Monomial = std::array::from_fn(|i| m[i] - dm[i]);
                out.accumulate(q, c.div_exact(dc)?);
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !mono_divides(dm, rm) {
                return None;
            }
            let qm: Monomial = std::array::from_fn(|i| rm[i] - dm[i]);
            let qc = rc.div_exact(dc)?;
            let step = Self::term(qm, qc);
            rem = &rem - &(&step * d);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// True when the rendering needs no parentheses as a factor.
    pub(crate) fn is_single_term(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_monomial()
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = mono_render(m);
                if mono.is_empty() {
                    let s = c.to_string();
                    if c.components().len() > 1 {
                        format!("({s})")
                    } else {
                        s
                    }
                } else if c.is_one() {
                    mono
                } else if (-c).is_one() {
                    format!("-{mono}")
                } else if c.is_monomial() {
                    format!("{c}*{mono}")
                } else {
                    format!("({c})*{mono}")
                }
            })
            .collect();
        if pieces.len() == 1 && self.terms.contains_key(&[0; 4]) {
            // a bare trigonometric coefficient renders as itself
            return write!(f, "{}", self.terms[&[0; 4]]);
        }
        f.write_str(&join_signed(&pieces))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<TrigScalar> for ParamPoly {
    fn from(c: TrigScalar) -> Self {
        Self::constant(c)
    }
}

impl From<AlgebraicScalar> for ParamPoly {
    fn from(c: AlgebraicScalar) -> Self {
        Self::algebraic(c)
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.accumulate(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.scale(&-AlgebraicScalar::one())
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

forward_owned!(ParamPoly, Add::add, Sub::sub, Mul::mul);

/// Evaluate `p` with every unknown it mentions bound.
pub fn poly_substitute(p: &ParamPoly, bindings: &Bindings) -> Result<TrigScalar> {
    p.substitute(bindings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> ParamPoly {
        ParamPoly::var(Unknown::Lambda)
    }
    fn mu() -> ParamPoly {
        ParamPoly::var(Unknown::Mu)
    }

    #[test]
    fn quadratic_vanishes_at_squashed_point() {
        // λ² + 2μλ + 4 at λ = 2/√5, μ = −6/√5
        let p = &(&lam().pow(2) + &(&lam() * &mu()).scale(&AlgebraicScalar::integer(2))) + &ParamPoly::integer(4);
        let b = Bindings::new()
            .with(Unknown::Lambda, AlgebraicScalar::sqrt5_times(2, 5))
            .with(Unknown::Mu, AlgebraicScalar::sqrt5_times(-6, 5));
        assert!(p.substitute(&b).unwrap().is_zero());
        let missing = p.substitute(&Bindings::new().with(Unknown::Lambda, AlgebraicScalar::one()));
        assert!(matches!(missing, Err(Error::MissingBinding(ref u)) if u == "mu"));
    }

    #[test]
    fn constant_substitution_is_identity() {
        let c = TrigScalar::c(2);
        let p = ParamPoly::constant(c.clone());
        assert_eq!(p.substitute(&Bindings::new()).unwrap(), c);
    }

    #[test]
    fn exact_division_multivariate() {
        let a = ParamPoly::var(Unknown::A);
        let d = &(&lam().scale_trig(&TrigScalar::s(1)) + &a) + &ParamPoly::one();
        let q = &(&lam() * &mu()) - &ParamPoly::constant(TrigScalar::c(3));
        let prod = &d * &q;
        assert_eq!(prod.div_exact(&d).unwrap(), q);
        let bad = &prod + &ParamPoly::one();
        assert!(bad.div_exact(&d).is_none());
    }

    #[test]
    fn fourier_parts_split() {
        // (λ + cos t)·μ
        let p = &(&lam() + &ParamPoly::constant(TrigScalar::cos_n(1))) * &mu();
        let parts = p.fourier_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&FourierComponent::Cos(1)], mu());
        assert_eq!(parts[&FourierComponent::Constant], &lam() * &mu());
    }

    #[test]
    fn rendering() {
        let p = &(&lam().pow(2).scale(&AlgebraicScalar::integer(-2)) + &ParamPoly::constant(TrigScalar::c(1))) + &mu();
        assert_eq!(p.to_string(), "cos(t) + mu - 2*lambda^2");
        assert_eq!(ParamPoly::algebraic(AlgebraicScalar::ratio(1, 2)).to_string(), "(1/2)");
    }
}
