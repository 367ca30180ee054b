//! Finite Fourier series in the transverse coordinate t.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::algebraic::{forward_owned, AlgebraicScalar};
use super::complex::{Cx, Laurent};

/// Σ_n (cosCoeff·cos(nt) + sinCoeff·sin(nt)) in canonical sparse form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TrigScalar {
    terms: BTreeMap<u32, (AlgebraicScalar, AlgebraicScalar)>,
}

/// One basis function of the Fourier expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FourierComponent {
    Constant,
    Cos(u32),
    Sin(u32),
}

impl fmt::Display for FourierComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourierComponent::Constant => f.write_str("1"),
            FourierComponent::Cos(n) => write!(f, "cos({})", freq_arg(*n)),
            FourierComponent::Sin(n) => write!(f, "sin({})", freq_arg(*n)),
        }
    }
}

fn freq_arg(n: u32) -> String {
    if n == 1 {
        "t".to_string()
    } else {
        format!("{n}t")
    }
}

impl TrigScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(AlgebraicScalar::one())
    }

    pub fn constant(c: AlgebraicScalar) -> Self {
        Self::term(0, c, AlgebraicScalar::zero())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(AlgebraicScalar::integer(n))
    }

    /// `c·cos(nt) + s·sin(nt)`; the sine part is dropped at frequency 0.
    pub fn term(n: u32, c: AlgebraicScalar, s: AlgebraicScalar) -> Self {
        let mut out = Self::zero();
        out.accumulate(n, c, s);
        out
    }

    pub fn cos_n(n: u32) -> Self {
        Self::term(n, AlgebraicScalar::one(), AlgebraicScalar::zero())
    }

    pub fn sin_n(n: u32) -> Self {
        Self::term(n, AlgebraicScalar::zero(), AlgebraicScalar::one())
    }

    /// c_k = cos(t + 2π(k−1)/3), for k = 1, 2, 3.
    pub fn c(k: usize) -> Self {
        let (ct, st) = third_turn(k);
        // cos(t+θ) = cosθ·cos t − sinθ·sin t
        Self::term(1, ct, -st)
    }

    /// s_k = sin(t + 2π(k−1)/3), for k = 1, 2, 3.
    pub fn s(k: usize) -> Self {
        let (ct, st) = third_turn(k);
        // sin(t+θ) = sinθ·cos t + cosθ·sin t
        Self::term(1, st, ct)
    }

    fn accumulate(&mut self, n: u32, c: AlgebraicScalar, s: AlgebraicScalar) {
        let s = if n == 0 { AlgebraicScalar::zero() } else { s };
        let entry = self
            .terms
            .entry(n)
            .or_insert_with(|| (AlgebraicScalar::zero(), AlgebraicScalar::zero()));
        entry.0 += &c;
        entry.1 += &s;
        if entry.0.is_zero() && entry.1.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value when the series has no t-dependence.
    pub fn as_constant(&self) -> Option<AlgebraicScalar> {
        match self.terms.len() {
            0 => Some(AlgebraicScalar::zero()),
            1 => self.terms.get(&0).map(|(c, _)| c.clone()),
            _ => None,
        }
    }

    pub fn max_frequency(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &AlgebraicScalar, &AlgebraicScalar)> {
        self.terms.iter().map(|(n, (c, s))| (*n, c, s))
    }

    /// Nonzero coefficients against the basis 1, cos nt, sin nt.
    pub fn components(&self) -> Vec<(FourierComponent, AlgebraicScalar)> {
        let mut out = Vec::new();
        for (n, (c, s)) in &self.terms {
            if *n == 0 {
                out.push((FourierComponent::Constant, c.clone()));
                continue;
            }
            if !c.is_zero() {
                out.push((FourierComponent::Cos(*n), c.clone()));
            }
            if !s.is_zero() {
                out.push((FourierComponent::Sin(*n), s.clone()));
            }
        }
        out
    }

    pub fn component(&self, which: FourierComponent) -> AlgebraicScalar {
        let get = |n: u32| self.terms.get(&n);
        match which {
            FourierComponent::Constant => get(0).map(|p| p.0.clone()),
            FourierComponent::Cos(n) => get(n).map(|p| p.0.clone()),
            FourierComponent::Sin(n) => get(n).map(|p| p.1.clone()),
        }
        .unwrap_or_default()
    }

    pub fn scale(&self, k: &AlgebraicScalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        TrigScalar {
            terms: self
                .terms
                .iter()
                .map(|(n, (c, s))| (*n, (c * k, s * k)))
                .collect(),
        }
    }

    /// d/dt.
    pub fn deriv(&self) -> Self {
        let mut out = Self::zero();
        for (n, (c, s)) in &self.terms {
            if *n == 0 {
                continue;
            }
            let nn = AlgebraicScalar::integer(*n as i64);
            out.accumulate(*n, s * &nn, -(c * &nn));
        }
        out
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|(n, (c, s))| {
                let x = *n as f64 * t;
                c.to_f64() * x.cos() + s.to_f64() * x.sin()
            })
            .sum()
    }

    fn to_laurent(&self) -> Laurent {
        let top = self.max_frequency().unwrap_or(0) as usize;
        let mut coeffs = vec![Cx::default(); 2 * top + 1];
        for (n, (c, s)) in &self.terms {
            let n = *n as usize;
            if n == 0 {
                coeffs[top] = Cx::new(c.clone(), AlgebraicScalar::zero());
                continue;
            }
            let half = AlgebraicScalar::ratio(1, 2);
            let (hc, hs) = (c * &half, s * &half);
            // a cos nt + b sin nt = ((a − ib)/2) z^n + ((a + ib)/2) z^−n
            coeffs[top + n] = Cx::new(hc.clone(), -&hs);
            coeffs[top - n] = Cx::new(hc, hs);
        }
        Laurent {
            low: -(top as i64),
            coeffs,
        }
    }

    fn from_laurent(l: &Laurent) -> Option<Self> {
        let coeff = |k: i64| -> Cx {
            let idx = k - l.low;
            if idx < 0 || idx as usize >= l.coeffs.len() {
                Cx::default()
            } else {
                l.coeffs[idx as usize].clone()
            }
        };
        let high = l.low + l.coeffs.len() as i64;
        let top = l.low.abs().max(high.abs());
        let mut out = Self::zero();
        for n in 0..=top {
            let plus = coeff(n);
            if n == 0 {
                if !plus.im.is_zero() {
                    return None;
                }
                out.accumulate(0, plus.re, AlgebraicScalar::zero());
                continue;
            }
            let minus = coeff(-n);
            let a = plus.add(&minus);
            let b = plus.sub(&minus).times_i();
            if !a.im.is_zero() || !b.im.is_zero() {
                return None;
            }
            out.accumulate(n as u32, a.re, b.re);
        }
        Some(out)
    }

    /// Exact quotient when `den` divides `self` in the ring of trigonometric
    /// polynomials, otherwise `None`.
    pub fn div_exact(&self, den: &TrigScalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if let Some(c) = den.as_constant() {
            return Some(self.scale(&c.inverse()?));
        }
        let q = self.to_laurent().div_exact(&den.to_laurent())?;
        Self::from_laurent(&q)
    }

    /// True when the rendering is a single signed term.
    pub(crate) fn is_monomial(&self) -> bool {
        let comps = self.components();
        comps.len() == 1 && comps[0].1.term_count() == 1
    }
}

fn third_turn(k: usize) -> (AlgebraicScalar, AlgebraicScalar) {
    match k {
        1 => (AlgebraicScalar::one(), AlgebraicScalar::zero()),
        2 => (AlgebraicScalar::ratio(-1, 2), AlgebraicScalar::sqrt3_times(1, 2)),
        3 => (AlgebraicScalar::ratio(-1, 2), AlgebraicScalar::sqrt3_times(-1, 2)),
        _ => panic!("c_k and s_k are defined for k = 1, 2, 3"),
    }
}

/// Render `coef·basis` as one signed piece, e.g. `-(1/2)*cos(2t)`.
pub(crate) fn render_product(coef: &AlgebraicScalar, basis: &str) -> String {
    if basis.is_empty() {
        let s = coef.to_string();
        return if coef.term_count() > 1 { format!("({s})") } else { s };
    }
    if coef.is_one() {
        return basis.to_string();
    }
    if (-coef).is_one() {
        return format!("-{basis}");
    }
    if coef.term_count() == 1 {
        format!("{coef}*{basis}")
    } else {
        format!("({coef})*{basis}")
    }
}

/// Join signed pieces with spaced binary operators.
pub(crate) fn join_signed(pieces: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in pieces.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

impl fmt::Display for TrigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let comps = self.components();
        // a lone constant with several surds reads better unparenthesized
        if comps.len() == 1 && comps[0].0 == FourierComponent::Constant {
            return write!(f, "{}", comps[0].1);
        }
        let pieces: Vec<String> = comps
            .iter()
            .map(|(which, c)| match which {
                FourierComponent::Constant => render_product(c, ""),
                other => render_product(c, &other.to_string()),
            })
            .collect();
        f.write_str(&join_signed(&pieces))
    }
}

impl fmt::Debug for TrigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<AlgebraicScalar> for TrigScalar {
    fn from(c: AlgebraicScalar) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a TrigScalar> for &'a TrigScalar {
    type Output = TrigScalar;
    fn add(self, rhs: &TrigScalar) -> TrigScalar {
        let mut out = self.clone();
        for (n, (c, s)) in &rhs.terms {
            out.accumulate(*n, c.clone(), s.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TrigScalar> for &'a TrigScalar {
    type Output = TrigScalar;
    fn sub(self, rhs: &TrigScalar) -> TrigScalar {
        let mut out = self.clone();
        for (n, (c, s)) in &rhs.terms {
            out.accumulate(*n, -c, -s);
        }
        out
    }
}

impl<'a> Mul<&'a TrigScalar> for &'a TrigScalar {
    type Output = TrigScalar;
    fn mul(self, rhs: &TrigScalar) -> TrigScalar {
        let half = AlgebraicScalar::ratio(1, 2);
        let mut out = TrigScalar::zero();
        for (m, (a, b)) in &self.terms {
            for (n, (c, d)) in &rhs.terms {
                let (m, n) = (*m, *n);
                let sum = m + n;
                let diff = m.abs_diff(n);
                // sin((m−n)t) flips sign when m < n
                let sgn = if m >= n { AlgebraicScalar::one() } else { -AlgebraicScalar::one() };
                // cos·cos = ½[cos(m−n) + cos(m+n)]
                let ac = &(a * c) * &half;
                // sin·sin = ½[cos(m−n) − cos(m+n)]
                let bd = &(b * d) * &half;
                // cos m · sin n = ½[sin(m+n) − sin(m−n)]
                let ad = &(a * d) * &half;
                // sin m · cos n = ½[sin(m+n) + sin(m−n)]
                let bc = &(b * c) * &half;
                out.accumulate(sum, &ac - &bd, &ad + &bc);
                out.accumulate(diff, &ac + &bd, &(&bc - &ad) * &sgn);
            }
        }
        out
    }
}

impl Neg for &TrigScalar {
    type Output = TrigScalar;
    fn neg(self) -> TrigScalar {
        self.scale(&-AlgebraicScalar::one())
    }
}

impl Neg for TrigScalar {
    type Output = TrigScalar;
    fn neg(self) -> TrigScalar {
        -&self
    }
}

forward_owned!(TrigScalar, Add::add, Sub::sub, Mul::mul);

/// Pointwise product; see the `Mul` impl.
pub fn trig_mul(x: &TrigScalar, y: &TrigScalar) -> TrigScalar {
    x * y
}

/// Derivative in t.
pub fn trig_deriv(x: &TrigScalar) -> TrigScalar {
    x.deriv()
}
