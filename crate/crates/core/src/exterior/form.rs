//! Sparse elements of the exterior algebra on up to 16 generators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalars::algebraic::forward_owned;
use crate::scalars::{AlgebraicScalar, Bindings, ParamPoly, TrigScalar};

/// A wedge monomial g_{i1} ∧ … ∧ g_{ik} with i1 < … < ik, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(pub u16);

impl Blade {
    pub const ONE: Blade = Blade(0);

    pub fn generator(i: usize) -> Blade {
        Blade(1 << i)
    }

    /// Sort `idx` into a blade; returns the permutation sign, or `None` on a
    /// repeated index.
    pub fn from_indices(idx: &[usize]) -> Option<(i32, Blade)> {
        let mut sign = 1;
        let mut bits = 0u16;
        for &i in idx {
            let b = 1u16 << i;
            if bits & b != 0 {
                return None;
            }
            if (bits >> i).count_ones() % 2 == 1 {
                sign = -sign;
            }
            bits |= b;
        }
        Some((sign, Blade(bits)))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Sign and blade of self ∧ other, or `None` when they share a generator.
    pub fn wedge(self, other: Blade) -> Option<(i32, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        Some((if swaps % 2 == 0 { 1 } else { -1 }, Blade(self.0 | other.0)))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        write!(f, "[{}]", idx.join(","))
    }
}

/// Σ coefficient · blade.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Form {
    terms: BTreeMap<Blade, ParamPoly>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: ParamPoly) -> Self {
        Self::monomial(Blade::ONE, c)
    }

    pub fn one() -> Self {
        Self::scalar(ParamPoly::one())
    }

    pub fn generator(i: usize) -> Self {
        Self::monomial(Blade::generator(i), ParamPoly::one())
    }

    pub fn monomial(b: Blade, c: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.accumulate(b, c);
        out
    }

    /// `c · g_{idx[0]} ∧ g_{idx[1]} ∧ …` in any index order.
    pub fn from_indices(idx: &[usize], c: ParamPoly) -> Self {
        match Blade::from_indices(idx) {
            Some((sign, b)) => Self::monomial(b, if sign < 0 { -c } else { c }),
            None => Self::zero(),
        }
    }

    pub(crate) fn accumulate(&mut self, b: Blade, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: Blade) -> ParamPoly {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// Coefficient of `g_{idx[0]} ∧ …`, with the sign of the given ordering.
    pub fn coefficient_of(&self, idx: &[usize]) -> ParamPoly {
        match Blade::from_indices(idx) {
            Some((sign, b)) => {
                let c = self.coefficient(b);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
            None => ParamPoly::zero(),
        }
    }

    /// The common degree of all terms; `None` for the zero form or a mixed sum.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|b| b.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Highest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|b| b.indices().last())
            .max()
    }

    pub fn scale(&self, k: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.accumulate(*b, c * k);
        }
        out
    }

    pub fn scale_trig(&self, k: &TrigScalar) -> Self {
        self.map_coeffs(|c| c.scale_trig(k))
    }

    pub fn scale_alg(&self, k: &AlgebraicScalar) -> Self {
        self.map_coeffs(|c| c.scale(k))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.accumulate(*b, f(c));
        }
        out
    }

    pub fn specialize(&self, bindings: &Bindings) -> Self {
        self.map_coeffs(|c| c.specialize(bindings))
    }

    /// Keep only the terms for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Drop every term containing generator `i` (e.g. the dt-part).
    pub fn without_generator(&self, i: usize) -> Self {
        self.filter(|b| !b.contains(i))
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                if let Some((sign, b)) = b1.wedge(*b2) {
                    let c = c1 * c2;
                    out.accumulate(b, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Replace generator i by the form `images[i]`. This is the algebra
    /// homomorphism determined by the images, so wedge order is preserved.
    pub fn substitute(&self, images: &[Form]) -> Form {
        let mut out = Form::zero();
        for (b, c) in &self.terms {
            let mut prod = Form::scalar(c.clone());
            for i in b.indices() {
                prod = prod.wedge(&images[i]);
                if prod.is_zero() {
                    break;
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// Render with generator names, e.g. `+ (1/2)*cos(t) dt^e1 - 2 e2^e3`.
    pub fn render(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (b, c) in &self.terms {
            let mono: Vec<&str> = b.indices().map(|i| names.get(i).copied().unwrap_or("?")).collect();
            let mono = mono.join("^");
            let text = c.to_string();
            let (sign, body) = if c.is_single_term() {
                match text.strip_prefix('-') {
                    Some(rest) => ("-", rest.to_string()),
                    None => ("+", text),
                }
            } else {
                ("+", format!("({text})"))
            };
            let piece = match (mono.is_empty(), body.as_str()) {
                (true, _) => format!("{sign} {body}"),
                (false, "1") => format!("{sign} {mono}"),
                (false, _) => format!("{sign} {body} {mono}"),
            };
            parts.push(piece);
        }
        parts.join(" ")
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..16).map(|i| format!("g{}", i + 1)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.render(&refs))
    }
}

impl<'a> Add<&'a Form> for &'a Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.accumulate(*b, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Form> for &'a Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.accumulate(*b, -c);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

forward_owned!(Form, Add::add, Sub::sub);

/// Grassmann product.
pub fn wedge(x: &Form, y: &Form) -> Form {
    x.wedge(y)
}

/// Wedge a list of forms left to right.
pub fn wedge_all(forms: &[&Form]) -> Form {
    forms.iter().fold(Form::one(), |acc, f| acc.wedge(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> Form {
        Form::generator(i)
    }

    #[test]
    fn odd_square_vanishes() {
        assert!(g(0).wedge(&g(0)).is_zero());
    }

    #[test]
    fn permutation_sign() {
        assert_eq!(Blade::from_indices(&[2, 0, 1]).unwrap().0, 1);
        assert_eq!(Blade::from_indices(&[1, 0, 2]).unwrap().0, -1);
        assert!(Blade::from_indices(&[1, 1]).is_none());
        assert_eq!(g(1).wedge(&g(0)), -g(0).wedge(&g(1)));
    }

    #[test]
    fn symplectic_cube() {
        let xi = &(&g(0).wedge(&g(1)) + &g(2).wedge(&g(3))) + &g(4).wedge(&g(5));
        let cube = xi.wedge(&xi).wedge(&xi);
        assert_eq!(cube, Form::from_indices(&[0, 1, 2, 3, 4, 5], ParamPoly::integer(6)));
    }

    #[test]
    fn blade_order_is_degree_then_lex() {
        let a = Blade::from_indices(&[0, 5]).unwrap().1;
        let b = Blade::from_indices(&[1, 2]).unwrap().1;
        let c = Blade::from_indices(&[0, 1, 2]).unwrap().1;
        assert!(a < b && b < c && Blade::generator(6) < a);
    }

    #[test]
    fn rendering() {
        let f = &Form::from_indices(&[6, 0], ParamPoly::constant(TrigScalar::c(1)))
            - &Form::from_indices(&[1, 2], ParamPoly::integer(2));
        let names = ["e1", "e2", "e3", "f1", "f2", "f3", "dt"];
        assert_eq!(f.render(&names), "- cos(t) e1^dt - 2 e2^e3");
        assert_eq!(Form::one().render(&names), "+ 1");
    }
}
