//! The biquadratic field Q(√3, √5).
//!
//! Elements are stored on the basis `1, √3, √5, √15`. Every constant that
//! appears in the S⁷ and B⁷ constructions (rotations by 2π/3, the squashing
//! constant 2/√5 and the Einstein constants derived from it) lives here, so
//! the whole engine runs without floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Index of each basis surd: bit 0 carries √3, bit 1 carries √5.
const SURDS: [&str; 4] = ["", "sqrt3", "sqrt5", "sqrt15"];
const SURD_VALUES: [f64; 4] = [1.0, 1.732_050_807_568_877_2, 2.236_067_977_499_79, 3.872_983_346_207_417];

/// An exact element `q0 + q1·√3 + q2·√5 + q3·√15` with rational `qi`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraicScalar {
    coeffs: [BigRational; 4],
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl AlgebraicScalar {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        AlgebraicScalar { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = q;
        s
    }

    pub fn integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `n/d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// `(n/d)·√3`.
    pub fn sqrt3_times(n: i64, d: i64) -> Self {
        let mut s = Self::zero();
        s.coeffs[1] = rat(n, d);
        s
    }

    /// `(n/d)·√5`.
    pub fn sqrt5_times(n: i64, d: i64) -> Self {
        let mut s = Self::zero();
        s.coeffs[2] = rat(n, d);
        s
    }

    /// `(n/d)·√15`.
    pub fn sqrt15_times(n: i64, d: i64) -> Self {
        let mut s = Self::zero();
        s.coeffs[3] = rat(n, d);
        s
    }

    pub fn sqrt3() -> Self {
        Self::sqrt3_times(1, 1)
    }

    pub fn sqrt5() -> Self {
        Self::sqrt5_times(1, 1)
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(SURD_VALUES)
            .map(|(q, s)| q.to_f64().unwrap_or(f64::NAN) * s)
            .sum()
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        AlgebraicScalar {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }

    /// Galois conjugate sending √5 to −√5.
    fn conj5(&self) -> Self {
        let [a, b, c, d] = self.coeffs.clone();
        AlgebraicScalar::new([a, b, -c, -d])
    }

    /// Galois conjugate sending √3 to −√3.
    fn conj3(&self) -> Self {
        let [a, b, c, d] = self.coeffs.clone();
        AlgebraicScalar::new([a, -b, c, -d])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x·σ5(x) lies in Q(√3); multiplying by its √3-conjugate lands in Q.
        let c5 = self.conj5();
        let n1 = self * &c5;
        let c3 = n1.conj3();
        let n2 = &n1 * &c3;
        let q = n2.as_rational().expect("norm lies in Q").clone();
        Some((&c5 * &c3).scale_rational(&q.recip()))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign of the real number represented.
    pub fn signum(&self) -> Ordering {
        let [a, b, c, d] = &self.coeffs;
        // self = A + B√5 with A = a + b√3, B = c + d√3
        let sa = sign_q3(a, b);
        let sb = sign_q3(c, d);
        match (sa, sb) {
            (Ordering::Equal, s) => s,
            (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (x, y) => {
                // compare A² with 5B² inside Q(√3)
                let a2 = AlgebraicScalar::new([a.clone(), b.clone(), BigRational::zero(), BigRational::zero()]).square();
                let b2 = AlgebraicScalar::new([c.clone(), d.clone(), BigRational::zero(), BigRational::zero()]).square();
                let diff = &a2 - &b2.scale_rational(&rat(5, 1));
                match sign_q3(&diff.coeffs[0], &diff.coeffs[1]) {
                    Ordering::Greater => x,
                    Ordering::Less => y,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Number of nonzero basis components.
    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|q| !q.is_zero()).count()
    }
}

fn sign_q3(p: &BigRational, q: &BigRational) -> Ordering {
    let sp = p.cmp(&BigRational::zero());
    let sq = q.cmp(&BigRational::zero());
    match (sp, sq) {
        (Ordering::Equal, s) => s,
        (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        (x, y) => {
            let lhs = p * p;
            let rhs = q * q * rat(3, 1);
            match lhs.cmp(&rhs) {
                Ordering::Greater => x,
                Ordering::Less => y,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("({}/{})", q.numer(), q.denom())
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (q, surd) in self.coeffs.iter().zip(SURDS) {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let body = match (surd.is_empty(), mag.is_one()) {
                (true, _) => render_rational(&mag),
                (false, true) => surd.to_string(),
                (false, false) => format!("{}*{}", render_rational(&mag), surd),
            };
            if first {
                if q.is_negative() {
                    f.write_str("-")?;
                }
                f.write_str(&body)?;
                first = false;
            } else {
                f.write_str(if q.is_negative() { " - " } else { " + " })?;
                f.write_str(&body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for AlgebraicScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<BigRational> for AlgebraicScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'a> Sub<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<'a> Mul<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        let mut out = AlgebraicScalar::zero();
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                // √3·√3 = 3 and √5·√5 = 5 whenever both factors carry the same surd
                let shared = i & j;
                let mut factor = 1;
                if shared & 1 != 0 {
                    factor *= 3;
                }
                if shared & 2 != 0 {
                    factor *= 5;
                }
                let term = &self.coeffs[i] * &rhs.coeffs[j] * BigInt::from(factor);
                out.coeffs[i ^ j] += term;
            }
        }
        out
    }
}

impl Neg for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        -&self
    }
}

impl Div<&AlgebraicScalar> for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        self * &rhs.inverse().expect("division by zero in Q(sqrt3, sqrt5)")
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(&self, &rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { $tr::$m(&self, rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(self, &rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(AlgebraicScalar, Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn add_assign(&mut self, rhs: &AlgebraicScalar) {
        for i in 0..4 {
            self.coeffs[i] += &rhs.coeffs[i];
        }
    }
}

impl SubAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn sub_assign(&mut self, rhs: &AlgebraicScalar) {
        for i in 0..4 {
            self.coeffs[i] -= &rhs.coeffs[i];
        }
    }
}

impl MulAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn mul_assign(&mut self, rhs: &AlgebraicScalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surds_close() {
        let s3 = AlgebraicScalar::sqrt3();
        let s5 = AlgebraicScalar::sqrt5();
        assert_eq!(&s3 * &s3, AlgebraicScalar::integer(3));
        assert_eq!(&s5 * &s5, AlgebraicScalar::integer(5));
        assert_eq!(&s3 * &s5, AlgebraicScalar::sqrt15_times(1, 1));
        let s15 = AlgebraicScalar::sqrt15_times(1, 1);
        assert_eq!(&s15 * &s15, AlgebraicScalar::integer(15));
        assert_eq!(&s15 * &s3, AlgebraicScalar::sqrt5_times(3, 1));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = AlgebraicScalar::new([rat(1, 2), rat(-3, 1), rat(2, 7), rat(1, 1)]);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(AlgebraicScalar::zero().inverse().is_none());
    }

    #[test]
    fn lambda_constant() {
        // 2/sqrt5 = (2/5) sqrt5
        let lambda = &AlgebraicScalar::integer(2) / &AlgebraicScalar::sqrt5();
        assert_eq!(lambda, AlgebraicScalar::sqrt5_times(2, 5));
        assert_eq!(lambda.to_string(), "(2/5)*sqrt5");
        assert_eq!(lambda.square(), AlgebraicScalar::ratio(4, 5));
    }

    #[test]
    fn exact_sign() {
        // sqrt15 - 4 < 0 < sqrt15 - 3
        let s15 = AlgebraicScalar::sqrt15_times(1, 1);
        assert!((&s15 - &AlgebraicScalar::integer(4)).is_negative());
        assert_eq!((&s15 - &AlgebraicScalar::integer(3)).signum(), Ordering::Greater);
        // sqrt3 + sqrt5 - sqrt15 ≈ 0.095 > 0
        let x = &(&AlgebraicScalar::sqrt3() + &AlgebraicScalar::sqrt5()) - &s15;
        assert_eq!(x.signum(), Ordering::Greater);
        // 2sqrt3 - sqrt15 + sqrt5 - 1 ≈ 1.827 > 0
        let y = AlgebraicScalar::new([rat(-1, 1), rat(2, 1), rat(1, 1), rat(-1, 1)]);
        assert_eq!(y.signum(), Ordering::Greater);
        assert_eq!(AlgebraicScalar::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn rendering() {
        assert_eq!(AlgebraicScalar::ratio(1, 2).to_string(), "(1/2)");
        assert_eq!(AlgebraicScalar::sqrt5_times(-6, 5).to_string(), "-(6/5)*sqrt5");
        let x = AlgebraicScalar::new([rat(-1, 2), rat(1, 1), rat(0, 1), rat(-3, 1)]);
        assert_eq!(x.to_string(), "-(1/2) + sqrt3 - 3*sqrt15");
    }
}
