//! Gaussian extension K(i) of the coefficient field and Laurent polynomials
//! over it. Used only to divide trigonometric polynomials exactly: writing
//! cos and sin through z = e^{it} turns a trigonometric polynomial into a
//! Laurent polynomial, and Laurent polynomials over a field divide like
//! ordinary ones.

use super::algebraic::AlgebraicScalar;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Cx {
    pub re: AlgebraicScalar,
    pub im: AlgebraicScalar,
}

impl Cx {
    pub fn new(re: AlgebraicScalar, im: AlgebraicScalar) -> Self {
        Cx { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }

    /// Multiplication by i.
    pub fn times_i(&self) -> Cx {
        Cx::new(-&self.im, self.re.clone())
    }

    pub fn inverse(&self) -> Option<Cx> {
        // x² + y² vanishes only at zero because K is real
        let n = &self.re.square() + &self.im.square();
        let inv = n.inverse()?;
        Some(Cx::new(&self.re * &inv, -(&self.im * &inv)))
    }
}

/// Laurent polynomial Σ coeffs[k]·z^(low + k).
#[derive(Clone, Debug)]
pub(crate) struct Laurent {
    pub low: i64,
    pub coeffs: Vec<Cx>,
}

impl Laurent {
    /// Drop zero coefficients at both ends; powers of z are units.
    pub fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Cx::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        self
    }

    /// Exact quotient, or `None` when `den` does not divide `self`.
    pub fn div_exact(&self, den: &Laurent) -> Option<Laurent> {
        let num = self.clone().trim();
        let den = den.clone().trim();
        if den.coeffs.is_empty() {
            return None;
        }
        if num.coeffs.is_empty() {
            return Some(Laurent { low: 0, coeffs: vec![] });
        }
        if num.coeffs.len() < den.coeffs.len() {
            return None;
        }
        let lead_inv = den.coeffs.last().unwrap().inverse()?;
        let mut rem = num.coeffs.clone();
        let qlen = rem.len() - den.coeffs.len() + 1;
        let mut q = vec![Cx::default(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + den.coeffs.len() - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&lead_inv);
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(d));
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent {
            low: num.low - den.low,
            coeffs: q,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(n: i64) -> Cx {
        Cx::new(AlgebraicScalar::integer(n), AlgebraicScalar::zero())
    }

    #[test]
    fn polynomial_division() {
        // (z² - 1) / (z - 1) = z + 1
        let num = Laurent { low: 0, coeffs: vec![real(-1), real(0), real(1)] };
        let den = Laurent { low: 0, coeffs: vec![real(-1), real(1)] };
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q.coeffs, vec![real(1), real(1)]);
        let bad = Laurent { low: 0, coeffs: vec![real(1), real(1)] };
        assert!(num.div_exact(&Laurent { low: 0, coeffs: vec![real(2), real(0), real(1)] }).is_none());
        assert!(bad.div_exact(&Laurent { low: 0, coeffs: vec![] }).is_none());
    }

    #[test]
    fn gaussian_inverse() {
        let x = Cx::new(AlgebraicScalar::integer(3), AlgebraicScalar::sqrt5());
        let one = x.mul(&x.inverse().unwrap());
        assert_eq!(one, real(1));
        assert_eq!(real(2).times_i().im, AlgebraicScalar::integer(2));
    }
}
