//! Dense univariate polynomials over `Q`, enough for exact gcds.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn from_ints(asc: &[i64]) -> Self {
        Self::new(asc.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
    }

    pub fn from_bigints(asc: &[BigInt]) -> Self {
        Self::new(asc.iter().map(|v| BigRational::from_integer(v.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return QPoly(Vec::new());
        }
        let mut out = alloc::vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => self.scale(&(BigRational::one() / lc)),
        }
    }

    pub fn rem(&self, d: &Self) -> Self {
        let dn = d.degree().expect("division by zero polynomial");
        let inv = BigRational::one() / &d.0[dn];
        let mut r = self.0.clone();
        while r.len() > dn {
            let top = r.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let f = &top * &inv;
            let k = r.len() - dn;
            for i in 0..dn {
                r[k + i] -= &f * &d.0[i];
            }
        }
        Self::new(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = QPoly::from_ints(&[1, 1]);
        let b = QPoly::from_ints(&[-2, 1]);
        let c = QPoly::from_ints(&[5, 0, 3]);
        let g = a.mul(&b).mul(&c).gcd(&b.mul(&c).mul(&QPoly::from_ints(&[7, 1])));
        assert_eq!(g, b.mul(&c).monic());
    }
}
