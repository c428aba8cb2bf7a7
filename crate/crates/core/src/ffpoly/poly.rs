use alloc::vec;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::fp::{add_mod, from_i64, inv_mod, mul_mod, neg_mod, sub_mod};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `F_l`, coefficients stored low degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Builds a polynomial from residues (reduced here) and trims trailing zeros.
    pub fn new(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        let mut p = FpPoly { modulus, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(modulus: u64, coeffs: &[i64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&c| from_i64(c, modulus)).collect())
    }

    pub fn zero(modulus: u64) -> Self {
        FpPoly { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: u64) -> Self {
        Self::constant(modulus, 1)
    }

    pub fn constant(modulus: u64, c: u64) -> Self {
        Self::new(modulus, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(modulus: u64, c: u64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(modulus, v)
    }

    /// `x - a`.
    pub fn linear(modulus: u64, a: u64) -> Self {
        Self::new(modulus, vec![neg_mod(a % modulus, modulus), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for nonzero callers.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }

    pub fn try_same(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus, other.modulus))
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        let c = c % p;
        Self::new(p, self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading_coeff(), self.modulus))
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.modulus;
        let x = x % p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::new(p, v)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        FpPoly { modulus: self.modulus, coeffs: v }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder; fails on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.try_same(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.modulus;
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((Self::zero(p), self.clone()));
        }
        let dn = d.deg();
        let inv = inv_mod(d.leading_coeff(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dn];
        for i in (0..q.len()).rev() {
            let c = mul_mod(r[i + dn], inv, p);
            q[i] = c;
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = sub_mod(r[i + j], mul_mod(c, dc, p), p);
                }
            }
        }
        r.truncate(dn);
        Ok((Self::new(p, q), Self::new(p, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).expect("nonzero divisor").1
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(alloc::format!("{self} / {d}")))
        }
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product modulo `m`.
    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m)
    }

    /// `self^e mod m` for a 128-bit exponent.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.modulus).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        self.check_same(g);
        let mut acc = Self::zero(self.modulus);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(self.modulus, c);
        }
        acc
    }

    /// Roots lying in `F_l`, each listed once, ascending.
    pub fn distinct_roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out: Vec<u64> = super::factorize(self)
            .expect("nonzero")
            .factors
            .iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, _)| neg_mod(g.coeff(0), self.modulus))
            .collect();
        out.sort_unstable();
        out
    }

    /// `x^(l^k) mod self` computed by repeated Frobenius powering.
    pub fn frobenius_power(&self, base: &Self, k: u32) -> Self {
        let mut h = base.rem(self);
        for _ in 0..k {
            h = h.pow_mod(self.modulus as u128, self);
        }
        h
    }

    /// Renders coefficients as signed representatives in `(-l/2, l/2]`.
    pub fn signed_coeffs(&self) -> Vec<i64> {
        let p = self.modulus;
        self.coeffs
            .iter()
            .map(|&c| if c > p / 2 { c as i64 - p as i64 } else { c as i64 })
            .collect()
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[mod {}]({})", self.modulus, self)
    }
}

impl FpPoly {
    /// Residues in `0..l`, highest degree first, in the named variable, e.g. `Y^2 + 37Y + 26`.
    pub fn to_var_string(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (k, c) {
                (0, c) => format!("{c}"),
                (1, 1) => String::from(var),
                (1, c) => format!("{c}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, c) => format!("{c}{var}^{k}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FpPoly {
    /// Human form with signed coefficients, highest degree first, e.g. `x^2 + 3x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let signed = self.signed_coeffs();
        let mut first = true;
        for (k, &c) in signed.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, m) => write!(f, "{m}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.check_same(rhs);
        let p = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| add_mod(self.coeff(i), rhs.coeff(i), p)).collect();
        FpPoly::new(p, v)
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self.check_same(rhs);
        let p = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| sub_mod(self.coeff(i), rhs.coeff(i), p)).collect();
        FpPoly::new(p, v)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let p = self.modulus;
        FpPoly::new(p, self.coeffs.iter().map(|&c| neg_mod(c, p)).collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.check_same(rhs);
        let p = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(p);
        }
        let (a, b) = (&self.coeffs, &rhs.coeffs);
        let n = a.len() + b.len() - 1;
        let pp = p as u128;
        let mut out = Vec::with_capacity(n);
        if p >> 32 == 0 {
            // Products stay below 2^64, so the u128 accumulator never overflows.
            for k in 0..n {
                let lo = k.saturating_sub(b.len() - 1);
                let hi = k.min(a.len() - 1);
                let mut acc: u128 = 0;
                for i in lo..=hi {
                    acc += (a[i] * b[k - i]) as u128;
                }
                out.push((acc % pp) as u64);
            }
        } else {
            // Products are below 2^126; three fit before a reduction is needed.
            for k in 0..n {
                let lo = k.saturating_sub(b.len() - 1);
                let hi = k.min(a.len() - 1);
                let mut acc: u128 = 0;
                let mut pending = 0u32;
                for i in lo..=hi {
                    acc += a[i] as u128 * b[k - i] as u128;
                    pending += 1;
                    if pending == 3 {
                        acc %= pp;
                        pending = 0;
                    }
                }
                out.push((acc % pp) as u64);
            }
        }
        FpPoly::new(p, out)
    }
}

impl Add for FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: FpPoly) -> FpPoly {
        &self + &rhs
    }
}

impl Sub for FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: FpPoly) -> FpPoly {
        &self - &rhs
    }
}

impl Mul for FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: FpPoly) -> FpPoly {
        &self * &rhs
    }
}

/// Product of a sequence of polynomials (the empty product is 1).
pub fn product<'a>(modulus: u64, items: impl IntoIterator<Item = &'a FpPoly>) -> FpPoly {
    items.into_iter().fold(FpPoly::one(modulus), |acc, g| &acc * g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let p = 13;
        let f = FpPoly::from_i64s(p, &[1, 2, 1]);
        let g = FpPoly::from_i64s(p, &[1, 1]);
        assert_eq!(&g * &g, f);
        assert_eq!(f.div_exact(&g).unwrap(), g);
        assert_eq!(f.gcd(&g), g);
        assert_eq!(f.eval(3), 16 % 13);
        assert_eq!(f.derivative(), FpPoly::from_i64s(p, &[2, 2]));
        assert_eq!(g.pow(2), f);
        assert!(FpPoly::from_i64s(p, &[0, 0]).is_zero());
    }

    #[test]
    fn large_modulus_multiplication() {
        let p = (1u64 << 62) - 57;
        let a = FpPoly::new(p, vec![p - 1; 9]);
        let sq = &a * &a;
        // (-1)(1 + x + ... + x^8) squared has coefficient k+1 rising then falling.
        for k in 0..17usize {
            let expect = if k < 9 { k as u64 + 1 } else { 17 - k as u64 };
            assert_eq!(sq.coeff(k), expect);
        }
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let f = FpPoly::from_i64s(11, &[1, 1, -4, 1]);
        assert_eq!(alloc::format!("{f}"), "x^3 - 4x^2 + x + 1");
    }

    #[test]
    fn compose_and_powmod() {
        let p = 7;
        let f = FpPoly::from_i64s(p, &[0, 0, 1]);
        let g = FpPoly::from_i64s(p, &[1, 1]);
        assert_eq!(f.compose(&g), FpPoly::from_i64s(p, &[1, 2, 1]));
        let m = FpPoly::from_i64s(p, &[1, 0, 1]);
        let x = FpPoly::x(p);
        assert_eq!(x.pow_mod(4, &m), FpPoly::one(p));
    }
}
