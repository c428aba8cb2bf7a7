//! The quadratic extension `F_{l^2} = F_l(θ)`, `θ^2 = n` with `n` the smallest
//! positive nonresidue, and polynomials over it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::factor::factorize;
use super::fp::{add_mod, inv_mod, mul_mod, neg_mod, smallest_nonresidue, sqrt_mod, sub_mod};
use super::poly::FpPoly;
use crate::error::{Error, Result};

/// Arithmetic context for `F_{l^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp2 {
    pub p: u64,
    pub nonresidue: u64,
}

/// `a + b θ` in canonical form; ordering is lexicographic in `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp2Elem {
    pub modulus: u64,
    pub a: u64,
    pub b: u64,
}

impl Fp2Elem {
    pub fn in_prime_field(&self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for Fp2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}θ"),
            (a, b) => write!(f, "{a}+{b}θ"),
        }
    }
}

impl Fp2 {
    pub fn new(p: u64) -> Self {
        Fp2 { p, nonresidue: smallest_nonresidue(p) }
    }

    pub fn elem(&self, a: u64, b: u64) -> Fp2Elem {
        Fp2Elem { modulus: self.p, a: a % self.p, b: b % self.p }
    }

    pub fn from_base(&self, a: u64) -> Fp2Elem {
        self.elem(a, 0)
    }

    pub fn zero(&self) -> Fp2Elem {
        self.elem(0, 0)
    }

    pub fn one(&self) -> Fp2Elem {
        self.elem(1, 0)
    }

    pub fn add(&self, x: Fp2Elem, y: Fp2Elem) -> Fp2Elem {
        let p = self.p;
        self.elem(add_mod(x.a, y.a, p), add_mod(x.b, y.b, p))
    }

    pub fn sub(&self, x: Fp2Elem, y: Fp2Elem) -> Fp2Elem {
        let p = self.p;
        self.elem(sub_mod(x.a, y.a, p), sub_mod(x.b, y.b, p))
    }

    pub fn neg(&self, x: Fp2Elem) -> Fp2Elem {
        self.elem(neg_mod(x.a, self.p), neg_mod(x.b, self.p))
    }

    pub fn mul(&self, x: Fp2Elem, y: Fp2Elem) -> Fp2Elem {
        let p = self.p;
        let bb = mul_mod(mul_mod(x.b, y.b, p), self.nonresidue, p);
        let a = add_mod(mul_mod(x.a, y.a, p), bb, p);
        let b = add_mod(mul_mod(x.a, y.b, p), mul_mod(x.b, y.a, p), p);
        self.elem(a, b)
    }

    pub fn norm(&self, x: Fp2Elem) -> u64 {
        let p = self.p;
        sub_mod(
            mul_mod(x.a, x.a, p),
            mul_mod(mul_mod(x.b, x.b, p), self.nonresidue, p),
            p,
        )
    }

    pub fn inv(&self, x: Fp2Elem) -> Fp2Elem {
        let ni = inv_mod(self.norm(x), self.p);
        self.elem(mul_mod(x.a, ni, self.p), mul_mod(neg_mod(x.b, self.p), ni, self.p))
    }

    pub fn is_zero(&self, x: Fp2Elem) -> bool {
        x.a == 0 && x.b == 0
    }

    /// A square root of a base-field element, which always exists in `F_{l^2}`.
    pub fn sqrt_base(&self, d: u64) -> Fp2Elem {
        let p = self.p;
        match sqrt_mod(d, p) {
            Some(s) => self.elem(s, 0),
            None => {
                // d = n s^2 for the fixed nonresidue n, so sqrt(d) = s θ.
                let s = sqrt_mod(mul_mod(d, inv_mod(self.nonresidue, p), p), p)
                    .expect("quotient of nonresidues is a residue");
                self.elem(0, s)
            }
        }
    }
}

/// Roots of `f` in `F_{l^2}` with multiplicity, sorted canonically.
pub fn roots_in_fp2(f: &FpPoly) -> Result<Vec<Fp2Elem>> {
    let p = f.modulus();
    let k = Fp2::new(p);
    let fac = factorize(f)?;
    let inv2 = inv_mod(2, p);
    let mut out = Vec::new();
    for (g, m) in &fac.factors {
        let roots = match g.deg() {
            1 => vec![k.from_base(neg_mod(g.coeff(0), p))],
            2 => {
                let (c, b) = (g.coeff(0), g.coeff(1));
                let disc = sub_mod(mul_mod(b, b, p), mul_mod(4, c, p), p);
                let s = k.sqrt_base(disc);
                let half = k.from_base(inv2);
                let mb = k.from_base(neg_mod(b, p));
                vec![
                    k.mul(half, k.add(mb, s)),
                    k.mul(half, k.sub(mb, s)),
                ]
            }
            _ => Vec::new(),
        };
        for r in roots {
            out.extend(core::iter::repeat_n(r, *m as usize));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Dense polynomial over `F_{l^2}`, low degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp2Poly {
    pub field: Fp2,
    coeffs: Vec<Fp2Elem>,
}

impl Fp2Poly {
    pub fn new(field: Fp2, mut coeffs: Vec<Fp2Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(*c)) {
            coeffs.pop();
        }
        Fp2Poly { field, coeffs }
    }

    pub fn from_base(field: Fp2, f: &FpPoly) -> Self {
        Self::new(field, f.coeffs().iter().map(|&c| field.from_base(c)).collect())
    }

    pub fn coeffs(&self) -> &[Fp2Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: Fp2Elem) -> Fp2Elem {
        let k = self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), c))
    }

    pub fn monic(&self) -> Self {
        let k = self.field;
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let li = k.inv(lc);
                Self::new(k, self.coeffs.iter().map(|&c| k.mul(c, li)).collect())
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Fp2Elem], i: usize| v.get(i).copied().unwrap_or(k.zero());
        Self::new(k, (0..n).map(|i| k.sub(get(&self.coeffs, i), get(&other.coeffs, i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::new(k, Vec::new());
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Self::new(k, out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let k = self.field;
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::new(k, Vec::new()), self.clone());
        }
        let dn = d.deg();
        let inv = k.inv(*d.coeffs.last().expect("nonzero"));
        let mut r = self.coeffs.clone();
        let mut q = vec![k.zero(); r.len() - dn];
        for i in (0..q.len()).rev() {
            let c = k.mul(r[i + dn], inv);
            q[i] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i + j] = k.sub(r[i + j], k.mul(c, dc));
            }
        }
        r.truncate(dn);
        (Self::new(k, q), Self::new(k, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let k = self.field;
        let mut base = self.rem(m);
        let mut acc = Self::new(k, vec![k.one()]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    fn x(k: Fp2) -> Self {
        Self::new(k, vec![k.zero(), k.one()])
    }

    /// Distinct roots in `F_{l^2}`, sorted canonically.
    pub fn distinct_roots(&self) -> Vec<Fp2Elem> {
        let k = self.field;
        if self.deg() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let q = (k.p as u128) * (k.p as u128);
        let x = Self::x(k);
        let split = f.gcd(&x.pow_mod(q, &f).sub(&x));
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(k.p ^ 0x9e37_79b9_7f4a_7c15);
        split_linear(&split, q, &mut rng, &mut out);
        out.sort_unstable();
        out
    }

    /// Multiplicity of `root` as a zero of `self`.
    pub fn multiplicity(&self, root: Fp2Elem) -> usize {
        let k = self.field;
        let lin = Self::new(k, vec![k.neg(root), k.one()]);
        let mut f = self.clone();
        let mut m = 0;
        while !f.is_zero() {
            let (q, r) = f.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            f = q;
            m += 1;
        }
        m
    }
}

fn split_linear(f: &Fp2Poly, q: u128, rng: &mut ChaCha8Rng, out: &mut Vec<Fp2Elem>) {
    let k = f.field;
    match f.deg() {
        0 => return,
        1 => {
            let c = f.coeffs()[0];
            out.push(k.neg(c));
            return;
        }
        _ => {}
    }
    let one = Fp2Poly::new(k, vec![k.one()]);
    loop {
        let c = k.elem(rng.next_u64() % k.p, rng.next_u64() % k.p);
        let a = Fp2Poly::new(k, vec![c, k.one()]);
        let b = a.pow_mod((q - 1) / 2, f);
        let g = f.gcd(&b.sub(&one));
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_rem(&g).0.monic();
            split_linear(&g, q, rng, out);
            split_linear(&h, q, rng, out);
            return;
        }
    }
}

/// Checks that every root of a polynomial over `F_{l^2}` lies in `F_{l^2}`
/// and returns the distinct roots; errors if some root lies outside.
pub fn split_completely(f: &Fp2Poly) -> Result<Vec<Fp2Elem>> {
    let roots = f.distinct_roots();
    let total: usize = roots.iter().map(|&r| f.multiplicity(r)).sum();
    if total != f.deg() {
        return Err(Error::Structural(alloc::format!(
            "only {total} of {} roots lie in F_(p^2) for p = {}",
            f.deg(),
            f.field.p
        )));
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_one_mod_3() {
        let roots = roots_in_fp2(&FpPoly::from_i64s(3, &[1, 0, 1])).unwrap();
        let k = Fp2::new(3);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(k.mul(*r, *r), k.from_base(2));
            assert!(!r.in_prime_field());
        }
        assert_eq!(roots[0], k.neg(roots[1]));
    }

    #[test]
    fn prime_field_root() {
        let roots = roots_in_fp2(&FpPoly::from_i64s(13, &[8, 1])).unwrap();
        assert_eq!(roots, [Fp2::new(13).from_base(5)]);
    }

    #[test]
    fn conjugate_roots_mod_5() {
        let f = FpPoly::from_i64s(5, &[1, -1, 1]);
        let roots = roots_in_fp2(&f).unwrap();
        let k = Fp2::new(5);
        let g = Fp2Poly::from_base(k, &f);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(!r.in_prime_field());
            assert!(k.is_zero(g.eval(r)));
        }
    }

    #[test]
    fn extension_polynomial_roots() {
        let k = Fp2::new(11);
        let t = k.elem(3, 7);
        let u = k.elem(0, 1);
        // (Y - t)^2 (Y - u)
        let lt = Fp2Poly::new(k, vec![k.neg(t), k.one()]);
        let lu = Fp2Poly::new(k, vec![k.neg(u), k.one()]);
        let f = lt.mul(&lt).mul(&lu);
        let mut expect = vec![t, u];
        expect.sort_unstable();
        assert_eq!(split_completely(&f).unwrap(), expect);
        assert_eq!(f.multiplicity(t), 2);
        // An irreducible cubic over F_11 has no roots in F_121.
        let cubic = (0..11)
            .map(|c| FpPoly::from_i64s(11, &[c, 1, 0, 1]))
            .find(super::super::factor::is_irreducible)
            .unwrap();
        assert!(split_completely(&Fp2Poly::from_base(k, &cubic)).is_err());
    }
}
