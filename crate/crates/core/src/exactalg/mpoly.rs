//! Sparse polynomials in up to four variables over a [`Ring`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::ring::Ring;

pub const NVARS: usize = 4;
pub type Exp = [u32; NVARS];

/// Exponent vector to coefficient; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<R: Ring> {
    terms: BTreeMap<Exp, R>,
}

/// Integer polynomial in up to four variables.
pub type ZxyPoly = MPoly<BigInt>;

impl<R: Ring> MPoly<R> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(R::from_i64(c))
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn monomial(c: R, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self::monomial(R::one(), e)
    }

    /// Univariate polynomial in variable `v` from ascending integer coefficients.
    pub fn univariate(v: usize, asc: &[i64]) -> Self {
        let mut out = Self::zero();
        for (k, &c) in asc.iter().enumerate() {
            let mut e = [0; NVARS];
            e[v] = k as u32;
            out.add_term(e, R::from_i64(c));
        }
        out
    }

    /// Bivariate polynomial in variables 0 and 1 from `(i, j, c)` triples meaning `c v0^i v1^j`.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut out = Self::zero();
        for &(i, j, c) in terms {
            out.add_term([i, j, 0, 0], R::from_i64(c));
        }
        out
    }

    pub fn add_term(&mut self, e: Exp, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exp) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.neg());
        }
        out
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exp = core::array::from_fn(|i| e1[i] + e2[i]);
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Coefficients with respect to variable `v`: `out[k]` multiplies `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Self> {
        let n = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out: Vec<Self> = (0..n).map(|_| Self::zero()).collect();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[v] = 0;
            out[e[v] as usize].add_term(e2, c.clone());
        }
        out
    }

    /// Rebuilds `sum out[k] v^k` from coefficients free of `v`.
    pub fn from_coeffs_in(v: usize, cs: &[Self]) -> Self {
        let mut out = Self::zero();
        for (k, c) in cs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = *e;
                e2[v] += k as u32;
                out.add_term(e2, a.clone());
            }
        }
        out
    }

    /// Substitutes `v := s`.
    pub fn substitute(&self, v: usize, s: &Self) -> Self {
        let cs = self.coeffs_in(v);
        let mut acc = Self::zero();
        for c in cs.iter().rev() {
            acc = acc.mul(s).add(c);
        }
        acc
    }

    /// `den^d * P(num/den)` in variable `v`, where `d >= deg_v P`.
    pub fn substitute_fraction(&self, v: usize, num: &Self, den: &Self, d: u32) -> Self {
        let cs = self.coeffs_in(v);
        assert!(cs.len() as u32 <= d + 1, "homogenizing degree below the actual degree");
        let mut out = Self::zero();
        for (k, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&c.mul(&num.pow(k as u32)).mul(&den.pow(d - k as u32)));
        }
        out
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn rename(&self, perm: [usize; NVARS]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = [0; NVARS];
            for i in 0..NVARS {
                e2[perm[i]] += e[i];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Division by a divisor whose leading coefficient in `v` is 1.
    ///
    /// Returns `(quotient, remainder)` with `deg_v remainder < deg_v divisor`.
    pub fn div_rem_monic(&self, v: usize, divisor: &Self) -> (Self, Self) {
        let dcs = divisor.coeffs_in(v);
        let n = dcs.len() - 1;
        assert!(dcs[n] == Self::one(), "divisor must be monic in the chosen variable");
        let mut rem = self.coeffs_in(v);
        let mut quo: Vec<Self> = (0..rem.len().saturating_sub(n)).map(|_| Self::zero()).collect();
        while rem.len() > n {
            let top = rem.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let k = rem.len() - n;
            for (i, dc) in dcs[..n].iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&top.mul(dc));
            }
            quo[k] = top;
        }
        (Self::from_coeffs_in(v, &quo), Self::from_coeffs_in(v, &rem))
    }

    /// Evaluates every variable at the given ring points.
    pub fn eval_all(&self, point: &[R; NVARS]) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                if e[i] > 0 {
                    t = t.mul(&point[i].pow(e[i]));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl<R: Ring> Ring for MPoly<R> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        MPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        MPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        MPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        MPoly::from_i64(n)
    }
}

/// `Res_v(m, g)` for `m` monic in `v`, as the determinant of multiplication by `g` modulo `m`.
///
/// Equals the Sylvester resultant with `m` first.
pub fn resultant_monic<R: Ring>(m: &MPoly<R>, g: &MPoly<R>, v: usize) -> MPoly<R> {
    let n = m.degree_in(v).expect("nonzero modulus") as usize;
    let x = MPoly::<R>::var(v);
    let mut cur = g.div_rem_monic(v, m).1;
    let mut cols: Vec<Vec<MPoly<R>>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut cs = cur.coeffs_in(v);
        cs.resize(n, MPoly::zero());
        cols.push(cs);
        cur = cur.mul(&x).div_rem_monic(v, m).1;
    }
    let mat: Vec<Vec<MPoly<R>>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    super::ring::determinant(&mat)
}

/// Discriminant in `v` of a polynomial monic in `v`: `(-1)^(n(n-1)/2) Res(f, f')`.
pub fn discriminant_monic<R: Ring>(f: &MPoly<R>, v: usize) -> MPoly<R> {
    let n = f.degree_in(v).unwrap_or(0);
    let fd = derivative(f, v);
    let r = resultant_monic(f, &fd, v);
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        r.neg()
    } else {
        r
    }
}

pub fn derivative<R: Ring>(f: &MPoly<R>, v: usize) -> MPoly<R> {
    let mut out = MPoly::zero();
    for (e, c) in f.terms() {
        if e[v] == 0 {
            continue;
        }
        let mut e2 = *e;
        e2[v] -= 1;
        out.add_term(e2, c.mul(&R::from_i64(e[v] as i64)));
    }
    out
}

const NAMES: [&str; NVARS] = ["x", "y", "z", "w"];

impl<R: Ring + fmt::Display> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut mono = String::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push_str(NAMES[i]),
                    _ => mono.push_str(&alloc::format!("{}^{}", NAMES[i], k)),
                }
            }
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){mono}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = ZxyPoly;

    #[test]
    fn product_and_division() {
        let x = Z::var(0);
        let y = Z::var(1);
        let a = x.add(&y).pow(3);
        let d = x.sub(&y);
        let (q, r) = a.mul(&d).div_rem_monic(0, &d);
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (_, r) = x.pow(2).div_rem_monic(0, &x.sub(&y));
        assert_eq!(r, y.pow(2));
    }

    #[test]
    fn resultant_of_linear_is_evaluation() {
        // Res_x(x - 3, x^2 + y) = 9 + y
        let m = Z::univariate(0, &[-3, 1]);
        let g = Z::var(0).pow(2).add(&Z::var(1));
        assert_eq!(resultant_monic(&m, &g, 0), Z::univariate(1, &[9, 1]));
    }

    #[test]
    fn quadratic_discriminant() {
        // disc_x(x^2 + y x + z) = y^2 - 4z
        let f = Z::var(0).pow(2).add(&Z::var(1).mul(&Z::var(0))).add(&Z::var(2));
        let want = Z::var(1).pow(2).sub(&Z::var(2).scale(&BigInt::from(4)));
        assert_eq!(discriminant_monic(&f, 0), want);
    }

    #[test]
    fn fraction_substitution() {
        // x^2 at x = 1/(1-x), homogenized to degree 2: 1
        let p = Z::univariate(0, &[0, 0, 1]);
        let den = Z::univariate(0, &[1, -1]);
        assert_eq!(p.substitute_fraction(0, &Z::one(), &den, 2), Z::one());
    }
}
