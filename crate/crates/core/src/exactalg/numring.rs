//! The cubic field `Q(r)` with `r^3 - 8r^2 + 5r + 1 = 0`.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::Ring;

/// `c[0] + c[1] r + c[2] r^2`, always reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumRingElem {
    pub c: [BigRational; 3],
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl NumRingElem {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational) -> Self {
        NumRingElem { c: [c0, c1, c2] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(q(c0), q(c1), q(c2))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::new(a, <BigRational as Zero>::zero(), <BigRational as Zero>::zero())
    }

    /// The generator `r`.
    pub fn r() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// The Galois conjugate `r -> -r^2 + 7r + 2` applied to this element.
    pub fn sigma(&self) -> Self {
        let rs = Self::from_ints(2, 7, -1);
        let [c0, c1, c2] = &self.c;
        Self::from_rational(c0.clone())
            .add(&rs.mul(&Self::from_rational(c1.clone())))
            .add(&rs.mul(&rs).mul(&Self::from_rational(c2.clone())))
    }

    /// Matrix of multiplication by this element on the basis `1, r, r^2`.
    pub fn mult_matrix(&self) -> [[BigRational; 3]; 3] {
        let basis = [Self::from_ints(1, 0, 0), Self::r(), Self::from_ints(0, 0, 1)];
        let cols: [NumRingElem; 3] = basis.map(|b| self.mul(&b));
        core::array::from_fn(|i| core::array::from_fn(|j| cols[j].c[i].clone()))
    }

    pub fn norm(&self) -> BigRational {
        let m = self.mult_matrix();
        let det2 = |a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational| a * d - b * c;
        &m[0][0] * det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2])
            - &m[0][1] * det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2])
            + &m[0][2] * det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1])
    }
}

impl Ring for NumRingElem {
    fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }
    fn one() -> Self {
        Self::from_ints(1, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
    fn add(&self, o: &Self) -> Self {
        NumRingElem { c: core::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }
    fn sub(&self, o: &Self) -> Self {
        NumRingElem { c: core::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }
    fn neg(&self) -> Self {
        NumRingElem { c: core::array::from_fn(|i| -&self.c[i]) }
    }
    fn mul(&self, o: &Self) -> Self {
        let mut t: [BigRational; 5] = core::array::from_fn(|_| <BigRational as Zero>::zero());
        for i in 0..3 {
            if Zero::is_zero(&self.c[i]) {
                continue;
            }
            for j in 0..3 {
                t[i + j] += &self.c[i] * &o.c[j];
            }
        }
        // r^k = 8 r^(k-1) - 5 r^(k-2) - r^(k-3)
        for k in (3..5).rev() {
            let top = core::mem::replace(&mut t[k], <BigRational as Zero>::zero());
            if Zero::is_zero(&top) {
                continue;
            }
            t[k - 1] += &top * q(8);
            t[k - 2] -= &top * q(5);
            t[k - 3] -= top;
        }
        let [a, b, c, _, _] = t;
        NumRingElem { c: [a, b, c] }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_ints(n, 0, 0)
    }
}

impl fmt::Debug for NumRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for NumRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, name) in [(2usize, "r^2"), (1, "r"), (0, "")] {
            let v = &self.c[k];
            if Zero::is_zero(v) {
                continue;
            }
            if wrote {
                f.write_str(if *v < <BigRational as Zero>::zero() { " - " } else { " + " })?;
            } else if *v < <BigRational as Zero>::zero() {
                f.write_str("-")?;
            }
            let a = if *v < <BigRational as Zero>::zero() { -v } else { v.clone() };
            if name.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(name)?;
            } else {
                write!(f, "({a}){name}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_vanishes() {
        let r = NumRingElem::r();
        let v = r.pow(3).sub(&r.pow(2).mul(&NumRingElem::from_i64(8))).add(&r.mul(&NumRingElem::from_i64(5)));
        assert_eq!(v.add(&NumRingElem::one()), NumRingElem::zero());
    }

    #[test]
    fn sigma_has_order_three() {
        let r = NumRingElem::r();
        let s1 = r.sigma();
        assert_eq!(s1, NumRingElem::from_ints(2, 7, -1));
        assert_eq!(s1.sigma(), NumRingElem::from_ints(6, -8, 1));
        assert_eq!(s1.sigma().sigma(), r);
        // r + r^s + r^(s^2) = 8
        assert_eq!(r.add(&s1).add(&s1.sigma()), NumRingElem::from_i64(8));
    }

    #[test]
    fn epsilon_unit() {
        let r = NumRingElem::r();
        let eps = r.pow(8).mul(&r.sub(&NumRingElem::one()).pow(8));
        assert_eq!(eps, NumRingElem::from_ints(-56645954512, -290993856257, 413283046371));
        assert_eq!(eps.norm(), q(1));
    }
}
