use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Determinant by expansion over row prefixes and column subsets.
///
/// Uses only ring operations, so it works over polynomial rings; cost is
/// `O(2^n n)` multiplications, fine for the small matrices needed here.
pub fn determinant<R: Ring>(m: &[alloc::vec::Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(n <= 20, "matrix too large for subset expansion");
    let mut f: alloc::vec::Vec<Option<R>> = alloc::vec![None; 1 << n];
    f[0] = Some(R::one());
    for mask in 0usize..(1 << n) {
        let Some(cur) = f[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            f[mask] = Some(cur);
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            // Sign of inserting `col` after the columns already chosen.
            let above = (mask >> (col + 1)).count_ones();
            let mut term = cur.mul(&m[row][col]);
            if above % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut f[mask | (1 << col)];
            *slot = Some(match slot.take() {
                Some(v) => v.add(&term),
                None => term,
            });
        }
    }
    f[(1 << n) - 1].take().unwrap_or_else(R::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn integer_determinants() {
        let z = |v: i64| BigInt::from(v);
        let m = vec![vec![z(2), z(0), z(1)], vec![z(1), z(3), z(2)], vec![z(1), z(1), z(1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m), z(0));
        let m = vec![vec![z(0), z(1)], vec![z(1), z(0)]];
        assert_eq!(determinant(&m), z(-1));
        let m = vec![vec![z(4), z(7), z(2)], vec![z(3), z(6), z(1)], vec![z(2), z(5), z(3)]];
        assert_eq!(determinant(&m), z(4 * 13 - 7 * 7 + 2 * 3));
    }
}
