//! Class numbers of imaginary quadratic orders and the characters around them.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Kronecker symbol `(a / n)` with the usual conventions at 2 and at -1.
///
/// # Panics
///
/// Panics when `n == 0`.
pub fn kronecker(a: i64, n: i64) -> i8 {
    assert!(n != 0, "Kronecker symbol with n = 0");
    let mut a = a as i128;
    let mut n = n as i128;
    let mut result: i8 = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let mut twos = 0u32;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a/2) = 1 for a = ±1 mod 8 and -1 for a = ±3 mod 8.
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol (a / n) for odd positive n.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// A negative discriminant `D = 0, 1 mod 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Discriminant {
    pub d: i64,
    pub is_fundamental: bool,
}

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(Discriminant { d, is_fundamental: is_fundamental(d) })
    }

    pub fn value(&self) -> i64 {
        self.d
    }
}

fn is_fundamental(d: i64) -> bool {
    let m = d.unsigned_abs();
    if d.rem_euclid(4) == 1 {
        is_squarefree(m)
    } else {
        let q = m / 4;
        matches!(q % 4, 1 | 2) && is_squarefree(q)
    }
}

pub fn is_squarefree(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let mut n = m;
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return false;
            }
        }
        q += 1;
    }
    true
}

/// Discriminant of `Q(sqrt(-m))` for squarefree `m > 0`.
pub fn field_discriminant(m: u64) -> Result<Discriminant> {
    if m == 0 || m > i64::MAX as u64 / 4 || !is_squarefree(m) {
        return Err(Error::InvalidDiscriminant(-(m.min(i64::MAX as u64) as i64)));
    }
    let neg = -(m as i64);
    if neg.rem_euclid(4) == 1 {
        Discriminant::new(neg)
    } else {
        Discriminant::new(4 * neg)
    }
}

/// Number of reduced primitive forms `(a, b, c)` with `b^2 - 4ac = D`.
pub fn class_number(disc: &Discriminant) -> u64 {
    let d = disc.d as i128;
    let big = -d;
    let mut count = 0u64;
    let mut a: i128 = 1;
    // Reduced forms satisfy 3a^2 <= |D|.
    while 3 * a * a <= big {
        let mut b = -a + 1;
        while b <= a {
            if (b - d).rem_euclid(2) == 0 {
                let num = b * b - d;
                if num % (4 * a) == 0 {
                    let c = num / (4 * a);
                    let boundary = b < 0 && a == c;
                    if c >= a && !boundary && a.gcd(&b).gcd(&c) == 1 {
                        count += 1;
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    count
}

/// Nakaya's class-number coefficient `a_p` and `h(-7p)` for the field `Q(sqrt(-7p))`.
pub fn nakaya_class_term(p: u64) -> Result<(Ratio<i64>, u64)> {
    if p == 7 {
        return Err(Error::BadPrime(p, "excluded by hypothesis"));
    }
    if p < 5 || !crate::ffpoly::fp::is_prime(p) {
        return Err(Error::BadPrime(p, "need a prime p >= 5"));
    }
    let n = 7 * p as i64;
    let bracket = 2 + (1 - kronecker(-1, n) as i64) * (2 + kronecker(-2, n) as i64);
    let h = class_number(&field_discriminant(7 * p)?);
    Ok((Ratio::new(bracket, 8), h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        assert_eq!(kronecker(-3, 13), 1);
        assert_eq!(kronecker(-7, 41), -1);
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(2, 83), -1);
        assert_eq!(kronecker(-4, 11), -1);
        assert_eq!(kronecker(3, 9), 0);
        assert_eq!(kronecker(5, 8), -1);
        assert_eq!(kronecker(-1, -7), 1);
        assert_eq!(kronecker(-7, 41), -1);
    }

    #[test]
    fn field_discriminants() {
        assert_eq!(field_discriminant(7).unwrap().d, -7);
        assert_eq!(field_discriminant(5).unwrap().d, -20);
        assert_eq!(field_discriminant(287).unwrap().d, -287);
        assert!(field_discriminant(12).is_err());
        assert!(field_discriminant(5).unwrap().is_fundamental);
        assert!(!Discriminant::new(-12).unwrap().is_fundamental);
        assert!(Discriminant::new(-5).is_err());
    }

    #[test]
    fn small_class_numbers() {
        let h = |d| class_number(&Discriminant::new(d).unwrap());
        assert_eq!(h(-3), 1);
        assert_eq!(h(-4), 1);
        assert_eq!(h(-12), 1);
        assert_eq!(h(-20), 2);
        assert_eq!(h(-52), 2);
        assert_eq!(h(-83), 3);
        assert_eq!(h(-68), 4);
        assert_eq!(h(-164), 8);
        assert_eq!(h(-287), 14);
        assert_eq!(h(-119), 10);
        assert_eq!(h(-23), 3);
    }

    #[test]
    fn nakaya_terms() {
        assert_eq!(nakaya_class_term(41).unwrap(), (Ratio::new(1, 2), 14));
        assert_eq!(nakaya_class_term(5).unwrap().0, Ratio::new(1, 1));
        assert_eq!(nakaya_class_term(11).unwrap().0, Ratio::new(1, 4));
        assert!(nakaya_class_term(7).is_err());
    }
}
