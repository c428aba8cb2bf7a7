//! Scalar arithmetic modulo a word-sized prime.

use crate::classnum::kronecker;
use crate::error::{Error, Result};

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= p {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(p)
    }
}

#[inline]
pub fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p >> 32 == 0 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

pub fn pow_mod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue; panics on zero (callers check).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    assert!(r1 != 0, "inverse of zero modulo {p}");
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

/// Reduce a signed integer into `[0, p)`.
#[inline]
pub fn from_i64(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

#[inline]
pub fn from_i128(a: i128, p: u64) -> u64 {
    a.rem_euclid(p as i128) as u64
}

/// Legendre symbol `(a/p)` for an odd prime `p`, as -1, 0 or 1.
pub fn legendre(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, ((p - 1) / 2) as u128, p) == 1 {
        1
    } else {
        -1
    }
}

/// Smallest positive quadratic nonresidue modulo an odd prime.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p).find(|&n| legendre(n, p) == -1).expect("odd prime has a nonresidue")
}

/// Square root modulo an odd prime (Tonelli-Shanks). Returns the smaller root.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    let root = if p % 4 == 3 {
        pow_mod(a, ((p + 1) / 4) as u128, p)
    } else {
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = smallest_nonresidue(p);
        let mut m = s;
        let mut c = pow_mod(z, q as u128, p);
        let mut t = pow_mod(a, q as u128, p);
        let mut r = pow_mod(a, q.div_ceil(2) as u128, p);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = mul_mod(tt, tt, p);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = mul_mod(b, b, p);
            }
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    Some(root.min(p - root))
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime `l` together with the quadratic-character data attached to it.
///
/// `r_l`, `s_l`, `mu7` are the 0/1 indicators `(1 - (D/l))/2` for
/// `D = -3, -4, -7`; `delta` and `epsilon` are the same values as `r_l`
/// and `s_l` under the names used by the resultant congruence, and
/// `n_l = floor(l / 12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeContext {
    pub l: u64,
    pub r_l: u8,
    pub s_l: u8,
    pub n_l: u64,
    pub mu7: u8,
    pub delta: u8,
    pub epsilon: u8,
}

impl PrimeContext {
    /// Builds the context for an odd prime `l != 7` below `2^63`.
    pub fn new(l: u64) -> Result<Self> {
        if l >= 1 << 63 {
            return Err(Error::BadPrime(l, "exceeds 63 bits"));
        }
        if !is_prime(l) {
            return Err(Error::BadPrime(l, "not prime"));
        }
        if l == 2 || l == 7 {
            return Err(Error::BadPrime(l, "excluded by hypothesis"));
        }
        let li = l as i64;
        let indicator = |d: i64| ((1 - kronecker(d, li)) / 2) as u8;
        let r_l = indicator(-3);
        let s_l = indicator(-4);
        Ok(PrimeContext {
            l,
            r_l,
            s_l,
            n_l: l / 12,
            mu7: indicator(-7),
            delta: r_l,
            epsilon: s_l,
        })
    }

    /// Kronecker symbol `(a / l)`.
    pub fn symbol(&self, a: i64) -> i8 {
        kronecker(a, self.l as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: alloc::vec::Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(0xffff_ffff_ffff_ffc5));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn sqrt_and_inverse() {
        for p in [3u64, 5, 13, 17, 41, 97, 1009, 65537] {
            for a in 1..p.min(300) {
                let ai = inv_mod(a, p);
                assert_eq!(mul_mod(a, ai, p), 1);
                match sqrt_mod(a, p) {
                    Some(r) => assert_eq!(mul_mod(r, r, p), a),
                    None => assert_eq!(legendre(a, p), -1),
                }
            }
        }
    }

    #[test]
    fn context_characters() {
        let c = PrimeContext::new(13).unwrap();
        assert_eq!((c.r_l, c.s_l, c.n_l, c.mu7), (0, 0, 1, 1));
        let c = PrimeContext::new(11).unwrap();
        assert_eq!((c.r_l, c.s_l, c.n_l), (1, 1, 0));
        let c = PrimeContext::new(41).unwrap();
        assert_eq!((c.r_l, c.s_l, c.n_l, c.mu7), (1, 0, 3, 1));
        assert_eq!((c.delta, c.epsilon), (c.r_l, c.s_l));
        assert!(PrimeContext::new(7).is_err());
        assert!(PrimeContext::new(9).is_err());
        assert!(PrimeContext::new(2).is_err());
    }

    #[test]
    fn nonresidues() {
        assert_eq!(smallest_nonresidue(3), 2);
        assert_eq!(smallest_nonresidue(7), 3);
        assert_eq!(smallest_nonresidue(41), 3);
    }
}
