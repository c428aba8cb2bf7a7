use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::fp::{inv_mod, is_prime, mul_mod};
use super::poly::FpPoly;
use crate::error::{Error, Result};

/// `unit * prod(factor^mult)` with monic irreducible, pairwise distinct factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factorization {
    pub fn modulus(&self) -> Option<u64> {
        self.factors.first().map(|(f, _)| f.modulus())
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self, modulus: u64) -> FpPoly {
        let mut acc = FpPoly::constant(modulus, self.unit);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u64);
        }
        acc
    }

    /// Number of distinct irreducible factors of each degree, as `(degree, count)` ascending.
    pub fn degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (f, _) in &self.factors {
            match out.iter_mut().find(|(d, _)| *d == f.deg()) {
                Some(e) => e.1 += 1,
                None => out.push((f.deg(), 1)),
            }
        }
        out.sort_unstable();
        out
    }

    /// Distinct irreducible factors of the given degree.
    pub fn of_degree(&self, d: usize) -> impl Iterator<Item = &FpPoly> {
        self.factors.iter().filter(move |(f, _)| f.deg() == d).map(|(f, _)| f)
    }
}

fn sort_key(f: &FpPoly) -> (usize, &[u64]) {
    (f.deg(), f.coeffs())
}

/// Square-free decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i`, each `g_i` square-free, monic and nonconstant.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let f = f.monic();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fd = f.derivative();
    let mut c = f.gcd(&fd);
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power: c(x) = d(x^p) with d(x)^p = c(x) over F_p.
        let root = FpPoly::new(p, c.coeffs().iter().step_by(p as usize).copied().collect());
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part(f: &FpPoly) -> FpPoly {
    let p = f.modulus();
    squarefree_decomposition(f)
        .iter()
        .fold(FpPoly::one(p), |acc, (g, _)| &acc * g)
}

/// Distinct-degree factorization of a monic square-free polynomial.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0usize;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn seed_for(f: &FpPoly) -> u64 {
    // FNV-1a over the modulus and the coefficients.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in core::iter::once(f.modulus()).chain(f.coeffs().iter().copied()) {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64, below: usize) -> FpPoly {
    let zone = u64::MAX - u64::MAX % p;
    let v = (0..below)
        .map(|_| loop {
            let r = rng.next_u64();
            if r < zone {
                break r % p;
            }
        })
        .collect();
    FpPoly::new(p, v)
}

/// Splits a monic square-free product of irreducibles all of degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let mut out = Vec::new();
    split_equal_degree(f, d, &mut rng, &mut out);
    out
}

fn split_equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.deg();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    let one = FpPoly::one(p);
    loop {
        let a = random_poly(rng, p, n);
        if a.is_constant() {
            continue;
        }
        // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
        let mut norm = a.clone();
        let mut conj = a.clone();
        for _ in 1..d {
            conj = conj.pow_mod(p as u128, f);
            norm = norm.mul_mod(&conj, f);
        }
        let b = norm.pow_mod(((p - 1) / 2) as u128, f);
        let g = f.gcd(&(&b - &one));
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_exact(&g).expect("gcd divides");
            split_equal_degree(&g, d, rng, out);
            split_equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Complete factorization over `F_l` into monic irreducibles.
///
/// Factors are sorted by degree, then by coefficient sequence (low degree first).
pub fn factorize(f: &FpPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.modulus();
    if p < 3 || !is_prime(p) {
        return Err(Error::BadPrime(p, "factorization needs an odd prime modulus"));
    }
    let unit = f.leading_coeff();
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (g, m) in squarefree_decomposition(f) {
        for (block, d) in distinct_degree(&g) {
            for irr in equal_degree(&block, d) {
                factors.push((irr, m));
            }
        }
    }
    factors.sort_by(|a, b| sort_key(&a.0).cmp(&sort_key(&b.0)));
    Ok(Factorization { unit, factors })
}

/// Distinct monic irreducible factors of a polynomial, without multiplicities.
pub fn distinct_irreducible_factors(f: &FpPoly) -> Result<Vec<FpPoly>> {
    Ok(factorize(f)?.factors.into_iter().map(|(g, _)| g).collect())
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `x^(l^n) = x mod f`, and `gcd(x^(l^(n/q)) - x, f) = 1` for primes `q | n`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let p = f.modulus();
    let f = f.monic();
    let x = FpPoly::x(p);
    for q in prime_divisors(n) {
        let h = f.frobenius_power(&x, (n / q) as u32);
        if !f.gcd(&(&h - &x)).is_one() {
            return false;
        }
    }
    f.frobenius_power(&x, n as u32) == x.rem(&f)
}

/// Roots of `f` in `F_l` counted with multiplicity, ascending.
pub fn roots_with_multiplicity(f: &FpPoly) -> Result<Vec<u64>> {
    let fac = factorize(f)?;
    let p = f.modulus();
    let mut out = Vec::new();
    for (g, m) in fac.factors.iter().filter(|(g, _)| g.deg() == 1) {
        let root = mul_mod(p - g.coeff(0), inv_mod(g.coeff(1), p), p);
        out.extend(core::iter::repeat_n(root, *m as usize));
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_squared_plus_one_mod_5() {
        let f = FpPoly::from_i64s(5, &[1, 0, 1]);
        let fac = factorize(&f).unwrap();
        assert_eq!(fac.unit, 1);
        assert_eq!(
            fac.factors,
            [(FpPoly::from_i64s(5, &[2, 1]), 1), (FpPoly::from_i64s(5, &[3, 1]), 1)]
        );
    }

    #[test]
    fn f7_at_minus_one_is_square_of_cubic() {
        // f7(x, -1) = x^6 - 2x^5 - 3x^4 + 6x^3 + 2x^2 - 4x + 1
        // The cubic stays irreducible mod 5 and splits mod 13 (13 = -1 mod 7).
        let f = FpPoly::from_i64s(5, &[1, -4, 2, 6, -3, -2, 1]);
        let fac = factorize(&f).unwrap();
        assert_eq!(fac.factors, [(FpPoly::from_i64s(5, &[1, -2, -1, 1]), 2)]);
        let fac = factorize(&FpPoly::from_i64s(13, &[1, -4, 2, 6, -3, -2, 1])).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 2));
    }

    #[test]
    fn fermat_polynomial_splits() {
        for p in [3u64, 5, 11, 31] {
            let f = &FpPoly::monomial(p, 1, p as usize) - &FpPoly::x(p);
            let fac = factorize(&f).unwrap();
            assert_eq!(fac.factors.len(), p as usize);
            for (a, (g, m)) in fac.factors.iter().enumerate() {
                assert_eq!(*m, 1);
                assert_eq!(*g, FpPoly::linear(p, (p - a as u64) % p));
            }
        }
    }

    #[test]
    fn pth_power_inputs() {
        let p = 5;
        let g = FpPoly::from_i64s(p, &[2, 0, 1]);
        let f = &g.pow(10) * &FpPoly::from_i64s(p, &[1, 1]).pow(3);
        let fac = factorize(&f).unwrap();
        assert_eq!(fac.expand(p), f);
        assert!(fac.factors.iter().any(|(h, m)| *h == g && *m == 10));
    }

    #[test]
    fn rabin_test() {
        assert!(is_irreducible(&FpPoly::from_i64s(5, &[2, 0, 1])));
        assert!(!is_irreducible(&FpPoly::from_i64s(5, &[1, 0, 1])));
        // x^4 - 2 = (x^2 - 3)(x^2 + 3) mod 7
        assert!(!is_irreducible(&FpPoly::from_i64s(7, &[-2, 0, 0, 0, 1])));
        assert!(is_irreducible(&FpPoly::from_i64s(7, &[-3, 0, 1])));
    }
}
