//! Randomized checks of the prime-field polynomial toolbox.

use fricke7_core::ffpoly::{
    factorize, is_irreducible, poly_sqrt, resultant, resultant_in_x, FpBiPoly, FpPoly,
};
use proptest::prelude::*;

const PRIMES: &[u64] = &[3, 5, 11, 13, 101, 1009, 65537];

fn poly(max_deg: usize) -> impl Strategy<Value = FpPoly> {
    (prop::sample::select(PRIMES), prop::collection::vec(any::<u64>(), 2..=max_deg + 1)).prop_map(
        |(p, cs)| {
            let mut cs: Vec<u64> = cs.into_iter().map(|c| c % p).collect();
            let last = cs.len() - 1;
            if cs[last] == 0 {
                cs[last] = 1;
            }
            FpPoly::new(p, cs)
        },
    )
}

fn with_modulus(p: u64, cs: &[u64]) -> FpPoly {
    let mut cs: Vec<u64> = cs.iter().map(|c| c % p).collect();
    if cs.iter().all(|&c| c == 0) {
        cs.push(1);
    }
    FpPoly::new(p, cs)
}

/// `x^(p^k) mod g` by repeated `p`-th powers.
fn frob(g: &FpPoly, k: usize) -> FpPoly {
    let p = g.modulus();
    let mut acc = FpPoly::x(p).rem(g);
    for _ in 0..k {
        acc = acc.pow_mod(p as u128, g);
    }
    acc
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

/// Rabin's certificate, written out independently of the library test.
fn rabin(g: &FpPoly) -> bool {
    let d = g.deg();
    let x = FpPoly::x(g.modulus()).rem(g);
    if frob(g, d) != x {
        return false;
    }
    prime_divisors(d).into_iter().all(|q| {
        let h = &frob(g, d / q) - &x;
        g.gcd(&h).is_one()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, .. ProptestConfig::default() })]

    #[test]
    fn factor_round_trip(f in poly(64)) {
        let fz = factorize(&f).unwrap();
        prop_assert_eq!(fz.expand(f.modulus()), f);
    }

    #[test]
    fn factors_are_certified_irreducible(f in poly(40)) {
        for (g, _) in factorize(&f).unwrap().factors {
            prop_assert!(g.is_monic());
            prop_assert!(rabin(&g), "{} failed the certificate", g);
            prop_assert!(is_irreducible(&g));
        }
    }

    #[test]
    fn products_are_reducible(f in poly(12), cs in prop::collection::vec(any::<u64>(), 2..12)) {
        let g = with_modulus(f.modulus(), &cs);
        prop_assume!(g.deg() >= 1);
        prop_assert!(!is_irreducible(&(&f * &g)));
        prop_assert!(!rabin(&(&f * &g).monic()));
    }

    #[test]
    fn resultant_multiplicative(f in poly(10), a in prop::collection::vec(any::<u64>(), 1..10), b in prop::collection::vec(any::<u64>(), 1..10)) {
        let p = f.modulus();
        let g = with_modulus(p, &a);
        let h = with_modulus(p, &b);
        let lhs = resultant(&f, &(&g * &h)).unwrap();
        let rhs = fricke7_core::ffpoly::fp::mul_mod(resultant(&f, &g).unwrap(), resultant(&f, &h).unwrap(), p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_antisymmetry(f in poly(10), a in prop::collection::vec(any::<u64>(), 1..10)) {
        let p = f.modulus();
        let g = with_modulus(p, &a);
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        let sign_odd = (f.deg() * g.deg()) % 2 == 1;
        prop_assert_eq!(fg, if sign_odd { (p - gf) % p } else { gf });
    }

    #[test]
    fn sqrt_of_square(f in poly(64)) {
        let g = f.monic();
        prop_assert_eq!(poly_sqrt(&(&g * &g)).unwrap(), g);
    }

    // 101 takes the interpolation route, 13 the determinant route.
    #[test]
    fn resultant_in_x_matches_pointwise(
        p in prop::sample::select(vec![13u64, 101]),
        f in prop::collection::vec(any::<u64>(), 2..8),
        rows in prop::collection::vec(prop::collection::vec(any::<u64>(), 1..9), 3),
        ys in prop::collection::vec(any::<u64>(), 20),
    ) {
        let f = with_modulus(p, &f);
        prop_assume!(f.deg() >= 1);
        let mut coeffs: Vec<FpPoly> = rows.iter().map(|r| with_modulus(p, r)).collect();
        coeffs[2] = FpPoly::one(p);
        let g = FpBiPoly::new(p, coeffs);
        let r = resultant_in_x(&f, &g).unwrap();
        for y in ys.into_iter().map(|y| y % p) {
            prop_assert_eq!(r.eval(y), resultant(&f, &g.eval_y(y)).unwrap());
        }
    }
}
