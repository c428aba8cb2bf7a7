//! Independent oracles: class numbers from the analytic formula, the cubic
//! field against its matrix representation, and mutated constants.

use fricke7_core::classnum::{class_number, field_discriminant, is_squarefree, kronecker};
use fricke7_core::constants::{self_check, PaperPolynomials};
use fricke7_core::exactalg::mpoly::ZxyPoly;
use fricke7_core::exactalg::{verify_identity, NumRingElem, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

/// `h(D) = w sqrt|D| L(1, chi_D) / (2 pi)` with the series cut at `N`.
///
/// Partial sums of `chi_D` are bounded by `sqrt|D| log|D|`, so by partial
/// summation the tail after `N` terms is at most `2 sqrt|D| log|D| / N`.
/// `N` is chosen so the resulting error in `h` is below 1/4.
fn analytic_class_number(d: i64) -> u64 {
    let a = d.unsigned_abs() as f64;
    let w = match d {
        -3 => 6.0,
        -4 => 4.0,
        _ => 2.0,
    };
    let scale = w * a.sqrt() / (2.0 * std::f64::consts::PI);
    let tail_numer = 2.0 * a.sqrt() * a.ln();
    let n = (4.0 * scale * tail_numer).ceil() as i64 + 1;
    let mut l = 0.0f64;
    for k in 1..=n {
        let chi = kronecker(d, k);
        if chi != 0 {
            l += f64::from(chi) / k as f64;
        }
    }
    let est = scale * l;
    let h = est.round();
    assert!((est - h).abs() < 0.25 + 1e-9, "estimate {est} for D = {d} is not within the bound");
    h as u64
}

#[test]
fn class_numbers_match_analytic_formula() {
    let mut checked = 0;
    for m in 1..=500u64 {
        if !is_squarefree(m) {
            continue;
        }
        let disc = field_discriminant(m).unwrap();
        assert_eq!(class_number(&disc), analytic_class_number(disc.d), "m = {m}");
        checked += 1;
    }
    assert_eq!(checked, 306);
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

type Mat = [[BigRational; 3]; 3];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| (0..3).fold(<BigRational as Zero>::zero(), |s, k| s + &a[i][k] * &b[k][j]))
    })
}

/// Multiplication by `r` on `1, r, r^2`, written from `r^3 = 8r^2 - 5r - 1`.
fn companion() -> Mat {
    [[q(0), q(0), q(-1)], [q(1), q(0), q(-5)], [q(0), q(1), q(8)]]
}

fn identity() -> Mat {
    core::array::from_fn(|i| core::array::from_fn(|j| if i == j { <BigRational as One>::one() } else { <BigRational as Zero>::zero() }))
}

fn as_matrix(e: &NumRingElem) -> Mat {
    let c = companion();
    let c2 = mat_mul(&c, &c);
    let i = identity();
    core::array::from_fn(|r| core::array::from_fn(|s| &e.c[0] * &i[r][s] + &e.c[1] * &c[r][s] + &e.c[2] * &c2[r][s]))
}

#[test]
fn cubic_field_products_match_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e);
    for _ in 0..20 {
        let mut prod = NumRingElem::one();
        let mut mat = identity();
        for _ in 0..50 {
            let e = NumRingElem::new(
                BigRational::new(BigInt::from(small(&mut rng, -9, 9)), BigInt::from(small(&mut rng, 1, 4))),
                q(small(&mut rng, -9, 9)),
                q(small(&mut rng, -9, 9)),
            );
            prod = prod.mul(&e);
            mat = mat_mul(&mat, &as_matrix(&e));
        }
        let col: [BigRational; 3] = core::array::from_fn(|i| mat[i][0].clone());
        assert_eq!(prod.c, col);
    }
}

#[test]
fn sign_flip_in_modular_relation_is_caught() {
    let pp = PaperPolynomials::new();
    assert!(verify_identity("RES_G_F7_R7", &pp).unwrap().verdict.is_pass());
    let mut bad = pp.clone();
    bad.r7 = pp.r7.substitute(0, &ZxyPoly::var(0).neg());
    let out = verify_identity("RES_G_F7_R7", &bad).unwrap();
    assert!(out.verdict.is_fail());
    assert!(out.residuals.iter().any(|r| r.difference.is_some()));
}

#[test]
fn corrupted_constants_fail_self_check() {
    let pp = PaperPolynomials::new();
    assert!(self_check(&pp).is_pass());
    let mut bad = pp.clone();
    bad.a_poly = bad.a_poly.add(&ZxyPoly::one());
    assert!(self_check(&bad).is_fail());
    let mut bad = pp;
    bad.f7 = bad.f7.add(&ZxyPoly::var(1));
    assert!(self_check(&bad).is_fail());
}
