//! The Hasse invariant of the Tate normal form `E7` over `F_l` and its factor counts.
//!
//! `hasse_poly` builds the whole polynomial. The counting routines never
//! factor it in one piece: since `J_l` is monic, `den^n J_l(num/den)` is
//! the product over the monic irreducible factors `psi` of `J_l` of
//! `den^deg(psi) psi(num/den)`, and these blocks (degree 24 or 48) are
//! pairwise coprime. `count_factors_direct` factors the full square-free
//! part instead and serves as a cross-check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::classnum::{class_number, field_discriminant};
use crate::constants::{self, f0_mod, fp, g_at_mod, j7_mod};
use crate::error::{Error, Result};
use crate::ffpoly::fp::{from_i64, inv_mod, mul_mod, sqrt_mod};
use crate::ffpoly::{distinct_irreducible_factors, squarefree_part, FpPoly, PrimeContext};
use crate::Verdict;

fn require_hasse_prime(ctx: &PrimeContext) -> Result<()> {
    if ctx.l < 5 {
        return Err(Error::BadPrime(ctx.l, "need l >= 5"));
    }
    Ok(())
}

/// `C(n, k) mod p` for `n < p`.
fn binom_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = mul_mod(num, (n - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

/// Coefficients `c_k` of `J_l(t) = sum_k c_k (t - 1728)^k`, `k = 0..=n_l`.
pub fn deuring_centered_coeffs(ctx: &PrimeContext) -> Vec<u64> {
    let (l, n, s) = (ctx.l, ctx.n_l, ctx.s_l as u64);
    let m432 = from_i64(-432, l);
    (0..=n)
        .map(|k| {
            let c = mul_mod(binom_mod(2 * n + s, 2 * k + s, l), binom_mod(2 * n - 2 * k, n - k, l), l);
            mul_mod(c, crate::ffpoly::fp::pow_mod(m432, (n - k) as u128, l), l)
        })
        .collect()
}

/// The polynomial `J_l(t)` whose roots are the supersingular `j != 0, 1728`.
pub fn deuring_j(ctx: &PrimeContext) -> Result<FpPoly> {
    require_hasse_prime(ctx)?;
    let l = ctx.l;
    let shift = FpPoly::linear(l, 1728 % l);
    let mut acc = FpPoly::zero(l);
    for &c in deuring_centered_coeffs(ctx).iter().rev() {
        acc = &(&acc * &shift) + &FpPoly::constant(l, c);
    }
    Ok(acc)
}

/// `den^deg(psi) psi(num/den)` for `psi` given by its coefficients.
fn homogenize(psi: &FpPoly, num: &FpPoly, den: &FpPoly) -> FpPoly {
    let p = num.modulus();
    let d = psi.deg();
    let mut acc = FpPoly::constant(p, psi.coeff(d));
    let mut den_pow = FpPoly::one(p);
    for k in (0..d).rev() {
        den_pow = &den_pow * den;
        acc = &(&acc * num) + &den_pow.scale(psi.coeff(k));
    }
    acc
}

/// `f_1728(x) mod l`.
pub fn f1728_mod(l: u64) -> FpPoly {
    fp(l, constants::F1728)
}

/// The Hasse invariant `H_{7,l}(x)` with `J_l(j_7(x))` cleared of denominators.
pub fn hasse_poly(ctx: &PrimeContext) -> Result<FpPoly> {
    require_hasse_prime(ctx)?;
    let l = ctx.l;
    let (num, den) = j7_mod(l);
    let a = &num - &den.scale(1728 % l);
    // Q_k = c_k den^(n-k) + a Q_{k+1}, so Q_0 = sum_k c_k a^k den^(n-k).
    let c = deuring_centered_coeffs(ctx);
    let n = ctx.n_l as usize;
    let mut den_pows = Vec::with_capacity(n + 1);
    den_pows.push(FpPoly::one(l));
    for i in 0..n {
        den_pows.push(&den_pows[i] * &den);
    }
    let mut q = FpPoly::constant(l, c[n]);
    for k in (0..n).rev() {
        q = &(&a * &q) + &den_pows[n - k].scale(c[k]);
    }
    let mut h = q;
    if ctx.r_l == 1 {
        h = &h * &f0_mod(l);
    }
    if ctx.s_l == 1 {
        h = &h * &f1728_mod(l);
    }
    Ok(h)
}

/// Expected degree `8r + 12s + 24 n_l`.
pub fn hasse_degree(ctx: &PrimeContext) -> usize {
    8 * ctx.r_l as usize + 12 * ctx.s_l as usize + 24 * ctx.n_l as usize
}

/// Distinct monic irreducible factors of `H_{7,l}`, sorted, computed block by block.
pub fn hasse_irreducible_factors(ctx: &PrimeContext) -> Result<Vec<FpPoly>> {
    require_hasse_prime(ctx)?;
    let l = ctx.l;
    let (num, den) = j7_mod(l);
    let mut blocks = Vec::new();
    if ctx.r_l == 1 {
        blocks.push(f0_mod(l));
    }
    if ctx.s_l == 1 {
        blocks.push(f1728_mod(l));
    }
    for psi in distinct_irreducible_factors(&deuring_j(ctx)?)? {
        blocks.push(homogenize(&psi, &num, &den));
    }
    let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
    for b in blocks {
        for g in distinct_irreducible_factors(&b)? {
            set.insert(g.into_coeffs());
        }
    }
    Ok(set.into_iter().map(|c| FpPoly::new(l, c)).collect())
}

/// Same factor set, from the square-free part of the assembled `hasse_poly`.
pub fn hasse_irreducible_factors_direct(ctx: &PrimeContext) -> Result<Vec<FpPoly>> {
    let h = hasse_poly(ctx)?;
    let mut v: Vec<FpPoly> = distinct_irreducible_factors(&squarefree_part(&h.monic()))?;
    v.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    Ok(v)
}

/// Supersingular `j` in `F_l`: roots of `J_l`, plus 0 when `r = 1` and 1728 when `s = 1`.
pub fn supersingular_in_fp(ctx: &PrimeContext) -> Result<Vec<u64>> {
    let l = ctx.l;
    let mut set: BTreeSet<u64> = deuring_j(ctx)?.distinct_roots().into_iter().collect();
    if ctx.r_l == 1 {
        set.insert(0);
    }
    if ctx.s_l == 1 {
        set.insert(1728 % l);
    }
    Ok(set.into_iter().collect())
}

/// `B(a, b)` from the quadratic-factor condition.
pub fn b_form(a: u64, b: u64, l: u64) -> u64 {
    let t = |i: u32, j: u32, c: i64| {
        mul_mod(
            from_i64(c, l),
            mul_mod(crate::ffpoly::fp::pow_mod(a, i as u128, l), crate::ffpoly::fp::pow_mod(b, j as u128, l), l),
            l,
        )
    };
    constants::B_TERMS
        .iter()
        .fold(0u64, |acc, &(i, j, c)| crate::ffpoly::fp::add_mod(acc, t(i, j, c), l))
}

/// For a monic sextic, the `t` with `f7(x, t)` equal to it, if one exists.
pub fn sextic_f7_parameter(g: &FpPoly) -> Option<u64> {
    let l = g.modulus();
    if g.deg() != 6 || !g.is_monic() {
        return None;
    }
    // coefficient of x^5 in f7(x, t) is -(3 + t)
    let t = crate::ffpoly::fp::sub_mod(crate::ffpoly::fp::neg_mod(g.coeff(5), l), 3 % l, l);
    (constants::f7_at_residue(t, l) == *g).then_some(t)
}

/// For a monic cubic of the shape `x^3 + a x^2 - (a + 3) x + 1`, the value `a`.
pub fn cubic_g_parameter(g: &FpPoly) -> Option<u64> {
    let l = g.modulus();
    if g.deg() != 3 || !g.is_monic() || g.coeff(0) != 1 % l {
        return None;
    }
    let a = g.coeff(2);
    let want = crate::ffpoly::fp::neg_mod(crate::ffpoly::fp::add_mod(a, 3 % l, l), l);
    (g.coeff(1) == want).then_some(a)
}

/// Predicted values next to the measured counts.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorCountReport {
    pub l: u64,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n6: usize,
    /// `(degree, number of distinct irreducible factors of that degree)`.
    pub degree_histogram: Vec<(usize, usize)>,
    /// Number of supersingular `j` in `F_l`.
    pub supersingular_fp: usize,
    pub h_l: u64,
    pub h_7l: u64,
    pub classification: Verdict,
    pub formula_n1: Option<u64>,
    pub formula_n3: Option<u64>,
    pub formula_n6: Option<Ratio<i64>>,
    pub formula_n2: Option<Ratio<i64>>,
    pub theorem_a: Verdict,
    pub conjecture2: Verdict,
    pub conjecture3: Verdict,
}

fn histogram(factors: &[FpPoly]) -> Vec<(usize, usize)> {
    let mut m: BTreeMap<usize, usize> = BTreeMap::new();
    for g in factors {
        *m.entry(g.deg()).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Degree rules for the irreducible factors by `l mod 7`.
pub fn classification_verdict(l: u64, factors: &[FpPoly]) -> Verdict {
    let quad_zero = fp(l, constants::QUAD_ZERO);
    let bad: Vec<String> = factors
        .iter()
        .filter(|g| {
            let d = g.deg();
            match l % 7 {
                1 => d != 2,
                6 => !(d == 1 || d == 2),
                2 | 4 => !(d == 6 || (d == 2 && **g == quad_zero)),
                3 | 5 => !(d == 3 || d == 6 || (d == 2 && **g == quad_zero)),
                _ => true,
            }
        })
        .map(|g| format!("{g:?}"))
        .collect();
    Verdict::check(bad.is_empty(), || {
        format!("l = {l} (= {} mod 7) has disallowed factors: {}", l % 7, bad.join(", "))
    })
}

/// Class-number predictions for `N1` (`l = 6 mod 7`) or `N3` (`l = 3, 5 mod 7`).
pub fn theorem_a_prediction(l: u64) -> Result<Option<u64>> {
    if !matches!(l % 7, 3 | 5 | 6) {
        return Ok(None);
    }
    let h = class_number(&field_discriminant(l)?);
    let base = if l % 4 == 1 {
        h
    } else {
        let two = crate::classnum::kronecker(2, l as i64) as i64;
        (3 - two) as u64 * h
    };
    Ok(Some(if l % 7 == 6 { 3 * base } else { base }))
}

fn mod8_class_weight(l: u64) -> Ratio<i64> {
    match l % 8 {
        1 => Ratio::new(1, 2),
        5 => Ratio::from_integer(1),
        _ => Ratio::new(1, 4),
    }
}

/// `N6` for `l = 2, 3, 4, 5 mod 7`, `l > 7`.
pub fn conjecture2_prediction(l: u64, h_7l: u64) -> Option<Ratio<i64>> {
    if l <= 7 || !matches!(l % 7, 2..=5) {
        return None;
    }
    let k3 = crate::classnum::kronecker(-3, l as i64) as i64;
    let shift = if matches!(l % 7, 2 | 4) { 1 - k3 } else { 3 - k3 };
    Some(mod8_class_weight(l) * h_7l as i64 - Ratio::new(shift, 2))
}

/// `N2` for `l = 1, 6 mod 7`, `l > 7`.
pub fn conjecture3_prediction(l: u64, h_7l: u64) -> Option<Ratio<i64>> {
    if l <= 7 || !matches!(l % 7, 1 | 6) {
        return None;
    }
    let k3 = crate::classnum::kronecker(-3, l as i64) as i64;
    let shift = if l % 7 == 1 { 1 - k3 } else { 4 - k3 };
    Some(mod8_class_weight(l) * 3 * h_7l as i64 - shift)
}

fn counts_from(ctx: &PrimeContext, factors: &[FpPoly]) -> Result<FactorCountReport> {
    let l = ctx.l;
    let n1 = factors.iter().filter(|g| g.deg() == 1).count();
    let n3 = factors.iter().filter(|g| g.deg() == 3).count();
    let n6 = factors.iter().filter(|g| sextic_f7_parameter(g).is_some()).count();
    let n2 = factors
        .iter()
        .filter(|g| g.deg() == 2 && b_form(g.coeff(1), g.coeff(0), l) == 0)
        .count();
    let supersingular_fp = supersingular_in_fp(ctx)?.len();
    let h_l = class_number(&field_discriminant(l)?);
    let h_7l = class_number(&field_discriminant(7 * l)?);
    let formula_n1 = if l % 7 == 6 { theorem_a_prediction(l)? } else { None };
    let formula_n3 = if matches!(l % 7, 3 | 5) { theorem_a_prediction(l)? } else { None };
    let formula_n6 = conjecture2_prediction(l, h_7l);
    let formula_n2 = conjecture3_prediction(l, h_7l);

    let theorem_a = match (formula_n1, formula_n3) {
        (Some(f), _) => Verdict::check(n1 as u64 == f && n1 == 6 * supersingular_fp, || {
            format!("N1 = {n1}, formula {f}, 6 L(l) = {}", 6 * supersingular_fp)
        }),
        (_, Some(f)) => Verdict::check(n3 as u64 == f && n3 == 2 * supersingular_fp, || {
            format!("N3 = {n3}, formula {f}, 2 L(l) = {}", 2 * supersingular_fp)
        }),
        _ => Verdict::Skipped(format!("l = {} mod 7 has no linear or cubic count", l % 7)),
    };
    let conj = |pred: Option<Ratio<i64>>, measured: usize, name: &str, classes: &str| match pred {
        Some(f) => Verdict::check(f == Ratio::from_integer(measured as i64), || {
            format!("{name} = {measured}, formula {f} (h(-7l) = {h_7l})")
        }),
        None => Verdict::Skipped(format!("needs l > 7 and l = {classes} mod 7")),
    };
    let conjecture2 = conj(formula_n6, n6, "N6", "2, 3, 4, 5");
    let conjecture3 = conj(formula_n2, n2, "N2", "1, 6");
    Ok(FactorCountReport {
        l,
        n1,
        n2,
        n3,
        n6,
        degree_histogram: histogram(factors),
        supersingular_fp,
        h_l,
        h_7l,
        classification: classification_verdict(l, factors),
        formula_n1,
        formula_n3,
        formula_n6,
        formula_n2,
        theorem_a,
        conjecture2,
        conjecture3,
    })
}

/// Counts `N1, N2, N3, N6` and evaluates every applicable prediction.
pub fn count_factors(ctx: &PrimeContext) -> Result<FactorCountReport> {
    let factors = hasse_irreducible_factors(ctx)?;
    counts_from(ctx, &factors)
}

/// `count_factors` computed from the assembled polynomial.
pub fn count_factors_direct(ctx: &PrimeContext) -> Result<FactorCountReport> {
    let factors = hasse_irreducible_factors_direct(ctx)?;
    counts_from(ctx, &factors)
}

pub fn verify_theorem1(ctx: &PrimeContext) -> Result<Verdict> {
    Ok(classification_verdict(ctx.l, &hasse_irreducible_factors(ctx)?))
}

/// Class-number counts for every admissible `l`, and the two conjectural counts when `l > 7`.
pub fn verify_conjectures(ctx: &PrimeContext) -> Result<FactorCountReport> {
    count_factors(ctx)
}

fn count_by_degree(f: &FpPoly) -> Result<BTreeMap<usize, usize>> {
    let mut m = BTreeMap::new();
    for g in distinct_irreducible_factors(&squarefree_part(f))? {
        *m.entry(g.deg()).or_default() += 1;
    }
    Ok(m)
}

/// Linear-factor counts (`l = 6 mod 7`) or cubic counts (`l = 3, 5 mod 7`)
/// of `f0` and `f1728`, and the parity split of `f1728 = C_+ C_-` over `F_l`.
pub fn verify_props_2_4(ctx: &PrimeContext) -> Result<Verdict> {
    require_hasse_prime(ctx)?;
    let l = ctx.l;
    let (want_deg, want_count) = match l % 7 {
        6 if l > 7 => (1usize, 6usize),
        3 | 5 => (3, 2),
        _ => return Ok(Verdict::Skipped(format!("l = {} mod 7 is outside the hypotheses", l % 7))),
    };
    let use_f0 = l % 3 == 2;
    let use_f1728 = l % 4 == 3;
    if !use_f0 && !use_f1728 {
        return Ok(Verdict::Skipped("needs l = 2 mod 3 or l = 3 mod 4".into()));
    }
    let mut bad = Vec::new();
    let mut probe = |name: &str, f: &FpPoly| -> Result<()> {
        let m = count_by_degree(f)?;
        let got = m.get(&want_deg).copied().unwrap_or(0);
        if got != want_count {
            bad.push(format!("{name}: {got} factors of degree {want_deg}, expected {want_count} ({m:?})"));
        }
        Ok(())
    };
    if use_f0 {
        probe("f0", &f0_mod(l))?;
    }
    if use_f1728 {
        probe("f1728", &f1728_mod(l))?;
        let r7 = sqrt_mod(7 % l, l).ok_or(Error::Structural(format!("7 is not a square mod {l}")))?;
        let x = FpPoly::x(l);
        let xm1 = FpPoly::linear(l, 1);
        let cross = &(&(&x * &xm1) * &fp(l, constants::B_SPLIT)).scale(mul_mod(2, r7, l));
        let a = fp(l, constants::A_SPLIT);
        let c_plus = &a + cross;
        let c_minus = &a - cross;
        let mut shapes: Vec<Vec<(usize, usize)>> =
            [c_plus, c_minus].iter().map(|c| count_by_degree(c).map(|m| m.into_iter().collect())).collect::<Result<_>>()?;
        shapes.sort();
        let want: Vec<Vec<(usize, usize)>> = if want_deg == 1 {
            alloc::vec![alloc::vec![(1, 6)], alloc::vec![(2, 3)]]
        } else {
            alloc::vec![alloc::vec![(3, 2)], alloc::vec![(6, 1)]]
        };
        if shapes != want {
            bad.push(format!("C+/C- factor shapes {shapes:?}, expected {want:?}"));
        }
    }
    Ok(Verdict::check(bad.is_empty(), || bad.join("; ")))
}

/// `G(x, j)` at each supersingular `j != 0, 1728` in `F_l`.
pub fn verify_theorem7(ctx: &PrimeContext) -> Result<Verdict> {
    require_hasse_prime(ctx)?;
    let l = ctx.l;
    let (want_deg, want_count) = match l % 7 {
        6 => (1usize, 6usize),
        3 | 5 => (3, 2),
        _ => return Ok(Verdict::Skipped(format!("l = {} mod 7 is outside the hypotheses", l % 7))),
    };
    let js = deuring_j(ctx)?.distinct_roots();
    let js: Vec<u64> = js.into_iter().filter(|&j| j != 0 && j != 1728 % l).collect();
    if js.is_empty() {
        return Ok(Verdict::PassVacuous);
    }
    let mut bad = Vec::new();
    for j in js {
        let m = count_by_degree(&g_at_mod(j, l))?;
        let got = m.get(&want_deg).copied().unwrap_or(0);
        if got != want_count {
            bad.push(format!("j = {j}: {got} factors of degree {want_deg} ({m:?})"));
        }
    }
    Ok(Verdict::check(bad.is_empty(), || bad.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(l: u64) -> PrimeContext {
        PrimeContext::new(l).unwrap()
    }

    #[test]
    fn deuring_small() {
        assert_eq!(deuring_j(&ctx(5)).unwrap(), FpPoly::one(5));
        assert_eq!(deuring_j(&ctx(11)).unwrap(), FpPoly::one(11));
        assert_eq!(deuring_j(&ctx(13)).unwrap(), FpPoly::from_i64s(13, &[8, 1]));
        assert!(deuring_j(&PrimeContext::new(3).unwrap()).is_err());
    }

    #[test]
    fn hasse_small() {
        assert_eq!(hasse_poly(&ctx(5)).unwrap(), f0_mod(5));
        assert_eq!(hasse_poly(&ctx(11)).unwrap().deg(), 20);
        let h13 = hasse_poly(&ctx(13)).unwrap();
        let (num, den) = j7_mod(13);
        assert_eq!(h13, &num + &den.scale(8));
        for l in [5u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83] {
            assert_eq!(hasse_poly(&ctx(l)).unwrap().deg(), hasse_degree(&ctx(l)), "l = {l}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_factors(&ctx(5)).unwrap().n3, 2);
        let r13 = count_factors(&ctx(13)).unwrap();
        assert_eq!(r13.n1, 6);
        assert!(r13.theorem_a.is_pass());
        let r83 = count_factors(&ctx(83)).unwrap();
        assert_eq!(r83.n1, 36);
        let r41 = count_factors(&ctx(41)).unwrap();
        assert_eq!((r41.n1, r41.n2, r41.h_7l), (24, 16, 14));
        assert!(r41.conjecture3.is_pass());
    }

    #[test]
    fn block_route_matches_direct_route() {
        for l in [5u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 97, 101] {
            let c = ctx(l);
            assert_eq!(
                hasse_irreducible_factors(&c).unwrap(),
                hasse_irreducible_factors_direct(&c).unwrap(),
                "l = {l}"
            );
        }
    }

    #[test]
    fn classification_examples() {
        assert!(verify_theorem1(&ctx(29)).unwrap().is_pass());
        assert!(verify_theorem1(&ctx(13)).unwrap().is_pass());
        assert!(verify_theorem1(&ctx(5)).unwrap().is_pass());
    }

    #[test]
    fn props_and_theorem7() {
        assert!(verify_props_2_4(&ctx(41)).unwrap().is_pass());
        assert!(matches!(verify_props_2_4(&ctx(13)).unwrap(), Verdict::Skipped(_)));
        assert!(verify_props_2_4(&ctx(5)).unwrap().is_pass());
        assert!(matches!(verify_props_2_4(&ctx(11)).unwrap(), Verdict::Skipped(_)));
        assert!(verify_props_2_4(&ctx(83)).unwrap().is_pass());
        assert!(verify_props_2_4(&ctx(19)).unwrap().is_pass());
        assert!(matches!(verify_props_2_4(&ctx(29)).unwrap(), Verdict::Skipped(_)));
        assert!(verify_theorem7(&ctx(13)).unwrap().is_pass());
        assert_eq!(verify_theorem7(&ctx(5)).unwrap(), Verdict::PassVacuous);
        assert!(verify_theorem7(&ctx(83)).unwrap().is_pass());
    }

    #[test]
    fn shape_parameters() {
        let f = constants::f7_at_mod(4, 11);
        assert_eq!(sextic_f7_parameter(&f), Some(4));
        let g = FpPoly::from_i64s(11, &[1, -5, 2, 1]);
        assert_eq!(cubic_g_parameter(&g), Some(2));
        assert_eq!(b_form(12, 1, 13), 0);
    }
}
