//! Supersingular polynomials for `SL_2(Z)` and for the Fricke group of level 7.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::classnum::{kronecker, nakaya_class_term};
use crate::constants::{fp, r7_mod, CORR_QUARTIC, R7_B_QUAD};
use crate::error::{Error, Result};
use crate::ffpoly::fp2::split_completely;
use crate::ffpoly::{
    distinct_irreducible_factors, poly_sqrt, resultant_in_x, roots_in_fp2, squarefree_part, Fp2, Fp2Elem, Fp2Poly,
    FpPoly, PrimeContext,
};
use crate::hasse7::{count_factors, deuring_j, FactorCountReport};
use crate::Verdict;

fn require_prime(ctx: &PrimeContext) -> Result<()> {
    if ctx.l < 5 {
        return Err(Error::BadPrime(ctx.l, "need p >= 5"));
    }
    Ok(())
}

/// `ss_p(X) = X^r (X - 1728)^s J_p(X)`, monic and square-free.
pub fn ss_poly(ctx: &PrimeContext) -> Result<FpPoly> {
    require_prime(ctx)?;
    let p = ctx.l;
    let mut f = deuring_j(ctx)?;
    if ctx.r_l == 1 {
        f = &f * &FpPoly::x(p);
    }
    if ctx.s_l == 1 {
        f = &f * &FpPoly::linear(p, 1728 % p);
    }
    Ok(f.monic())
}

/// Field size above which `Res_X(ss_p, R7)` is interpolated from point values.
pub fn interpolation_bound(ss: &FpPoly) -> u64 {
    8 * ss.deg() as u64 + 16
}

/// How `ss_p^(7*)` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Resultant,
    BruteForce,
}

impl Route {
    pub fn label(&self) -> &'static str {
        match self {
            Route::Resultant => "resultant",
            Route::BruteForce => "bruteforce",
        }
    }
}

/// `ss_p^(7*)` from the resultant congruence: multiply `Res_X(ss_p, R7)` by
/// `((Y + 1)(Y - 27))^mu`, divide out the correction factors and take the
/// square root.
///
/// Below [`interpolation_bound`] the resultant comes from a fraction-free
/// determinant over `F_p[Y]`, which is exact but slower.
pub fn ss7star_resultant(ctx: &PrimeContext) -> Result<FpPoly> {
    require_prime(ctx)?;
    let p = ctx.l;
    let ss = ss_poly(ctx)?;
    let mut prod = resultant_in_x(&ss, &r7_mod(p))?;
    if ctx.mu7 == 1 {
        // linear(p, a) is Y - a
        prod = &(&prod * &FpPoly::linear(p, p - 1)) * &FpPoly::linear(p, 27 % p);
    }
    let mut divisor = fp(p, R7_B_QUAD).pow(2 * ctx.delta as u64);
    if ctx.epsilon == 1 {
        divisor = &divisor * &fp(p, CORR_QUARTIC);
    }
    let quotient = prod.div_exact(&divisor).map_err(|_| {
        Error::InexactDivision(format!("correction factors do not divide the corrected resultant at p = {p}"))
    })?;
    let root = poly_sqrt(&quotient)?.monic();
    if squarefree_part(&root) != root {
        return Err(Error::Structural(format!("ss7star is not square-free at p = {p}")));
    }
    Ok(root)
}

fn r7_at(field: Fp2, j: Fp2Elem, a: &FpPoly, b: &FpPoly) -> Fp2Poly {
    // R7(j, Y) = j^2 - j a(Y) + b(Y)
    let n = a.coeffs().len().max(b.coeffs().len()).max(1);
    let j2 = field.mul(j, j);
    let coeffs = (0..n)
        .map(|k| {
            let t = field.sub(field.from_base(b.coeff(k)), field.mul(j, field.from_base(a.coeff(k))));
            if k == 0 {
                field.add(t, j2)
            } else {
                t
            }
        })
        .collect();
    Fp2Poly::new(field, coeffs)
}

/// `ss_p^(7*)` by enumerating supersingular `j` in `F_{p^2}` and the roots of `R7(j, Y)`.
pub fn ss7star_bruteforce(ctx: &PrimeContext) -> Result<FpPoly> {
    require_prime(ctx)?;
    let p = ctx.l;
    let field = Fp2::new(p);
    let r7 = r7_mod(p);
    let b = r7.x_coeffs()[0].clone();
    let a = -&r7.x_coeffs()[1];
    let js: BTreeSet<Fp2Elem> = roots_in_fp2(&ss_poly(ctx)?)?.into_iter().collect();
    let mut values: BTreeSet<Fp2Elem> = BTreeSet::new();
    for j in js {
        values.extend(split_completely(&r7_at(field, j, &a, &b))?);
    }
    let mut prod = Fp2Poly::new(field, vec![field.one()]);
    for y in &values {
        prod = prod.mul(&Fp2Poly::new(field, vec![field.neg(*y), field.one()]));
    }
    if let Some(c) = prod.coeffs().iter().find(|c| !c.in_prime_field()) {
        return Err(Error::Structural(format!("ss7star has coefficient {c} outside F_{p} at p = {p}")));
    }
    Ok(FpPoly::new(p, prod.coeffs().iter().map(|c| c.a).collect()))
}

/// Counts and the class-number prediction for one prime.
#[derive(Clone, Debug, PartialEq)]
pub struct SS7StarReport {
    pub p: u64,
    pub ss: FpPoly,
    pub ss7star: FpPoly,
    pub l_count: usize,
    pub l7star: usize,
    pub a_p: Ratio<i64>,
    pub h_7p: u64,
    pub nakaya_predicted: Ratio<i64>,
    pub route: Route,
    /// `Some(equal)` when both routes ran.
    pub oracle_match: Option<bool>,
    pub nakaya: Verdict,
}

/// `1/2 (1 + (-p/7)) L(p) + a_p h(-7p)`.
pub fn nakaya_prediction(p: u64, l_count: usize) -> Result<(Ratio<i64>, Ratio<i64>, u64)> {
    let (a_p, h) = nakaya_class_term(p)?;
    let chi = kronecker(-(p as i64), 7) as i64;
    let pred = Ratio::new(1 + chi, 2) * l_count as i64 + a_p * h as i64;
    Ok((pred, a_p, h))
}

/// Computes `ss_p^(7*)` by the authoritative route for `p` and compares with
/// the other route when `check_oracle` is set.
pub fn counts_and_nakaya(ctx: &PrimeContext, check_oracle: bool) -> Result<SS7StarReport> {
    require_prime(ctx)?;
    let p = ctx.l;
    let ss = ss_poly(ctx)?;
    let big = p > interpolation_bound(&ss);
    let (route, ss7star, oracle_match) = if big {
        let r = ss7star_resultant(ctx)?;
        let m = if check_oracle { Some(ss7star_bruteforce(ctx)? == r) } else { None };
        (Route::Resultant, r, m)
    } else {
        let b = ss7star_bruteforce(ctx)?;
        let m = if check_oracle { Some(ss7star_resultant(ctx)? == b) } else { None };
        (Route::BruteForce, b, m)
    };
    let l_count = ss.distinct_roots().len();
    let l7star = ss7star.distinct_roots().len();
    let (pred, a_p, h_7p) = nakaya_prediction(p, l_count)?;
    let mut nakaya = Verdict::check(pred == Ratio::from_integer(l7star as i64), || {
        format!("L7*(p) = {l7star}, predicted {pred} (L = {l_count}, a_p = {a_p}, h(-7p) = {h_7p})")
    });
    if oracle_match == Some(false) {
        nakaya = Verdict::Fail(format!("resultant and brute-force routes disagree at p = {p}"));
    }
    Ok(SS7StarReport { p, ss, ss7star, l_count, l7star, a_p, h_7p, nakaya_predicted: pred, route, oracle_match, nakaya })
}

/// `L^(7*)(p)` recomputed from the measured factor counts by the branch for `p mod 7`.
pub fn section3_prediction(p: u64, counts: &FactorCountReport) -> Ratio<i64> {
    let r = Ratio::new(1 - kronecker(-3, p as i64) as i64, 2);
    let n = |v: usize| Ratio::from_integer(v as i64);
    match p % 7 {
        2 | 4 => n(counts.n6) + r,
        3 | 5 => (n(counts.n3) - 2) / 2 + 2 + n(counts.n6) + r,
        1 => (n(counts.n2) - r) / 3 + r,
        _ => (n(counts.n1) - 6) / 6 + 2 + (n(counts.n2) - r) / 3 + r,
    }
}

/// Compares the branch formula with the direct root count of `ss_p^(7*)`.
pub fn section3_consistency(ctx: &PrimeContext, l7star: usize) -> Result<Verdict> {
    if ctx.l < 11 {
        return Ok(Verdict::Skipped("needs p >= 11".into()));
    }
    let counts = count_factors(ctx)?;
    let pred = section3_prediction(ctx.l, &counts);
    Ok(Verdict::check(pred == Ratio::from_integer(l7star as i64), || {
        format!(
            "branch p = {} mod 7 gives {pred} from N1 = {}, N2 = {}, N3 = {}, N6 = {}; direct count {l7star}",
            ctx.l % 7,
            counts.n1,
            counts.n2,
            counts.n3,
            counts.n6
        )
    }))
}

/// Irreducible factors with multiplicity 1, sorted by degree then coefficients.
pub fn factored(f: &FpPoly) -> Result<Vec<FpPoly>> {
    let mut v = distinct_irreducible_factors(f)?;
    v.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(v)
}

/// `Y(Y + 1)(Y^2 + Y + 18)`-style rendering in variable `var`.
pub fn factored_string(f: &FpPoly, var: &str) -> Result<String> {
    let parts: Vec<String> = factored(f)?
        .iter()
        .map(|g| {
            let s = g.to_var_string(var);
            if g.deg() == 1 && g.coeff(0) == 0 {
                s
            } else {
                format!("({s})")
            }
        })
        .collect();
    Ok(parts.concat())
}
