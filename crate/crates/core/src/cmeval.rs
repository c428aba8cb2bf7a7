//! Numerical values of `h` at CM points `w/7`, with certified error bounds.
//!
//! Numbers are complex balls in binary fixed point: a midpoint `(re, im)`
//! scaled by `2^w` and a radius `rad` in the same units that bounds the
//! modulus of the error. Every operation rounds its midpoint and widens
//! the radius so the true value stays inside. Nothing here uses floats
//! except the display helpers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classnum::{class_number, Discriminant};
use crate::constants::{fp, P_CUBIC, P_TABLE, PSI7, PSI7_FACTORS_MOD_41, QUAD_ZERO};
use crate::ffpoly::{factorize, FpPoly};
use crate::{Error, Result, Verdict};

/// Default working precision for the CM checks.
pub const DEFAULT_BITS: u32 = 300;
const MIN_BITS: u32 = 128;
const GUARD_BITS: u32 = 64;
/// Products needing more factors than this are reported as unreachable.
const MAX_TERMS: usize = 4096;
const NORM_MODULUS: i64 = 196;

fn ceil_shr(x: &BigInt, k: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    (x + ((BigInt::one() << k) - 1u32)) >> k
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// A complex ball with `w` fractional bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    w: u32,
    re: BigInt,
    im: BigInt,
    rad: BigInt,
}

impl Ball {
    pub fn from_int(w: u32, k: i64) -> Ball {
        Ball { w, re: BigInt::from(k) << w, im: BigInt::zero(), rad: BigInt::zero() }
    }

    pub fn from_rational(w: u32, r: &BigRational) -> Ball {
        let re = (r.numer() << w).div_floor(r.denom());
        let exact = (&re * r.denom()) == (r.numer() << w);
        let rad = if exact { BigInt::zero() } else { BigInt::one() };
        Ball { w, re, im: BigInt::zero(), rad }
    }

    pub fn frac_bits(&self) -> u32 {
        self.w
    }

    /// Upper bound of `|value|` in units of `2^-w`.
    pub fn abs_upper(&self) -> BigInt {
        self.mid_abs() + 1u32 + &self.rad
    }

    /// `floor(|midpoint|)` in units of `2^-w`.
    fn mid_abs(&self) -> BigInt {
        (&self.re * &self.re + &self.im * &self.im).sqrt()
    }

    /// Lower bound of `|value|` in units of `2^-w` (may be non-positive).
    pub fn abs_lower(&self) -> BigInt {
        self.mid_abs() - &self.rad
    }

    /// `log2` of an upper bound for `|value|`.
    pub fn abs_upper_log2(&self) -> i64 {
        self.abs_upper().bits() as i64 - i64::from(self.w)
    }

    /// `log2` of an upper bound for the error radius.
    pub fn error_log2(&self) -> i64 {
        (&self.rad + 1u32).bits() as i64 - i64::from(self.w)
    }

    /// Midpoint rounded to `f64`, for display.
    pub fn to_f64(&self) -> (f64, f64) {
        let f = |x: &BigInt| {
            let keep = 60u32.min(self.w);
            let top = (x >> (self.w - keep)).to_f64().unwrap_or(f64::NAN);
            top / (1u64 << keep) as f64
        };
        (f(&self.re), f(&self.im))
    }

    pub fn add(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.w, o.w);
        Ball { w: self.w, re: &self.re + &o.re, im: &self.im + &o.im, rad: &self.rad + &o.rad }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Ball {
        Ball { w: self.w, re: -&self.re, im: -&self.im, rad: self.rad.clone() }
    }

    fn widen(mut self, by: &BigInt) -> Ball {
        self.rad += by;
        self
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.w, o.w);
        let w = self.w;
        let re = (&self.re * &o.re - &self.im * &o.im) >> w;
        let im = (&self.re * &o.im + &self.im * &o.re) >> w;
        let ma = self.mid_abs() + 1u32;
        let mb = o.mid_abs() + 1u32;
        let spread = &ma * &o.rad + &mb * &self.rad + &self.rad * &o.rad;
        Ball { w, re, im, rad: ceil_shr(&spread, w) + 2u32 }
    }

    pub fn mul_int(&self, k: i64) -> Ball {
        let k = BigInt::from(k);
        Ball { w: self.w, re: &self.re * &k, im: &self.im * &k, rad: &self.rad * k.abs() }
    }

    pub fn div_int(&self, n: u64) -> Ball {
        let n = BigInt::from(n);
        Ball {
            w: self.w,
            re: self.re.div_floor(&n),
            im: self.im.div_floor(&n),
            rad: ceil_div(&self.rad, &n) + 2u32,
        }
    }

    pub fn shr(&self, k: u32) -> Ball {
        Ball { w: self.w, re: &self.re >> k, im: &self.im >> k, rad: ceil_shr(&self.rad, k) + 2u32 }
    }

    pub fn inv(&self) -> Result<Ball> {
        let w = self.w;
        let n2 = &self.re * &self.re + &self.im * &self.im;
        let b = n2.sqrt();
        let gap = &b - &self.rad;
        if !gap.is_positive() || n2.is_zero() {
            return Err(Error::Precision(String::from("division by a ball that contains zero")));
        }
        let re = (&self.re << (2 * w)).div_floor(&n2);
        let im = (-(&self.im << (2 * w))).div_floor(&n2);
        let spread = ceil_div(&(&self.rad << (2 * w)), &(&b * &gap));
        Ok(Ball { w, re, im, rad: spread + 2u32 })
    }

    pub fn div(&self, o: &Ball) -> Result<Ball> {
        Ok(self.mul(&o.inv()?))
    }

    /// `p(self)` for integer coefficients in descending order.
    pub fn eval_desc(&self, desc: &[i64]) -> Ball {
        let mut acc = Ball::from_int(self.w, 0);
        for &c in desc {
            acc = acc.mul(self).add(&Ball::from_int(self.w, c));
        }
        acc
    }

    /// `true` if the two balls share a point.
    pub fn overlaps(&self, o: &Ball) -> bool {
        let r = &self.rad + &o.rad;
        let (dr, di) = (&self.re - &o.re, &self.im - &o.im);
        &dr * &dr + &di * &di <= &r * &r
    }
}

/// `atan(1/k)` as a real ball.
fn atan_inv(w: u32, k: u64) -> Ball {
    let one = BigInt::one() << w;
    let k2 = BigInt::from(k) * k;
    let mut power = BigInt::from(k);
    let mut sum = BigInt::zero();
    let mut n = 0u64;
    loop {
        let term = &one / (&power * (2 * n + 1));
        if term.is_zero() {
            break;
        }
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &k2;
        n += 1;
    }
    Ball { w, re: sum, im: BigInt::zero(), rad: BigInt::from(n + 1) }
}

pub fn pi(w: u32) -> Ball {
    atan_inv(w, 5).mul_int(16).sub(&atan_inv(w, 239).mul_int(4))
}

/// `sqrt(r)` for a non-negative rational, as a real ball.
fn sqrt_rational(w: u32, r: &BigRational) -> Ball {
    let x = (r.numer() << (2 * w)).div_floor(r.denom());
    Ball { w, re: x.sqrt(), im: BigInt::zero(), rad: BigInt::from(2) }
}

/// `exp(z)` by halving, a Taylor sum and repeated squaring.
pub fn exp(z: &Ball) -> Ball {
    let w = z.w;
    let mag = z.abs_upper();
    let k = (mag.bits() as i64 - i64::from(w) + 2).max(0) as u32;
    let y = if k > 0 { z.shr(k) } else { z.clone() };
    let mut sum = Ball::from_int(w, 1);
    let mut term = Ball::from_int(w, 1);
    // With |y| <= 1/2 the tail after a term is bounded by that term.
    for n in 1u64.. {
        term = term.mul(&y).div_int(n);
        sum = sum.add(&term);
        if (&term.re * &term.re + &term.im * &term.im).sqrt() <= BigInt::one() {
            break;
        }
    }
    let mut out = sum.widen(&term.abs_upper());
    for _ in 0..k {
        out = out.mul(&out);
    }
    out
}

/// A point `tau = re + i sqrt(im_sq)` of the upper half-plane, given exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau {
    pub re: BigRational,
    pub im_sq: BigRational,
}

impl Tau {
    pub fn new(re: BigRational, im_sq: BigRational) -> Result<Tau> {
        if !im_sq.is_positive() {
            return Err(Error::Degenerate(String::from("tau must lie in the upper half-plane")));
        }
        Ok(Tau { re, im_sq })
    }

    /// `tau = a + i b` for rationals `a`, `b > 0`.
    pub fn from_parts(a: BigRational, b: BigRational) -> Result<Tau> {
        if !b.is_positive() {
            return Err(Error::Degenerate(String::from("tau must lie in the upper half-plane")));
        }
        Tau::new(a, &b * &b)
    }

    pub fn translate(&self, k: i64) -> Tau {
        Tau { re: &self.re + BigRational::from_integer(BigInt::from(k)), im_sq: self.im_sq.clone() }
    }

    fn im_ceil(&self) -> u64 {
        let up = self.im_sq.ceil().to_integer();
        (up.sqrt() + 1u32).to_u64().unwrap_or(u64::MAX)
    }
}

/// `q = exp(2 pi i tau)`.
fn q_ball(tau: &Tau, w: u32) -> Ball {
    let frac = &tau.re - tau.re.floor();
    let x = Ball::from_rational(w, &frac);
    let y = sqrt_rational(w, &tau.im_sq);
    let arg = Ball { w, re: -y.re, im: x.re, rad: x.rad + y.rad };
    exp(&pi(w).mul_int(2).mul(&arg))
}

/// Exponent of `(1 - q^m)` in the product for `h`.
fn h_exponent(m: usize) -> i32 {
    match m % 7 {
        3 | 4 => 1,
        2 | 5 => 2,
        1 | 6 => -3,
        _ => 0,
    }
}

/// `h(tau)` together with its certified error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HValue {
    pub value: Ball,
    /// Number of product factors `(1 - q^m)` used.
    pub terms: usize,
}

/// Evaluates the product for `h` at `tau` with absolute error below `2^-bits`.
pub fn eval_h(tau: &Tau, bits: u32) -> Result<HValue> {
    if bits < MIN_BITS {
        return Err(Error::Precision(format!("bits {bits} is below the minimum {MIN_BITS}")));
    }
    let extra = u32::try_from(tau.im_ceil().saturating_mul(20)).unwrap_or(u32::MAX / 4).min(1 << 16);
    let w = bits + GUARD_BITS + extra;
    let q = q_ball(tau, w);
    let one = BigInt::one() << w;
    let qa = q.abs_upper();
    let one_minus = &one - &qa;
    if !one_minus.is_positive() {
        return Err(Error::Precision(String::from("precision unreachable: |q| is not below 1")));
    }
    // Relative tail of the truncated product is at most 24 |q|^(M+1) / (1 - |q|),
    // and |h| is roughly 1/|q|, so the relative target is scaled down by that.
    let qlow = q.abs_lower();
    if !qlow.is_positive() {
        return Err(Error::Precision(String::from("|q| is too small to invert at this precision")));
    }
    let pole_bits = ((BigInt::one() << (2 * w)) / &qlow).bits() as u32 - w + 2;
    let target = BigInt::one() << (w - bits - 8).saturating_sub(pole_bits);
    let mut pw = qa.clone();
    let mut terms = 0usize;
    let rel = loop {
        let rel = ceil_div(&((&pw * 24u32) << w), &one_minus);
        if rel < target {
            break rel;
        }
        terms += 1;
        if terms > MAX_TERMS {
            return Err(Error::Precision(format!(
                "precision unreachable: |q| too close to 1 for {bits} bits within {MAX_TERMS} factors"
            )));
        }
        pw = ceil_shr(&(&pw * &qa), w);
    };
    let unit = Ball::from_int(w, 1);
    let mut num = unit.clone();
    let mut den = unit.clone();
    let mut qm = unit.clone();
    for m in 1..=terms {
        qm = qm.mul(&q);
        let e = h_exponent(m);
        let f = unit.sub(&qm);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                num = num.mul(&f);
            } else {
                den = den.mul(&f);
            }
        }
    }
    let hm = num.div(&den.mul(&q))?;
    let tail = ceil_shr(&(hm.abs_upper() * &rel), w) + 1u32;
    let value = hm.widen(&tail);
    if value.rad > (BigInt::one() << (w - bits)) {
        return Err(Error::Precision(format!("error bound exceeds 2^-{bits}")));
    }
    Ok(HValue { value, terms })
}

/// A CM point `w/7` with `w = (v + sqrt(-d))/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMPoint {
    pub d: u64,
    pub v: i64,
    pub tau: Tau,
}

impl CMPoint {
    /// Builds the point for a given `v`, checking the congruences on `w`.
    pub fn new(d: u64, v: i64) -> Result<CMPoint> {
        check_discriminant(d)?;
        let di = d as i64;
        if (v - di).rem_euclid(2) != 0 || (v * v + di).rem_euclid(NORM_MODULUS) != 0 {
            return Err(Error::NoAdmissiblePoint(format!("v = {v} does not give 49 | N(w) for d = {d}")));
        }
        let re = BigRational::new(BigInt::from(v), BigInt::from(14));
        let im_sq = BigRational::new(BigInt::from(d), BigInt::from(196));
        Ok(CMPoint { d, v, tau: Tau::new(re, im_sq)? })
    }

    /// `N(w) = (v^2 + d)/4`.
    pub fn norm(&self) -> i64 {
        (self.v * self.v + self.d as i64) / 4
    }

    /// `w` as the pair `(v, d)` standing for `(v + sqrt(-d))/2`.
    pub fn w(&self) -> (i64, u64) {
        (self.v, self.d)
    }
}

fn check_discriminant(d: u64) -> Result<()> {
    if d == 7 {
        return Err(Error::BadPrime(7, "the level itself is excluded"));
    }
    if d == 0 || !matches!(d % 4, 0 | 3) || d > 1 << 40 {
        return Err(Error::InvalidDiscriminant(-(d.min(1 << 40) as i64)));
    }
    Ok(())
}

fn search_w(d: u64, odd_norm: bool) -> Result<CMPoint> {
    check_discriminant(d)?;
    let di = d as i64;
    let bound = 4 * NORM_MODULUS;
    for a in 1..=bound {
        for v in [a, -a] {
            let ok = (v - di).rem_euclid(2) == 0
                && (v * v + di).rem_euclid(NORM_MODULUS) == 0
                && (!odd_norm || ((v * v + di) / 4) % 2 == 1);
            if ok {
                return CMPoint::new(d, v);
            }
        }
    }
    Err(Error::NoAdmissiblePoint(format!("no v with |v| <= {bound} for d = {d}")))
}

/// Smallest `|v| > 0` (positive first) with `v = d mod 2` and `v^2 = -d mod 196`.
pub fn select_w(d: u64) -> Result<CMPoint> {
    search_w(d, false)
}

/// As [`select_w`], additionally requiring `N(w)` to be odd.
pub fn select_w_odd_norm(d: u64) -> Result<CMPoint> {
    search_w(d, true)
}

/// The point used for a tabulated `P_d`: odd norm when `d` is odd.
pub fn table_point(d: u64) -> Result<CMPoint> {
    if d % 2 == 1 {
        select_w_odd_norm(d)
    } else {
        select_w(d)
    }
}

/// Result of a numerical root check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCheck {
    pub d: u64,
    pub v: i64,
    pub bits: u32,
    pub h: Ball,
    /// `log2` of a certified upper bound for `|P(h)|`.
    pub residual_log2: i64,
    pub tolerance_log2: i64,
    pub verdict: Verdict,
}

fn root_check(point: &CMPoint, bits: u32, poly: impl Fn(&Ball) -> Result<Ball>) -> Result<RootCheck> {
    let h = eval_h(&point.tau, bits)?.value;
    let r = poly(&h)?;
    let residual_log2 = r.abs_upper_log2();
    let tolerance_log2 = -(i64::from(bits) / 2);
    let verdict = Verdict::check(residual_log2 < tolerance_log2, || {
        format!("|residual| <= 2^{residual_log2} is not below 2^{tolerance_log2}")
    });
    Ok(RootCheck { d: point.d, v: point.v, bits, h, residual_log2, tolerance_log2, verdict })
}

fn table_entry(d: u64) -> Result<&'static crate::constants::PdEntry> {
    P_TABLE
        .iter()
        .find(|e| u64::from(e.d) == d)
        .ok_or_else(|| Error::UnknownCase(format!("P_{d} is not tabulated")))
}

/// Checks numerically that `h(w/7)` is a root of the tabulated `P_d`.
pub fn verify_pd_root(d: u64, bits: u32) -> Result<RootCheck> {
    let entry = table_entry(d)?;
    let point = table_point(d)?;
    root_check(&point, bits, |h| Ok(h.eval_desc(entry.coeffs)))
}

/// The CM point for `Psi7`: `w = 29 + sqrt(-41)`.
pub fn psi7_point() -> CMPoint {
    CMPoint::new(164, 58).expect("29 + sqrt(-41) has norm divisible by 49")
}

/// `j7* = (h^2 - h + 1)^3 / (h (h-1) (h^3 - 8h^2 + 5h + 1))`.
pub fn fricke_value(h: &Ball) -> Result<Ball> {
    let num = h.eval_desc(QUAD_ZERO);
    let num = num.mul(&num).mul(&num);
    let den = h.mul(&h.sub(&Ball::from_int(h.w, 1))).mul(&h.eval_desc(P_CUBIC));
    num.div(&den)
}

/// Checks numerically that `j7*(w/7)` is a root of `Psi7` for `w = 29 + sqrt(-41)`.
pub fn verify_psi7_root(bits: u32) -> Result<RootCheck> {
    root_check(&psi7_point(), bits, |h| Ok(fricke_value(h)?.eval_desc(PSI7)))
}

/// Factorization of a tabulated polynomial modulo `l` against its printed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCheck {
    pub d: u64,
    pub l: u64,
    pub factors: Vec<(FpPoly, u32)>,
    pub matches_table: bool,
    /// Shape predicted from the class number: squares of `3h` linears or of `h` cubics.
    pub pattern: Verdict,
    pub verdict: Verdict,
}

fn compare_factors(found: &[(FpPoly, u32)], printed: &[(&[i64], u32)], l: u64) -> core::result::Result<(), String> {
    let mut want: Vec<(FpPoly, u32)> = printed.iter().map(|&(f, m)| (fp(l, f), m)).collect();
    let mut extra = Vec::new();
    for (f, m) in found {
        if let Some(i) = want.iter().position(|(g, k)| g == f && k == m) {
            want.remove(i);
        } else {
            extra.push(format!("({})^{m}", f.to_var_string("x")));
        }
    }
    if want.is_empty() && extra.is_empty() {
        return Ok(());
    }
    let missing: Vec<String> = want.iter().map(|(g, m)| format!("({})^{m}", g.to_var_string("x"))).collect();
    Err(format!("missing [{}], unexpected [{}]", missing.join(", "), extra.join(", ")))
}

fn shape_pattern(factors: &[(FpPoly, u32)], class_no: u64, l: u64) -> Verdict {
    if factors.iter().any(|(_, m)| *m != 2) {
        return Verdict::Fail(String::from("not every factor is squared"));
    }
    let n = factors.len() as u64;
    let all_deg = |k: usize| factors.iter().all(|(f, _)| f.degree() == Some(k));
    if all_deg(1) {
        return Verdict::check(n == 3 * class_no, || format!("{n} squared linears, expected 3h = {}", 3 * class_no));
    }
    if all_deg(3) {
        let shaped = factors.iter().all(|(f, _)| {
            let c = f.coeffs();
            c[0] == 1 && c[3] == 1 && (c[1] + c[2] + 3) % l == 0
        });
        if !shaped {
            return Verdict::Fail(String::from("a cubic is not of the form x^3 + a x^2 - (a+3) x + 1"));
        }
        return Verdict::check(n == class_no, || format!("{n} squared cubics, expected h = {class_no}"));
    }
    Verdict::Fail(String::from("factors are neither all linear nor all cubic"))
}

/// Factors `P_d` modulo `l` and compares with the printed factorization and the predicted shape.
pub fn verify_pd_factorization(d: u64, l: u64) -> Result<FactorCheck> {
    let entry = table_entry(d)?;
    if entry.l != l {
        return Err(Error::UnknownCase(format!("no printed factorization of P_{d} modulo {l}")));
    }
    let fz = factorize(&fp(l, entry.coeffs))?;
    let matches = compare_factors(&fz.factors, entry.factors_mod_l, l);
    let h = class_number(&Discriminant::new(-(d as i64))?);
    let pattern = shape_pattern(&fz.factors, h, l);
    let verdict = match (&matches, &pattern) {
        (Err(e), _) => Verdict::Fail(e.clone()),
        (Ok(()), Verdict::Fail(e)) => Verdict::Fail(e.clone()),
        _ => Verdict::Pass,
    };
    Ok(FactorCheck { d, l, factors: fz.factors, matches_table: matches.is_ok(), pattern, verdict })
}

/// Factors `Psi7` modulo 41 and compares with the printed factorization.
pub fn psi7_mod_41() -> Result<(Vec<(FpPoly, u32)>, Verdict)> {
    let fz = factorize(&fp(41, PSI7))?;
    let verdict = match compare_factors(&fz.factors, PSI7_FACTORS_MOD_41, 41) {
        Ok(()) => Verdict::Pass,
        Err(e) => Verdict::Fail(e),
    };
    Ok((fz.factors, verdict))
}

/// Evaluates the truncated `q`-expansion `sum c_i q^(offset+i)` at `tau`, without a tail bound.
pub fn eval_expansion(tau: &Tau, offset: i64, coeffs: &[BigInt], w: u32) -> Result<Ball> {
    let q = q_ball(tau, w);
    let mut acc = Ball::from_int(w, 0);
    for c in coeffs.iter().rev() {
        let c = Ball { w, re: c << w, im: BigInt::zero(), rad: BigInt::zero() };
        acc = acc.mul(&q).add(&c);
    }
    let mut scale = Ball::from_int(w, 1);
    let base = if offset < 0 { q.inv()? } else { q.clone() };
    for _ in 0..offset.unsigned_abs() {
        scale = scale.mul(&base);
    }
    Ok(acc.mul(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_digits() {
        let p = pi(200);
        let (re, _) = p.to_f64();
        assert!((re - core::f64::consts::PI).abs() < 1e-15);
        assert!(p.error_log2() < -185);
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let w = 200;
        let z = Ball { w, re: BigInt::zero(), im: pi(w).re, rad: pi(w).rad };
        let e = exp(&z);
        assert!(e.overlaps(&Ball::from_int(w, -1)));
        assert!(e.error_log2() < -150);
    }

    #[test]
    fn select_w_small_search() {
        let p = select_w(20).unwrap();
        assert_eq!((p.v * p.v + 20) % 196, 0);
        assert_eq!(p.v % 2, 0);
        for v in 1..p.v.abs() {
            assert!((v * v + 20) % 196 != 0 || v % 2 != 0);
        }
        let q = select_w_odd_norm(83).unwrap();
        assert_eq!(q.norm() % 49, 0);
        assert_eq!(q.norm() % 2, 1);
        assert!(matches!(select_w(7), Err(Error::BadPrime(7, _))));
        assert!(matches!(select_w(21), Err(Error::InvalidDiscriminant(_))));
    }

    #[test]
    fn h_at_ten_i_is_dominated_by_leading_terms() {
        let tau = Tau::from_parts(rat(0, 1), rat(10, 1)).unwrap();
        let h = eval_h(&tau, 128).unwrap();
        let q_inv = (2.0 * core::f64::consts::PI * 10.0).exp();
        let (re, im) = h.value.to_f64();
        assert!((re / (q_inv + 3.0) - 1.0).abs() < 1e-12);
        assert!(im.abs() < 1e-6);
    }

    #[test]
    fn product_matches_series() {
        let tau = Tau::from_parts(rat(1, 3), rat(1, 1)).unwrap();
        let h = eval_h(&tau, 200).unwrap();
        let s = crate::qseries::h_series(120);
        let e = eval_expansion(&tau, s.offset(), s.coeffs(), h.value.frac_bits()).unwrap();
        let d = h.value.sub(&e);
        assert!(d.abs_upper_log2() < -190);
        let shifted = eval_h(&tau.translate(1), 200).unwrap();
        assert!(shifted.value.overlaps(&h.value));
    }

    #[test]
    fn unreachable_precision() {
        let tau = Tau::from_parts(rat(0, 1), rat(1, 1000)).unwrap();
        assert!(matches!(eval_h(&tau, 300), Err(Error::Precision(_))));
    }

    #[test]
    fn pd_roots() {
        for d in [20, 52, 68, 83] {
            let c = verify_pd_root(d, 300).unwrap();
            assert_eq!(c.verdict, Verdict::Pass, "d = {d}: {:?}", c.residual_log2);
            assert!(c.residual_log2 < -100);
        }
    }

    #[test]
    fn psi7() {
        let c = verify_psi7_root(300).unwrap();
        assert_eq!(c.verdict, Verdict::Pass, "{}", c.residual_log2);
        assert_eq!(psi7_mod_41().unwrap().1, Verdict::Pass);
    }

    #[test]
    fn factorizations() {
        for (d, l) in [(20, 5), (52, 13), (68, 17), (83, 83)] {
            let c = verify_pd_factorization(d, l).unwrap();
            assert_eq!(c.verdict, Verdict::Pass, "d = {d}");
        }
        assert!(verify_pd_factorization(20, 7).is_err());
    }
}
