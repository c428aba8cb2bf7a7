//! Truncated Laurent series with exact integer coefficients.
//!
//! A series lives either in `q` (scale 1) or in `u = q^(1/7)` (scale 7).
//! Precision is relative: a series with offset `o` and `prec` terms knows
//! every coefficient of exponent `o..o+prec` and nothing beyond. Products
//! and quotients keep the smaller relative precision, sums keep the smaller
//! absolute end.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constants::{asc, P_CUBIC, QUAD_ZERO, SEXTIC_J7, SEXTIC_J77};
use crate::{Error, Result, Verdict};

/// Default number of `q`-terms used by the identity checks.
pub const DEFAULT_PREC: usize = 200;

/// Smallest precision accepted by [`verify_series_identity`].
pub const MIN_PREC: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    scale: u32,
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    /// Builds a series from its first coefficients. `coeffs.len()` is the precision.
    pub fn new(scale: u32, offset: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(scale == 1 || scale == 7, "scale must be 1 or 7");
        LaurentSeries { scale, offset, coeffs }
    }

    pub fn from_i64s(scale: u32, offset: i64, coeffs: &[i64]) -> Self {
        Self::new(scale, offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant `c` known to `prec` terms.
    pub fn constant(c: i64, prec: usize) -> Self {
        let mut v = vec![BigInt::zero(); prec];
        if prec > 0 {
            v[0] = BigInt::from(c);
        }
        Self::new(1, 0, v)
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// One past the last known exponent.
    pub fn end(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    /// Coefficient of `var^e` (in units of the scale variable), if known.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        if e >= self.end() {
            return None;
        }
        if e < self.offset {
            return Some(BigInt::zero());
        }
        Some(self.coeffs[(e - self.offset) as usize].clone())
    }

    /// Drops leading zero coefficients. The absolute end stays put.
    pub fn normalize(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        self
    }

    pub fn is_zero_to_prec(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Rewrites a `q`-series in `u`, or returns it unchanged at scale 7.
    pub fn to_scale7(&self) -> Self {
        if self.scale == 7 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); 7 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[7 * i] = c.clone();
        }
        Self::new(7, 7 * self.offset, v)
    }

    /// Rewrites a `u`-series in `q` when every nonzero exponent is a multiple of 7.
    pub fn to_scale1(&self) -> Result<Self> {
        if self.scale == 1 {
            return Ok(self.clone());
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.offset + i as i64;
            if !c.is_zero() && e.rem_euclid(7) != 0 {
                return Err(Error::Structural(format!(
                    "u-series has nonzero coefficient at u^{e}, not a power of q"
                )));
            }
        }
        let lo = self.offset.div_euclid(7) + i64::from(self.offset.rem_euclid(7) != 0);
        let hi = (self.end() + 6).div_euclid(7);
        let v = (lo..hi).map(|n| self.coeff(7 * n).unwrap_or_default()).collect();
        Ok(Self::new(1, lo, v))
    }

    /// Substitutes `var -> var^k`.
    pub fn dilate(&self, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[k * i] = c.clone();
        }
        Self::new(self.scale, k as i64 * self.offset, v)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.scale == b.scale {
            (a.clone(), b.clone())
        } else {
            (a.to_scale7(), b.to_scale7())
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        let (a, b) = Self::aligned(self, o);
        let lo = a.offset.min(b.offset);
        let hi = a.end().min(b.end());
        let v = (lo..hi.max(lo))
            .map(|e| {
                let x = a.coeff(e).unwrap();
                let y = b.coeff(e).unwrap();
                if negate { x - y } else { x + y }
            })
            .collect();
        Self::new(a.scale, lo, v)
    }

    pub fn add_const(&self, c: i64) -> Self {
        self.add(&Self::new(self.scale, 0, vec![BigInt::from(c); 1]).extend_zero(self.end()))
    }

    /// A copy of a finite series known exactly, padded with zeros to `end`.
    fn extend_zero(mut self, end: i64) -> Self {
        while self.end() < end {
            self.coeffs.push(BigInt::zero());
        }
        self
    }

    pub fn scale_by(&self, c: &BigInt) -> Self {
        Self::new(self.scale, self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::aligned(self, o);
        let n = a.prec().min(b.prec());
        let mut v = vec![BigInt::zero(); n];
        for (i, x) in a.coeffs.iter().take(n).enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().take(n - i).enumerate() {
                v[i + j] += x * y;
            }
        }
        Self::new(a.scale, a.offset + b.offset, v)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::new(self.scale, 0, vec![BigInt::one()]).extend_zero(self.prec() as i64);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse. The leading coefficient must be a unit (`±1`).
    pub fn inverse(&self) -> Result<Self> {
        let s = self.clone().normalize();
        if s.prec() == 0 {
            return Err(Error::Precision(String::from("division by a series that is zero to its precision")));
        }
        let lead = s.coeffs[0].clone();
        if !(lead.abs().is_one()) {
            return Err(Error::Precision(format!("leading coefficient {lead} is not a unit")));
        }
        let n = s.prec();
        let mut inv = vec![BigInt::zero(); n];
        inv[0] = lead.clone();
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &s.coeffs[i] * &inv[k - i];
            }
            inv[k] = -acc * &lead;
        }
        Ok(Self::new(s.scale, -s.offset, inv))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    /// `p(self)` for an integer polynomial given in ascending order.
    pub fn compose_poly(&self, asc: &[i64]) -> Self {
        let n = self.prec() as i64;
        let mut acc = Self::constant(0, 0);
        let mut first = true;
        for &c in asc.iter().rev() {
            if first {
                acc = Self::new(self.scale, 0, vec![BigInt::from(c)]).extend_zero(n);
                first = false;
            } else {
                acc = acc.mul(self);
                acc = acc.add(&Self::new(self.scale, 0, vec![BigInt::from(c)]).extend_zero(acc.end()));
            }
        }
        acc
    }

    /// First exponent where `self - other` is nonzero, with the checked range end.
    pub fn first_difference(&self, other: &Self) -> (Option<i64>, i64) {
        let d = self.sub(other);
        (d.coeffs.iter().position(|c| !c.is_zero()).map(|i| d.offset + i as i64), d.end())
    }
}

/// `prod_{n>=1} prod_{(k, e)} (1 - q^(7n-k))^e` to `prec` terms, `k` in `1..=6`.
fn mod7_product(prec: usize, exps: &[(i64, i32)]) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); prec];
    if prec == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for m in 1..prec {
        let r = (m % 7) as i64;
        let e: i32 = exps.iter().filter(|(k, _)| (7 - k) % 7 == r).map(|&(_, e)| e).sum();
        apply_factor(&mut c, m, e);
    }
    c
}

/// Multiplies by `(1 - q^m)^e` in place, `e` of either sign.
fn apply_factor(c: &mut [BigInt], m: usize, e: i32) {
    for _ in 0..e.max(0) {
        for i in (m..c.len()).rev() {
            let t = c[i - m].clone();
            c[i] -= t;
        }
    }
    for _ in 0..(-e).max(0) {
        for i in m..c.len() {
            let t = c[i - m].clone();
            c[i] += t;
        }
    }
}

/// `(eta(tau)/eta(7 tau))^4 = q^-1 prod (1-q^n)^4 / (1-q^(7n))^4`.
pub fn eta_quotient4(prec: usize) -> LaurentSeries {
    let mut c = vec![BigInt::zero(); prec];
    if prec > 0 {
        c[0] = BigInt::one();
    }
    for m in 1..prec {
        apply_factor(&mut c, m, 4);
        if m % 7 == 0 {
            apply_factor(&mut c, m, -4);
        }
    }
    LaurentSeries::new(1, -1, c)
}

/// The level-7 Hauptmodul `h` in `q`.
pub fn h_series(prec: usize) -> LaurentSeries {
    LaurentSeries::new(1, -1, mod7_product(prec, &[(3, 1), (4, 1), (2, 2), (5, 2), (1, -3), (6, -3)]))
}

/// `h - 1` from its own product.
pub fn hm1_series(prec: usize) -> LaurentSeries {
    LaurentSeries::new(1, -1, mod7_product(prec, &[(3, 3), (4, 3), (1, -2), (6, -2), (2, -1), (5, -1)]))
}

/// `h` transported by the order-3 map, as a product with no pole.
pub fn ha_series(prec: usize) -> LaurentSeries {
    LaurentSeries::new(1, 0, mod7_product(prec, &[(1, 1), (6, 1), (3, 2), (4, 2), (2, -3), (5, -3)]))
}

/// `s` in `u = q^(1/7)` with `prec` `q`-terms.
pub fn s_series(prec: usize) -> LaurentSeries {
    let c = mod7_product(prec, &[(3, 1), (4, 1), (1, -1), (6, -1)]);
    LaurentSeries::new(7, 0, c).dilate(7).shifted(-3)
}

/// `t` in `u = q^(1/7)` with `prec` `q`-terms.
pub fn t_series(prec: usize) -> LaurentSeries {
    let c = mod7_product(prec, &[(2, 1), (5, 1), (1, -1), (6, -1)]);
    LaurentSeries::new(7, 0, c).dilate(7).shifted(-2)
}

impl LaurentSeries {
    fn shifted(mut self, by: i64) -> Self {
        self.offset += by;
        self
    }
}

/// `j7* = (eta/eta7)^4 + 13 + 49 (eta7/eta)^4`.
pub fn j7star_series(prec: usize) -> Result<LaurentSeries> {
    let e = eta_quotient4(prec);
    let inv = e.inverse()?.scale_by(&BigInt::from(49));
    Ok(e.add(&inv).add_const(13))
}

/// `sigma_3(n)` by divisor summation.
fn sigma3(n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(3);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(3);
            }
        }
        d += 1;
    }
    s
}

/// The classical `j = E4^3 / Delta` built from divisor sums and the product for `Delta`.
pub fn klein_j_series(prec: usize) -> Result<LaurentSeries> {
    let mut e4 = vec![BigInt::one(); prec.max(1)];
    for (n, c) in e4.iter_mut().enumerate().skip(1) {
        *c = sigma3(n as u64) * 240;
    }
    e4.truncate(prec);
    let e4 = LaurentSeries::new(1, 0, e4);
    let mut d = vec![BigInt::zero(); prec];
    if prec > 0 {
        d[0] = BigInt::one();
    }
    for m in 1..prec {
        apply_factor(&mut d, m, 24);
    }
    let delta = LaurentSeries::new(1, 1, d);
    e4.pow(3).div(&delta)
}

/// A registered `q`-series identity.
#[derive(Clone, Copy, Debug)]
pub struct SeriesCase {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(usize) -> Result<Comparison>,
}

/// Two sides of an identity, already expanded.
struct Comparison {
    lhs: LaurentSeries,
    rhs: LaurentSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub prec: usize,
    pub verdict: Verdict,
    /// First exponent (in units of `q^(1/scale)`) where the two sides differ.
    pub first_failure: Option<i64>,
    pub scale: u32,
    /// One past the last exponent that was compared.
    pub checked_to: i64,
}

fn hh1(h: &LaurentSeries) -> LaurentSeries {
    h.mul(&h.add_const(-1))
}

fn eta_h(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    Ok(Comparison { lhs: eta_quotient4(n).mul(&hh1(&h)), rhs: h.compose_poly(&asc(P_CUBIC)) })
}

fn klein(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    let s7 = s_series(n).pow(7).to_scale1()?;
    Ok(Comparison { lhs: s7, rhs: h.mul(&h.add_const(-1).pow(2)) })
}

fn st2h(n: usize) -> Result<Comparison> {
    let st2 = s_series(n).mul(&t_series(n).pow(2)).to_scale1()?;
    Ok(Comparison { lhs: st2, rhs: h_series(n) })
}

fn hm1_prod(n: usize) -> Result<Comparison> {
    Ok(Comparison { lhs: hm1_series(n), rhs: h_series(n).add_const(-1) })
}

fn h_a_ratio(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    Ok(Comparison { lhs: ha_series(n), rhs: h.add_const(-1).div(&h)? })
}

fn z_def(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    let z = h.compose_poly(&[1, -3, 0, 1]).div(&hh1(&h))?;
    Ok(Comparison { lhs: z, rhs: eta_quotient4(n).add_const(8) })
}

/// Leading coefficients of `j7*` as printed.
pub const J7STAR_DISPLAY: &[i64] = &[1, 9, 51, 204, 681, 1956, 5135];
/// Leading coefficients of `(eta/eta7)^4` as printed.
pub const ETA4_DISPLAY: &[i64] = &[1, -4, 2, 8, -5, -4, -10, 12, -7, 8, 46];
/// Leading coefficients of `h` as printed, with the omitted `q^3` term as `0`.
pub const H_DISPLAY: &[i64] = &[1, 3, 4, 3, 0, -5, -7, -2, 8, 16, 12];
/// Leading coefficients of `q^(3/7) s` as printed.
pub const S_DISPLAY: &[i64] = &[1, 1, 1, 0, -1, -1, 0, 1, 2, 1, -1, -3];

fn j7star(n: usize) -> Result<Comparison> {
    let j = j7star_series(n)?;
    let shown = LaurentSeries::from_i64s(1, -1, J7STAR_DISPLAY);
    let lhs = LaurentSeries::new(1, -1, j.coeffs()[..shown.prec().min(j.prec())].to_vec());
    Ok(Comparison { lhs, rhs: shown })
}

fn f7_vanish(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    let lhs = h.compose_poly(&asc(QUAD_ZERO)).pow(3);
    let rhs = j7star_series(n)?.mul(&hh1(&h)).mul(&h.compose_poly(&asc(P_CUBIC)));
    Ok(Comparison { lhs, rhs })
}

fn j_7tau(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    let f0 = h.compose_poly(&asc(QUAD_ZERO)).mul(&h.compose_poly(&asc(SEXTIC_J7)));
    let den = h.pow(7).mul(&h.add_const(-1).pow(7)).mul(&h.compose_poly(&asc(P_CUBIC)));
    let lhs = f0.pow(3).div(&den)?;
    let rhs = klein_j_series(n.div_ceil(7) + 1)?.dilate(7);
    Ok(Comparison { lhs, rhs })
}

fn j_tau(n: usize) -> Result<Comparison> {
    let h = h_series(n);
    let num = h.compose_poly(&asc(QUAD_ZERO)).mul(&h.compose_poly(&asc(SEXTIC_J77))).pow(3);
    let den = hh1(&h).mul(&h.compose_poly(&asc(P_CUBIC)).pow(7));
    Ok(Comparison { lhs: num.div(&den)?, rhs: klein_j_series(n)? })
}

pub const SERIES_REGISTRY: &[SeriesCase] = &[
    SeriesCase { id: "ETA_H", statement: "(eta/eta7)^4 h (h-1) = h^3 - 8h^2 + 5h + 1", run: eta_h },
    SeriesCase { id: "KLEIN", statement: "s^7 = h (h-1)^2", run: klein },
    SeriesCase { id: "ST2H", statement: "s t^2 = h", run: st2h },
    SeriesCase { id: "HM1_PROD", statement: "product for h - 1 equals h - 1", run: hm1_prod },
    SeriesCase { id: "H_A_RATIO", statement: "product for h(A tau) equals (h - 1)/h", run: h_a_ratio },
    SeriesCase { id: "Z_DEF", statement: "(h^3 - 3h + 1)/(h (h-1)) = (eta/eta7)^4 + 8", run: z_def },
    SeriesCase { id: "J7STAR", statement: "j7* = q^-1 + 9 + 51q + 204q^2 + 681q^3 + 1956q^4 + 5135q^5 + ...", run: j7star },
    SeriesCase { id: "F7_VANISH", statement: "f7(h, j7*) = 0", run: f7_vanish },
    SeriesCase { id: "J_7TAU", statement: "j7(h(tau)) = j(7 tau) against E4^3/Delta", run: j_7tau },
    SeriesCase { id: "J_TAU", statement: "j77(h(tau)) = j(tau) against E4^3/Delta", run: j_tau },
];

pub fn find_series_case(id: &str) -> Result<&'static SeriesCase> {
    SERIES_REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(String::from(id)))
}

/// Expands both sides of a registered identity to `prec` terms and compares them.
pub fn verify_series_identity(id: &str, prec: usize) -> Result<SeriesOutcome> {
    let case = find_series_case(id)?;
    if prec < MIN_PREC {
        return Err(Error::Precision(format!("prec {prec} is below the minimum {MIN_PREC}")));
    }
    let Comparison { lhs, rhs } = (case.run)(prec)?;
    let (first, end) = lhs.first_difference(&rhs);
    let scale = lhs.scale().max(rhs.scale());
    let lo = lhs.offset().min(rhs.offset());
    let verdict = match first {
        None if end <= lo => Verdict::Fail(String::from("no overlapping precision to compare")),
        None => Verdict::Pass,
        Some(e) => Verdict::Fail(format!("first nonzero residual at exponent {e} (scale {scale})")),
    };
    Ok(SeriesOutcome { id: case.id, statement: case.statement, prec, verdict, first_failure: first, scale, checked_to: end })
}

/// Runs every registered series identity at `prec`.
pub fn run_all_series(prec: usize) -> Result<Vec<SeriesOutcome>> {
    SERIES_REGISTRY.iter().map(|c| verify_series_identity(c.id, prec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries, n: usize) -> Vec<i64> {
        s.coeffs()[..n].iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn displayed_expansions() {
        assert_eq!(ints(&eta_quotient4(20), 11), ETA4_DISPLAY);
        assert_eq!(ints(&h_series(20), 11), H_DISPLAY);
        let s = s_series(20);
        assert_eq!(s.offset(), -3);
        let q = s.shifted(3).to_scale1().unwrap();
        assert_eq!(ints(&q, 12), S_DISPLAY);
        assert_eq!(ints(&j7star_series(20).unwrap(), 7), J7STAR_DISPLAY);
    }

    #[test]
    fn reciprocal_is_49() {
        let e = eta_quotient4(50);
        let r = e.inverse().unwrap().scale_by(&BigInt::from(49));
        let one = e.mul(&r);
        assert_eq!(one.offset(), 0);
        assert_eq!(one.coeff(0), Some(BigInt::from(49)));
        assert!(one.coeffs()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn hm1_plus_one() {
        assert_eq!(hm1_series(60).add_const(1), h_series(60));
    }

    #[test]
    fn classical_j() {
        let j = klein_j_series(5).unwrap();
        assert_eq!(j.offset(), -1);
        assert_eq!(ints(&j, 4), [1, 744, 196884, 21493760]);
    }

    #[test]
    fn j_7tau_constant_is_744() {
        let j = klein_j_series(10).unwrap().dilate(7);
        assert_eq!(j.coeff(0), Some(BigInt::from(744)));
        assert_eq!(j.coeff(-7), Some(BigInt::one()));
        assert_eq!(j.coeff(-3), Some(BigInt::zero()));
    }

    #[test]
    fn division_round_trip() {
        let a = LaurentSeries::from_i64s(1, -2, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let b = LaurentSeries::from_i64s(1, 1, &[-1, 7, 0, 2, 8, 1, 8, 2]);
        let back = a.div(&b).unwrap().mul(&b);
        assert_eq!(back, a);
        let bad = LaurentSeries::from_i64s(1, 0, &[2, 1]);
        assert!(matches!(bad.inverse(), Err(Error::Precision(_))));
    }

    #[test]
    fn scale_guard() {
        let s = s_series(10);
        assert!(matches!(s.to_scale1(), Err(Error::Structural(_))));
        assert_eq!(s.pow(7).to_scale1().unwrap().offset(), -3);
    }

    #[test]
    fn all_identities_low_precision() {
        for o in run_all_series(30).unwrap() {
            assert_eq!(o.verdict, Verdict::Pass, "{}", o.id);
            assert!(o.checked_to > 5, "{} compared too little", o.id);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(verify_series_identity("NOPE", 50), Err(Error::UnknownCase(_))));
        assert!(matches!(verify_series_identity("ETA_H", 5), Err(Error::Precision(_))));
    }
}
