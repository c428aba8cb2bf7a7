use alloc::vec;
use alloc::vec::Vec;

use super::fp::{inv_mod, mul_mod, neg_mod, pow_mod, sub_mod};
use super::poly::FpPoly;
use crate::error::{Error, Result};

/// Resultant of two nonzero polynomials via the Euclidean scheme.
///
/// Agrees with the Sylvester determinant of `f` and `g` taken at their
/// actual degrees.
pub fn resultant(f: &FpPoly, g: &FpPoly) -> Result<u64> {
    f.try_same(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.modulus();
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = 1u64;
    loop {
        let m = a.deg();
        let n = b.deg();
        if n == 0 {
            return Ok(mul_mod(acc, pow_mod(b.leading_coeff(), m as u128, p), p));
        }
        if m == 0 {
            return Ok(mul_mod(acc, pow_mod(a.leading_coeff(), n as u128, p), p));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(0);
        }
        let k = r.deg();
        if (m * n) % 2 == 1 {
            acc = neg_mod(acc, p);
        }
        acc = mul_mod(acc, pow_mod(b.leading_coeff(), (m - k) as u128, p), p);
        a = b;
        b = r;
    }
}

/// Discriminant with the sign convention `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &FpPoly) -> Result<u64> {
    let p = f.modulus();
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(1);
    }
    let fd = f.derivative();
    if fd.is_zero() {
        return Ok(0);
    }
    // Res(f, f') at the formal degree n-1 of f'.
    let gap = (n - 1 - fd.deg()) as u128;
    let mut r = mul_mod(resultant(f, &fd)?, pow_mod(f.leading_coeff(), gap, p), p);
    if (n * (n - 1) / 2) % 2 == 1 {
        r = neg_mod(r, p);
    }
    Ok(mul_mod(r, inv_mod(f.leading_coeff(), p), p))
}

/// Polynomial in `X` whose coefficients are polynomials in `Y`, all over `F_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpBiPoly {
    modulus: u64,
    /// `coeffs[i]` is the coefficient of `X^i`.
    coeffs: Vec<FpPoly>,
}

impl FpBiPoly {
    pub fn new(modulus: u64, mut coeffs: Vec<FpPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FpBiPoly { modulus, coeffs }
    }

    /// From a table of signed integer coefficients: `rows[i][j]` multiplies `X^i Y^j`.
    pub fn from_i64_rows(modulus: u64, rows: &[&[i64]]) -> Self {
        Self::new(modulus, rows.iter().map(|r| FpPoly::from_i64s(modulus, r)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn x_coeffs(&self) -> &[FpPoly] {
        &self.coeffs
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg()).max().unwrap_or(0)
    }

    /// Specializes `Y = y0`, leaving a polynomial in `X`.
    pub fn eval_y(&self, y0: u64) -> FpPoly {
        FpPoly::new(self.modulus, self.coeffs.iter().map(|c| c.eval(y0)).collect())
    }

    /// Specializes `X = x0`, leaving a polynomial in `Y`.
    pub fn eval_x(&self, x0: u64) -> FpPoly {
        let p = self.modulus;
        let mut acc = FpPoly::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x0) + c;
        }
        acc
    }
}

/// Lagrange interpolation through `(xs[i], ys[i])` with distinct nodes.
pub fn interpolate(p: u64, xs: &[u64], ys: &[u64]) -> FpPoly {
    assert_eq!(xs.len(), ys.len());
    // Newton divided differences, then expansion in the Newton basis.
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(dd[i], dd[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            dd[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut acc = FpPoly::zero(p);
    for i in (0..n).rev() {
        acc = &(&acc * &FpPoly::linear(p, xs[i])) + &FpPoly::constant(p, dd[i]);
    }
    acc
}

/// `Res_X(f(X), g(X, Y))` as a polynomial in `Y`, for `g` of `X`-degree 2.
///
/// Uses evaluation at `Y = 0, 1, ..., D` and interpolation when the field
/// has more than `8 deg f + 16` elements; otherwise falls back to a
/// fraction-free determinant of the Sylvester matrix over `F_l[Y]`.
pub fn resultant_in_x(f: &FpPoly, g: &FpBiPoly) -> Result<FpPoly> {
    let p = f.modulus();
    if p != g.modulus() {
        return Err(Error::ModulusMismatch(p, g.modulus()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.x_degree() != Some(2) {
        return Err(Error::Degenerate(alloc::format!(
            "X-degree {:?} after reduction, expected 2",
            g.x_degree()
        )));
    }
    let m = f.deg();
    if (p as u128) > 8 * m as u128 + 16 {
        resultant_in_x_interp(f, g)
    } else {
        Ok(resultant_in_x_sylvester(f, g))
    }
}

fn resultant_in_x_interp(f: &FpPoly, g: &FpBiPoly) -> Result<FpPoly> {
    let p = f.modulus();
    let m = f.deg();
    let bound = g.y_degree() * m;
    let lc = f.leading_coeff();
    let xs: Vec<u64> = (0..=bound as u64).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for &y0 in &xs {
        let gy = g.eval_y(y0);
        let v = match gy.degree() {
            None => 0,
            Some(k) => {
                // Correct from the actual degree k back to the formal degree 2.
                let r = resultant(f, &gy)?;
                mul_mod(r, pow_mod(lc, (2 - k) as u128, p), p)
            }
        };
        ys.push(v);
    }
    Ok(interpolate(p, &xs, &ys))
}

/// Sylvester matrix of `f` (degree m, constant in Y) and `g` (X-degree 2),
/// size `m + 2`, with determinant by Bareiss elimination over `F_l[Y]`.
fn resultant_in_x_sylvester(f: &FpPoly, g: &FpBiPoly) -> FpPoly {
    let p = f.modulus();
    let m = f.deg();
    let n = 2usize;
    let size = m + n;
    let zero = FpPoly::zero(p);
    let mut mat: Vec<Vec<FpPoly>> = vec![vec![zero.clone(); size]; size];
    // n rows of f's coefficients (highest first), then m rows of g's.
    for i in 0..n {
        for k in 0..=m {
            mat[i][i + k] = FpPoly::constant(p, f.coeff(m - k));
        }
    }
    for i in 0..m {
        for k in 0..=n {
            mat[n + i][i + k] = g.x_coeffs()[n - k].clone();
        }
    }
    bareiss_det(mat, p)
}

/// Fraction-free determinant of a square matrix over `F_l[Y]`.
pub fn bareiss_det(mut mat: Vec<Vec<FpPoly>>, p: u64) -> FpPoly {
    let size = mat.len();
    if size == 0 {
        return FpPoly::one(p);
    }
    let mut sign_flip = false;
    let mut prev = FpPoly::one(p);
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return FpPoly::zero(p),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = &(&mat[k][k] * &mat[i][j]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r7(p: u64) -> FpBiPoly {
        crate::constants::r7_mod(p)
    }

    #[test]
    fn evaluation_property() {
        let p = 101;
        let g = FpPoly::from_i64s(p, &[5, -3, 0, 7, 1]);
        for a in [0u64, 1, 17, 100] {
            assert_eq!(resultant(&FpPoly::linear(p, a), &g).unwrap(), g.eval(a));
        }
    }

    #[test]
    fn res_quadratic_f1728() {
        let f1728 = crate::constants::f1728_coeffs();
        for p in [11u64, 13, 17, 101, 1009] {
            let f = FpPoly::from_i64s(p, &f1728);
            let q = FpPoly::from_i64s(p, &[1, -1, 1]);
            assert_eq!(resultant(&q, &f).unwrap(), (64 * 27 * 7) % p);
        }
    }

    #[test]
    fn res_cubic_family_with_f7() {
        // Res_x(g(x,a), f7(x,t)) = ((a+8)t + a^2 + 3a + 9)^3
        let p = 1009;
        for (a, t) in [(3i64, 5i64), (100, 77), (-8, 2), (500, 999)] {
            let g = FpPoly::from_i64s(p, &[1, -(a + 3), a, 1]);
            let f = crate::constants::f7_at_mod(t, p);
            let base = ((a + 8) * t + a * a + 3 * a + 9).rem_euclid(p as i64) as u64;
            assert_eq!(resultant(&g, &f).unwrap(), pow_mod(base, 3, p));
        }
    }

    #[test]
    fn r7_at_zero_mod_5() {
        // ss_5 = X; Res_X(X, R7) = R7(0, Y) = Y^2 (Y^2 + 4Y + 3)^3 mod 5
        let p = 5;
        let res = resultant_in_x(&FpPoly::x(p), &r7(p)).unwrap();
        let expect = &FpPoly::from_i64s(p, &[0, 0, 1]) * &FpPoly::from_i64s(p, &[3, 4, 1]).pow(3);
        assert_eq!(res, expect);
    }

    #[test]
    fn linear_input_is_evaluation() {
        let p = 1009;
        let j0 = 321;
        let res = resultant_in_x(&FpPoly::linear(p, j0), &r7(p)).unwrap();
        assert_eq!(res, r7(p).eval_x(j0));
    }

    #[test]
    fn both_routes_agree() {
        let p = 101;
        let f = FpPoly::from_i64s(p, &[4, 9, 0, 1, 3]);
        let g = r7(p);
        let a = resultant_in_x_interp(&f, &g).unwrap();
        let b = resultant_in_x_sylvester(&f, &g);
        assert_eq!(a, b);
        for y0 in 0..20u64 {
            let r = resultant(&f, &g.eval_y(y0 * 5 + 1)).unwrap();
            assert_eq!(a.eval(y0 * 5 + 1), r);
        }
    }

    #[test]
    fn discriminant_of_cubics() {
        let p = 1_000_003;
        assert_eq!(discriminant(&FpPoly::from_i64s(p, &[1, -2, -1, 1])).unwrap(), 49);
        assert_eq!(discriminant(&FpPoly::from_i64s(p, &[1, 12, -15, 1])).unwrap(), 729 * 49);
    }
}
