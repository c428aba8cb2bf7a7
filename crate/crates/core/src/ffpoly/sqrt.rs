use alloc::format;

use super::factor::squarefree_decomposition;
use super::fp::sqrt_mod;
use super::poly::FpPoly;
use crate::error::{Error, Result};

/// Monic `g` with `g^2 = f / lc(f)`, by halving square-free multiplicities.
pub fn poly_sqrt(f: &FpPoly) -> Result<FpPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.modulus();
    let mut g = FpPoly::one(p);
    for (h, m) in squarefree_decomposition(f) {
        if m % 2 == 1 {
            return Err(Error::NotSquare(format!("factor {h} has odd multiplicity {m}")));
        }
        g = &g * &h.pow((m / 2) as u64);
    }
    Ok(g)
}

/// `h` with `h^2 = f` exactly; the leading coefficient must be a square too.
pub fn poly_sqrt_exact(f: &FpPoly) -> Result<FpPoly> {
    let g = poly_sqrt(f)?;
    let lc = f.leading_coeff();
    match sqrt_mod(lc, f.modulus()) {
        Some(s) => Ok(g.scale(s)),
        None => Err(Error::NotSquare(format!("leading coefficient {lc} is a nonresidue"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_square() {
        let p = 7;
        let a = FpPoly::from_i64s(p, &[1, 1]);
        let b = FpPoly::from_i64s(p, &[3, 1]);
        let f = &a.pow(2) * &b.pow(4);
        assert_eq!(poly_sqrt(&f).unwrap(), &a * &b.pow(2));
    }

    #[test]
    fn f7_at_27_mod_11() {
        // f7(x, 27) = x^6 - 30x^5 + 249x^4 - 358x^3 + 114x^2 + 24x + 1
        let f = FpPoly::from_i64s(11, &[1, 24, 114, -358, 249, -30, 1]);
        assert_eq!(poly_sqrt(&f).unwrap(), FpPoly::from_i64s(11, &[1, 1, -4, 1]));
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            poly_sqrt(&FpPoly::from_i64s(7, &[1, 0, 1])),
            Err(Error::NotSquare(_))
        ));
        // 3 is a nonresidue mod 7
        let f = FpPoly::from_i64s(7, &[3, 6, 3]);
        assert!(poly_sqrt(&f).is_ok());
        assert!(poly_sqrt_exact(&f).is_err());
        let f = FpPoly::from_i64s(7, &[2, 4, 2]);
        let h = poly_sqrt_exact(&f).unwrap();
        assert_eq!(&h * &h, f);
    }
}
