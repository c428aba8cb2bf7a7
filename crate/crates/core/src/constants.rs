//! Every fixed polynomial, rational map and table used by the crate.
//!
//! Univariate tables are stored in descending order of degree, exactly as
//! they are usually printed. Bivariate data is built from these tables with
//! exact integer arithmetic, and reductions modulo a prime are derived from
//! the same tables on demand.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactalg::mpoly::{MPoly, ZxyPoly};
use crate::exactalg::numring::NumRingElem;
use crate::exactalg::ring::Ring;
use crate::ffpoly::{FpBiPoly, FpPoly};
use crate::Verdict;

/// `x^2 - x + 1`
pub const QUAD_ZERO: &[i64] = &[1, -1, 1];
/// `x^6 - 11x^5 + 30x^4 - 15x^3 - 10x^2 + 5x + 1`, the second factor of `f0`.
pub const SEXTIC_J7: &[i64] = &[1, -11, 30, -15, -10, 5, 1];
/// `x^6 + 229x^5 + 270x^4 - 1695x^3 + 1430x^2 - 235x + 1`
pub const SEXTIC_J77: &[i64] = &[1, 229, 270, -1695, 1430, -235, 1];
/// `x^3 - 8x^2 + 5x + 1`, whose roots are the `r_i`.
pub const P_CUBIC: &[i64] = &[1, -8, 5, 1];
/// Roots of `j_7` that carry `j = 1728`.
pub const F1728: &[i64] = &[1, -18, 117, -354, 570, -486, 273, -222, 174, -46, -15, 6, 1];
pub const A_SPLIT: &[i64] = &[1, -9, 32, -29, 2, 3, 1];
pub const B_SPLIT: &[i64] = &[1, -4, 1, 1];
pub const Q_Z: &[i64] = &[1, -18, 111, -298, 393];
/// `x^3 - x^2 - 2x + 1`, fixed points of `T_1` are among its roots.
pub const FIXED_CUBIC_7: &[i64] = &[1, -1, -2, 1];
/// `x^3 - 15x^2 + 12x + 1`
pub const FIXED_CUBIC_28: &[i64] = &[1, -15, 12, 1];

/// `f7(x, t)` expanded: coefficients of `t^0` and of `t^1`.
pub const F7_T0: &[i64] = &[1, -3, 6, -7, 6, -3, 1];
pub const F7_T1: &[i64] = &[0, -1, 9, -13, 4, 1, 0];

/// Factors of the coefficients of the modular relation `X^2 - a(Y) X + b(Y)`.
pub const R7_A_QUAD: &[i64] = &[1, -21, 8];
pub const R7_A_QUARTIC: &[i64] = &[1, -42, 454, -1008, -1280];
pub const R7_B_QUAD: &[i64] = &[1, 224, 448];
/// `Y^4 - 528Y^3 - 9024Y^2 - 5120Y - 1728`
pub const CORR_QUARTIC: &[i64] = &[1, -528, -9024, -5120, -1728];

pub const Z_QUAD_3: &[i64] = &[1, -3, 9];
pub const Z_QUAD_11: &[i64] = &[1, -11, 25];
pub const Z_QUAD_229: &[i64] = &[1, 229, 505];

/// `B(x, y)` as `(i, j, c)` meaning `c x^i y^j`.
pub const B_TERMS: &[(u32, u32, i64)] = &[
    (3, 0, 1),
    (2, 1, -5),
    (2, 0, 8),
    (1, 2, -8),
    (1, 1, 6),
    (1, 0, 5),
    (0, 3, -1),
    (0, 2, -5),
    (0, 1, 8),
    (0, 0, -1),
];

/// `C(a, b)` as `(i, j, c)` meaning `c a^i b^j`.
pub const C_TERMS: &[(u32, u32, i64)] = &[
    (3, 0, 1),
    (2, 1, -5),
    (2, 0, 8),
    (1, 2, -8),
    (1, 1, -43),
    (1, 0, 5),
    (0, 3, -1),
    (0, 2, -54),
    (0, 1, -41),
    (0, 0, -1),
];

/// Middle coefficient (of `t`) in `Res_x(x^2 + ax + b, f7(x, t))`, as `c a^i b^j`.
pub const LEMMA_T1_TERMS: &[(u32, u32, i64)] = &[
    (5, 1, -1),
    (5, 0, 1),
    (4, 2, 4),
    (4, 0, 9),
    (3, 3, 13),
    (3, 2, 23),
    (3, 1, 16),
    (3, 0, 13),
    (2, 4, 9),
    (2, 3, 30),
    (2, 2, 78),
    (2, 1, -4),
    (2, 0, 4),
    (1, 5, 1),
    (1, 4, -6),
    (1, 3, 82),
    (1, 2, 48),
    (1, 1, -33),
    (1, 0, -1),
    (0, 5, -12),
    (0, 4, 24),
    (0, 3, 26),
    (0, 2, 2),
    (0, 1, -14),
];

/// Expanded octic `F(u, v)`: entry `k` is the coefficient of `u^k`, a
/// polynomial in `v` in ascending order.
pub const LEMMA2_ROWS: &[&[i64]] = &[
    &[-49],
    &[0, 4018, 8624, 5915, 1904, 322, 28, 1],
    &[0, 8624, 5915, 1904, 322, 28, 1],
    &[0, 5915, 1904, 322, 28, 1],
    &[0, 1904, 322, 28, 1],
    &[0, 322, 28, 1],
    &[0, 28, 1],
    &[0, 1],
];

/// Coefficients of `A_8, A_7, ..., A_2` and the constant in the symmetric form of `F(u, v)`.
pub const LEMMA2_A_COEFFS: &[(u32, i64)] =
    &[(8, 1), (7, 28), (6, 322), (5, 1904), (4, 5915), (3, 8624), (2, 4018)];
pub const LEMMA2_CONSTANT: i64 = -49;

/// A class polynomial together with the minimal polynomial of the level-7
/// modular unit it produces.
#[derive(Clone, Copy, Debug)]
pub struct ClassPolyEntry {
    pub d: u32,
    pub class_poly: &'static [i64],
    pub minpoly_z: &'static [i64],
}

pub const CLASS_POLYS: &[ClassPolyEntry] = &[
    ClassPolyEntry { d: 3, class_poly: &[1, 0], minpoly_z: &[1, -3, 9] },
    ClassPolyEntry { d: 12, class_poly: &[1, -54000], minpoly_z: &[1, -5, 25] },
    ClassPolyEntry {
        d: 20,
        class_poly: &[1, -1264000, -681472000],
        minpoly_z: &[1, -2, -9, -50, 305],
    },
    ClassPolyEntry {
        d: 52,
        class_poly: &[1, -6896880000, -567663552000000],
        minpoly_z: &[1, -58, 1599, -17770, 67825],
    },
    ClassPolyEntry { d: 19, class_poly: &[1, 884736], minpoly_z: &[1, -11, 73] },
];

/// A minimal polynomial `P_d` of a CM value of the level-7 Hauptmodul, and
/// its printed factorization modulo `l`.
#[derive(Clone, Copy, Debug)]
pub struct PdEntry {
    pub d: u32,
    pub l: u64,
    pub coeffs: &'static [i64],
    /// Monic factors (descending coefficients) with multiplicity.
    pub factors_mod_l: &'static [(&'static [i64], u32)],
}

pub const P_TABLE: &[PdEntry] = &[
    PdEntry {
        d: 20,
        l: 5,
        coeffs: &[1, -2, -19, -10, 530, -1430, 1377, -302, -250, 90, 25, -10, 1],
        factors_mod_l: &[(&[1, 0, 2, 1], 2), (&[1, 4, 3, 1], 2)],
    },
    PdEntry {
        d: 52,
        l: 13,
        coeffs: &[1, -58, 1645, -20442, 112498, -250342, 247929, -92782, -6530, 6962, 1073, 46, 1],
        factors_mod_l: &[
            (&[1, 2], 2),
            (&[1, 4], 2),
            (&[1, 5], 2),
            (&[1, 7], 2),
            (&[1, 8], 2),
            (&[1, 10], 2),
        ],
    },
    PdEntry {
        d: 68,
        l: 17,
        coeffs: &[
            1, -12, 1550, -36832, 391173, -2647784, 14397706, -66497132, 241323226, -626494580,
            1111176102, -1314407496, 999381181, -446384584, 89881766, -2645876, 7200858, -5340652,
            495178, 235800, -34875, 3744, 1550, -12, 1,
        ],
        factors_mod_l: &[
            (&[1, 4, 10, 1], 2),
            (&[1, 16, 15, 1], 2),
            (&[1, 6, 8, 1], 2),
            (&[1, 2, 12, 1], 2),
        ],
    },
    PdEntry {
        d: 83,
        l: 83,
        coeffs: &[
            1, -137, 6765, -116316, 953694, -4517362, 14472274, -31178560, 43709339, -38751299,
            20853979, -6393600, 1092050, -92082, -69346, 25892, 4589, 119, 1,
        ],
        factors_mod_l: &[
            (&[1, 18], 2),
            (&[1, 22], 2),
            (&[1, 27], 2),
            (&[1, 35], 2),
            (&[1, 42], 2),
            (&[1, 48], 2),
            (&[1, 53], 2),
            (&[1, 63], 2),
            (&[1, 80], 2),
        ],
    },
];

/// Minimal polynomial of the Fricke Hauptmodul at the CM point for `d = 164`.
pub const PSI7: &[i64] =
    &[1, -464, 125056, -5914240, 78235776, 38845440, 527245312, 14082048, 20123648];
pub const PSI7_FACTORS_MOD_41: &[(&[i64], u32)] =
    &[(&[1, 1], 1), (&[1, 14], 1), (&[1, 8], 2), (&[1, 29], 2), (&[1, 31], 2)];

/// Printed factorization of the level-7 Fricke supersingular polynomial for `p = 41`.
pub const SS41_7STAR_FACTORS: &[&[i64]] = &[
    &[1, 0],
    &[1, 1],
    &[1, 8],
    &[1, 12],
    &[1, 13],
    &[1, 14],
    &[1, 17],
    &[1, 29],
    &[1, 31],
    &[1, 33],
    &[1, 39],
    &[1, 1, 18],
    &[1, 37, 26],
];

/// Descending table to ascending vector.
pub fn asc(desc: &[i64]) -> Vec<i64> {
    desc.iter().rev().copied().collect()
}

/// Reduction of a descending integer table modulo `p`.
pub fn fp(p: u64, desc: &[i64]) -> FpPoly {
    FpPoly::from_i64s(p, &asc(desc))
}

/// `f1728` in ascending order.
pub fn f1728_coeffs() -> Vec<i64> {
    asc(F1728)
}

fn z1(v: usize, desc: &[i64]) -> ZxyPoly {
    MPoly::univariate(v, &asc(desc))
}

/// `f7(x, t)` at an integer `t`, as a univariate integer polynomial in variable 0.
pub fn expand_f7(t: &BigInt) -> ZxyPoly {
    let lo = z1(0, F7_T0);
    let hi = z1(0, F7_T1);
    lo.add(&hi.scale(t))
}

/// `f7(x, t)` modulo `p` for a signed integer `t`.
pub fn f7_at_mod(t: i64, p: u64) -> FpPoly {
    f7_at_residue(crate::ffpoly::fp::from_i64(t, p), p)
}

/// `f7(x, t)` modulo `p` for a residue `t`.
pub fn f7_at_residue(t: u64, p: u64) -> FpPoly {
    &fp(p, F7_T0) + &fp(p, F7_T1).scale(t)
}

/// `X^2 - a(Y) X + b(Y)` modulo `p` (index in `X`, polynomial in `Y`).
pub fn r7_mod(p: u64) -> FpBiPoly {
    let y = FpPoly::x(p);
    let a = &(&y * &fp(p, R7_A_QUAD)) * &fp(p, R7_A_QUARTIC);
    let b = &y.pow(2) * &fp(p, R7_B_QUAD).pow(3);
    FpBiPoly::new(p, alloc::vec![b, -&a, FpPoly::one(p)])
}

/// Numerator and denominator of `j_7(x)` modulo `p`.
pub fn j7_mod(p: u64) -> (FpPoly, FpPoly) {
    let f0 = f0_mod(p);
    let x = FpPoly::x(p);
    let xm1 = FpPoly::linear(p, 1);
    let den = &(&x.pow(7) * &xm1.pow(7)) * &fp(p, P_CUBIC);
    (f0.pow(3), den)
}

/// Numerator and denominator of `j_{7,7}(x)` modulo `p`.
pub fn j77_mod(p: u64) -> (FpPoly, FpPoly) {
    let num = (&fp(p, QUAD_ZERO) * &fp(p, SEXTIC_J77)).pow(3);
    let den = &(&FpPoly::x(p) * &FpPoly::linear(p, 1)) * &fp(p, P_CUBIC).pow(7);
    (num, den)
}

/// `f0 = (x^2 - x + 1)(x^6 - 11x^5 + ...)` modulo `p`.
pub fn f0_mod(p: u64) -> FpPoly {
    &fp(p, QUAD_ZERO) * &fp(p, SEXTIC_J7)
}

/// `G(x, j)` at a residue `j`: `j77_num(x) - j x(x-1)(x^3 - 8x^2 + 5x + 1)^7`.
pub fn g_at_mod(j: u64, p: u64) -> FpPoly {
    let (num, den) = j77_mod(p);
    &num - &den.scale(j)
}

/// Fractional linear map `x -> (a x + b) / (c x + d)` over `Q(r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    pub m: [[NumRingElem; 2]; 2],
}

impl Mobius {
    pub fn compose(&self, o: &Mobius) -> Mobius {
        let a = &self.m;
        let b = &o.m;
        Mobius {
            m: core::array::from_fn(|i| {
                core::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j])))
            }),
        }
    }

    /// True when the matrix is a nonzero scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let m = &self.m;
        m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1] && !m[0][0].is_zero()
    }
}

/// `phi(x) = 1/(1 - x)`, the involutions `T_i(x) = (x - r_i)/((1 - r_i)x - 1)`
/// with `r_1 = r`, `r_2 = -r^2 + 7r + 2`, `r_3 = r^2 - 8r + 6`, and
/// `A(z) = (8z - 15)/(z - 8)`.
#[derive(Clone, Debug)]
pub struct MapTable {
    pub phi: Mobius,
    pub t: [Mobius; 3],
    pub a_map: Mobius,
}

pub fn maps() -> MapTable {
    let n = |v: i64| NumRingElem::from_i64(v);
    let roots = [NumRingElem::r(), NumRingElem::from_ints(2, 7, -1), NumRingElem::from_ints(6, -8, 1)];
    let t = roots.map(|ri| Mobius {
        m: [[n(1), ri.neg()], [n(1).sub(&ri), n(-1)]],
    });
    MapTable {
        phi: Mobius { m: [[n(0), n(1)], [n(-1), n(1)]] },
        t,
        a_map: Mobius { m: [[n(8), n(-15)], [n(1), n(-8)]] },
    }
}

/// All bivariate and univariate polynomials as exact integer polynomials.
///
/// Variable 0 is the first named variable and variable 1 the second, so
/// `r7` is in `(X, Y)`, `f7` in `(x, t)`, `g`, `h` in `(x, j)`, and `f`,
/// `g1` in `(z, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PaperPolynomials {
    pub r7: ZxyPoly,
    pub f7: ZxyPoly,
    pub b: ZxyPoly,
    pub c: ZxyPoly,
    pub g_cubic: ZxyPoly,
    pub p_cubic: ZxyPoly,
    pub j7_num: ZxyPoly,
    pub j7_den: ZxyPoly,
    pub j77_num: ZxyPoly,
    pub j77_den: ZxyPoly,
    pub g: ZxyPoly,
    pub h: ZxyPoly,
    pub f: ZxyPoly,
    pub g1: ZxyPoly,
    pub f0: ZxyPoly,
    pub sextic: ZxyPoly,
    pub f1728: ZxyPoly,
    pub a_poly: ZxyPoly,
    pub b_poly: ZxyPoly,
    pub q_z: ZxyPoly,
    pub j_rat_num: ZxyPoly,
    pub j_rat_den: ZxyPoly,
    pub j7_rat_num: ZxyPoly,
    pub j7_rat_den: ZxyPoly,
}

impl PaperPolynomials {
    pub fn new() -> Self {
        let x = ZxyPoly::var(0);
        let v1 = ZxyPoly::var(1);
        let xm1 = z1(0, &[1, -1]);
        let y = ZxyPoly::var(1);
        let a_y = y.mul(&z1(1, R7_A_QUAD)).mul(&z1(1, R7_A_QUARTIC));
        let b_y = y.pow(2).mul(&z1(1, R7_B_QUAD).pow(3));
        let r7 = x.pow(2).sub(&x.mul(&a_y)).add(&b_y);

        let p_cubic = z1(0, P_CUBIC);
        let quad = z1(0, QUAD_ZERO);
        let f7 = quad.pow(3).sub(&v1.mul(&x).mul(&xm1).mul(&p_cubic));

        let sextic = z1(0, SEXTIC_J7);
        let f0 = quad.mul(&sextic);
        let j7_num = f0.pow(3);
        let j7_den = x.pow(7).mul(&xm1.pow(7)).mul(&p_cubic);
        let j77_num = quad.mul(&z1(0, SEXTIC_J77)).pow(3);
        let j77_den = x.mul(&xm1).mul(&p_cubic.pow(7));
        let g = j77_num.sub(&v1.mul(&j77_den));
        let h = j7_num.sub(&v1.mul(&j7_den));

        let zm8 = z1(0, &[1, -8]);
        let j_rat_num = z1(0, Z_QUAD_3).mul(&z1(0, Z_QUAD_11).pow(3));
        let j7_rat_num = z1(0, Z_QUAD_3).mul(&z1(0, Z_QUAD_229).pow(3));
        let f = j_rat_num.sub(&v1.mul(&zm8));
        let g1 = j7_rat_num.sub(&v1.mul(&zm8.pow(7)));

        // g(x, a) = x^3 + a x^2 - (a + 3) x + 1
        let g_cubic = x
            .pow(3)
            .add(&v1.mul(&x.pow(2)))
            .sub(&v1.add(&ZxyPoly::from_i64(3)).mul(&x))
            .add(&ZxyPoly::one());

        PaperPolynomials {
            r7,
            f7,
            b: ZxyPoly::from_terms(B_TERMS),
            c: ZxyPoly::from_terms(C_TERMS),
            g_cubic,
            p_cubic,
            j7_num,
            j7_den,
            j77_num,
            j77_den,
            g,
            h,
            f,
            g1,
            f0,
            sextic,
            f1728: z1(0, F1728),
            a_poly: z1(0, A_SPLIT),
            b_poly: z1(0, B_SPLIT),
            q_z: z1(0, Q_Z),
            j_rat_num,
            j_rat_den: zm8.clone(),
            j7_rat_num,
            j7_rat_den: zm8.pow(7),
        }
    }
}

impl Default for PaperPolynomials {
    fn default() -> Self {
        Self::new()
    }
}

/// Re-verifies every redundancy among the stored constants by exact expansion.
pub fn self_check(pp: &PaperPolynomials) -> Verdict {
    let mut bad: Vec<String> = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            bad.push(String::from(name));
        }
    };
    let x = ZxyPoly::var(0);
    let xm1 = z1(0, &[1, -1]);

    // f7 factored form against the expanded coefficient rows.
    let expanded = z1(0, F7_T0).add(&ZxyPoly::var(1).mul(&z1(0, F7_T1)));
    expect("f7 expansion", pp.f7 == expanded);
    let special = [
        (0i64, z1(0, QUAD_ZERO).pow(3)),
        (-1, z1(0, FIXED_CUBIC_7).pow(2)),
        (27, z1(0, FIXED_CUBIC_28).pow(2)),
    ];
    for (t, want) in special {
        let at = pp.f7.substitute(1, &ZxyPoly::from_i64(t));
        expect(&format!("f7(x, {t})"), at == want && expand_f7(&BigInt::from(t)) == want);
    }

    // f1728 = A^2 - 28 x^2 (x-1)^2 B^2
    let split = pp
        .a_poly
        .pow(2)
        .sub(&x.pow(2).mul(&xm1.pow(2)).mul(&pp.b_poly.pow(2)).scale(&BigInt::from(28)));
    expect("f1728 = A^2 - 28x^2(x-1)^2B^2", pp.f1728 == split);

    // q(z) = (z^2 - 9z + 29)^2 - 28(z - 4)^2
    let qz = z1(0, &[1, -9, 29]).pow(2).sub(&z1(0, &[1, -4]).pow(2).scale(&BigInt::from(28)));
    expect("q(z) = (z^2-9z+29)^2 - 28(z-4)^2", pp.q_z == qz);

    // f1728 = x^4 (x-1)^4 q((x^3 - 3x + 1)/(x(x-1)))
    let num = z1(0, &[1, 0, -3, 1]);
    let den = x.mul(&xm1);
    expect("f1728 via q(z)", pp.q_z.substitute_fraction(0, &num, &den, 4) == pp.f1728);

    // The two fixed-point cubics have discriminants 7^2 and 3^6 7^2.
    for (table, want) in [(FIXED_CUBIC_7, 49i64), (FIXED_CUBIC_28, 729 * 49)] {
        let d = crate::exactalg::mpoly::discriminant_monic(&z1(0, table), 0);
        expect(&format!("disc {:?}", table), d == ZxyPoly::from_i64(want));
    }

    // B(x, y) regrouped by powers of x.
    let b_grouped = x
        .pow(3)
        .add(&z1(1, &[-5, 8]).mul(&x.pow(2)))
        .add(&z1(1, &[-8, 6, 5]).mul(&x))
        .add(&z1(1, &[-1, -5, 8, -1]));
    expect("B(x, y)", pp.b == b_grouped);

    // P_d = x^(2h) (x-1)^(2h) m_d((x^3 - 3x + 1)/(x(x-1))) where both are tabulated.
    for (d, entry) in [(20u32, 0usize), (52, 1)] {
        let m = CLASS_POLYS.iter().find(|e| e.d == d).expect("tabulated");
        let mz = z1(0, m.minpoly_z);
        let deg = (m.minpoly_z.len() - 1) as u32;
        let pd = mz.substitute_fraction(0, &num, &den, deg);
        expect(&format!("P_{d} from its z-minimal polynomial"), pd == z1(0, P_TABLE[entry].coeffs));
    }

    // Degrees of the P_d table are 6 h(-d).
    for e in P_TABLE {
        let h = crate::classnum::class_number(
            &crate::classnum::Discriminant::new(-(e.d as i64)).expect("valid discriminant"),
        );
        expect(&format!("deg P_{}", e.d), e.coeffs.len() as u64 - 1 == 6 * h);
    }
    expect("deg Psi7", PSI7.len() == 9);

    // Mobius maps: phi^3 and T_i^2 are scalar matrices.
    let mt = maps();
    expect("phi^3 scalar", mt.phi.compose(&mt.phi).compose(&mt.phi).is_scalar());
    for (i, t) in mt.t.iter().enumerate() {
        expect(&format!("T_{}^2 scalar", i + 1), t.compose(t).is_scalar());
    }
    expect("A^2 scalar", mt.a_map.compose(&mt.a_map).is_scalar());

    let h19 = CLASS_POLYS.iter().find(|e| e.d == 19).expect("tabulated");
    expect("H_-19 = X + 96^3", h19.class_poly[1] == 96i64.pow(3));

    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("constant mismatch: {}", bad.join(", ")))
    }
}

/// Reduces a polynomial in variable 0 modulo `p`.
pub fn to_fp(poly: &ZxyPoly, p: u64) -> FpPoly {
    let n = poly.degree_in(0).map_or(0, |d| d as usize + 1);
    let mut c = alloc::vec![0u64; n];
    let pb = BigInt::from(p);
    for (e, v) in poly.terms() {
        debug_assert!(e[1..].iter().all(|&k| k == 0), "univariate input expected");
        let r = ((v % &pb) + &pb) % &pb;
        c[e[0] as usize] = r.to_u64().expect("reduced residue fits");
    }
    FpPoly::new(p, c)
}
