//! Registry of exact polynomial identities, each checked by literal expansion.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::mpoly::{discriminant_monic, resultant_monic, MPoly, ZxyPoly};
use super::numring::NumRingElem;
use super::ring::Ring;
use super::upoly::QPoly;
use crate::constants::{self, PaperPolynomials};
use crate::error::{Error, Result};
use crate::Verdict;

type NPoly = MPoly<NumRingElem>;

/// One registry entry.
#[derive(Clone, Copy, Debug)]
pub struct IdentityCase {
    pub id: &'static str,
    pub statement: &'static str,
    check: fn(&PaperPolynomials) -> Vec<Residual>,
}

/// A named comparison and its nonzero difference, if any.
#[derive(Clone, Debug)]
pub struct Residual {
    pub label: String,
    pub difference: Option<String>,
}

#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub verdict: Verdict,
    pub residuals: Vec<Residual>,
}

fn cmp_z(label: &str, lhs: &ZxyPoly, rhs: &ZxyPoly) -> Residual {
    let d = lhs.sub(rhs);
    Residual { label: label.to_string(), difference: (!d.is_zero()).then(|| d.to_string()) }
}

fn cmp_n(label: &str, lhs: &NPoly, rhs: &NPoly) -> Residual {
    let d = lhs.sub(rhs);
    Residual { label: label.to_string(), difference: (!d.is_zero()).then(|| d.to_string()) }
}

fn zi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn uni(v: usize, asc: &[i64]) -> ZxyPoly {
    ZxyPoly::univariate(v, asc)
}

fn uni_desc(v: usize, desc: &[i64]) -> ZxyPoly {
    ZxyPoly::univariate(v, &constants::asc(desc))
}

fn lift(p: &ZxyPoly) -> NPoly {
    p.map_coeffs(|c| NumRingElem::from_rational(BigRational::from_integer(c.clone())))
}

fn nconst(e: NumRingElem) -> NPoly {
    NPoly::constant(e)
}

fn r_elem() -> NumRingElem {
    NumRingElem::r()
}

/// `x - r` and `(1 - r)x - 1`, numerator and denominator of `T_1(x)`.
fn t1_parts() -> (NPoly, NPoly) {
    let x = NPoly::var(0);
    let r = nconst(r_elem());
    let one = NPoly::one();
    (x.sub(&r), one.sub(&r).mul(&x).sub(&one))
}

fn disc_f7(pp: &PaperPolynomials) -> Vec<Residual> {
    let disc = discriminant_monic(&pp.f7, 0);
    let t = ZxyPoly::var(1);
    let rhs = t
        .pow(4)
        .mul(&uni(1, &[1, 1]).pow(3))
        .mul(&uni(1, &[-27, 1]).pow(3))
        .scale(&zi(7).pow(4));
    alloc::vec![cmp_z("disc_x f7 = 7^4 t^4 (t+1)^3 (t-27)^3", &disc, &rhs)]
}

fn res_g_f7(pp: &PaperPolynomials) -> Vec<Residual> {
    // g in (x, a), f7 in (x, t) with t moved to variable 2.
    let f7 = pp.f7.rename([0, 2, 1, 3]);
    let res = resultant_monic(&pp.g_cubic, &f7, 0);
    let a = ZxyPoly::var(1);
    let t = ZxyPoly::var(2);
    let base = a.add(&ZxyPoly::from_i64(8)).mul(&t).add(&uni(1, &[9, 3, 1]));
    alloc::vec![cmp_z("Res_x(g(x,a), f7(x,t)) = ((a+8)t + a^2 + 3a + 9)^3", &res, &base.pow(3))]
}

fn lemma_b_disc(pp: &PaperPolynomials) -> Vec<Residual> {
    // x^2 + a x + b with (x, a, b, t) = variables (0, 1, 2, 3).
    let x = ZxyPoly::var(0);
    let a = ZxyPoly::var(1);
    let b = ZxyPoly::var(2);
    let quad = x.pow(2).add(&a.mul(&x)).add(&b);
    let f7 = pp.f7.rename([0, 3, 1, 2]);
    let res = resultant_monic(&quad, &f7, 0);

    let to_ab = [1, 2, 0, 3];
    let c = pp.c.rename(to_ab);
    let t2 = b.mul(&b.add(&ZxyPoly::one()).add(&a)).mul(&c).neg();
    let t1 = ZxyPoly::from_terms(constants::LEMMA_T1_TERMS).rename(to_ab);
    let sextic_base = a
        .pow(2)
        .add(&a.mul(&b))
        .add(&b.pow(2))
        .add(&a)
        .sub(&b)
        .add(&ZxyPoly::one());
    let t0 = sextic_base.pow(3);
    let display = ZxyPoly::from_coeffs_in(3, &[t0.clone(), t1.clone(), t2.clone()]);

    let disc = t1.pow(2).sub(&t2.mul(&t0).scale(&zi(4)));
    let f_ab = a.mul(&b).add(&b.pow(2)).add(&a).add(&b.scale(&zi(3))).add(&ZxyPoly::one());
    let bb = pp.b.rename(to_ab);
    let want = a.pow(2).sub(&b.scale(&zi(4))).mul(&f_ab.pow(2)).mul(&bb.pow(2));
    alloc::vec![
        cmp_z("Res_x(x^2 + ax + b, f7) term by term", &res, &display),
        cmp_z("discriminant in t = (a^2-4b)(ab+b^2+a+3b+1)^2 B(a,b)^2", &disc, &want),
    ]
}

fn c_factor(pp: &PaperPolynomials) -> Vec<Residual> {
    let a = NPoly::var(0);
    let b = NPoly::var(1);
    let n = |c0, c1, c2| nconst(NumRingElem::from_ints(c0, c1, c2));
    let f1 = n(-1, 1, 0).mul(&b).add(&n(-2, -7, 1)).sub(&a);
    let f2 = n(-1, -7, 1).mul(&b).add(&n(6, -8, 1)).add(&a);
    let f3 = n(5, -8, 1).mul(&b).add(&n(0, -1, 0)).sub(&a);
    let prod = f1.mul(&f2).mul(&f3);
    let mut out = alloc::vec![cmp_n("C(a,b) = product of three linear factors over Q(r)", &lift(&pp.c), &prod)];
    // The three factors are the Galois orbit of a -> (r - 1)b - r^sigma.
    let r = r_elem();
    let rs = r.sigma();
    let orbit = nconst(r.sub(&NumRingElem::one())).mul(&b).sub(&nconst(rs)).sub(&a);
    out.push(cmp_n("first factor = (r-1)b - r^sigma - a", &f1, &orbit));
    out
}

fn f7_t1(pp: &PaperPolynomials) -> Vec<Residual> {
    let (u, w) = t1_parts();
    let f7 = lift(&pp.f7);
    let lhs = f7.substitute_fraction(0, &u, &w, 6);
    let seven = BigRational::from_integer(zi(7));
    let eta_num = NumRingElem::from_ints(-1, -15, 19);
    let eta = NumRingElem::new(
        &eta_num.c[0] / &seven,
        &eta_num.c[1] / &seven,
        &eta_num.c[2] / &seven,
    );
    let scale = eta.mul(&r_elem().add(&NumRingElem::from_i64(2)).pow(3));
    alloc::vec![cmp_n("((1-r)x-1)^6 f7(T1(x), t) = eta (r+2)^3 f7(x, t)", &lhs, &f7.scale(&scale))]
}

fn f7_phi(pp: &PaperPolynomials) -> Vec<Residual> {
    let lhs = pp.f7.substitute_fraction(0, &ZxyPoly::one(), &uni(0, &[1, -1]), 6);
    alloc::vec![cmp_z("(x-1)^6 f7(phi(x), t) = f7(x, t)", &lhs, &pp.f7)]
}

fn j7_ti(pp: &PaperPolynomials) -> Vec<Residual> {
    let x = NPoly::var(0);
    let one = NPoly::one();
    let maps = constants::maps();
    let j77n = lift(&pp.j77_num);
    let j77d = lift(&pp.j77_den);
    let j7n = lift(&pp.j7_num);
    let j7d = lift(&pp.j7_den);
    let deg_n = pp.j7_num.degree_in(0).unwrap_or(0);
    let deg_d = pp.j7_den.degree_in(0).unwrap_or(0);
    let mut out = Vec::new();
    for (i, t) in maps.t.iter().enumerate() {
        let u = nconst(t.m[0][0].clone()).mul(&x).add(&nconst(t.m[0][1].clone()));
        let w = nconst(t.m[1][0].clone()).mul(&x).add(&nconst(t.m[1][1].clone()));
        let nh = j7n.substitute_fraction(0, &u, &w, deg_n);
        let dh = j7d.substitute_fraction(0, &u, &w, deg_d);
        let lhs = nh.mul(&j77d);
        let rhs = j77n.mul(&dh).mul(&w.pow(deg_n - deg_d));
        out.push(cmp_n(&format!("j7(T{}(x)) = j77(x), cleared", i + 1), &lhs, &rhs));
    }
    let _ = one;
    out
}

/// Degree box of `Res_h(G(h, X), f7(h, Y))` read off the Sylvester matrix:
/// `deg_h f7` rows carry `G` (linear in `X`) and `deg_h G` rows carry `f7`
/// (linear in `Y`).
pub fn res_g_f7_r7_degree_box(pp: &PaperPolynomials) -> (u32, u32) {
    let dg = pp.g.degree_in(0).unwrap_or(0);
    let df = pp.f7.degree_in(0).unwrap_or(0);
    (df * pp.g.degree_in(1).unwrap_or(0), dg * pp.f7.degree_in(1).unwrap_or(0))
}

/// Grid side used for the evaluation proof.
pub const RES_GRID: i64 = 60;

fn res_g_f7_r7(pp: &PaperPolynomials) -> Vec<Residual> {
    let (bx, by) = res_g_f7_r7_degree_box(pp);
    let rhs_box = (3 * pp.r7.degree_in(0).unwrap_or(0), 3 * pp.r7.degree_in(1).unwrap_or(0));
    let mut out = Vec::new();
    let need = bx.max(by).max(rhs_box.0).max(rhs_box.1) as i64;
    if RES_GRID <= need {
        out.push(Residual {
            label: "grid exceeds degree box".to_string(),
            difference: Some(format!("grid {RES_GRID} <= degree bound {need}")),
        });
        return out;
    }
    let scale = zi(7).pow(42);
    let mut first_bad: Option<String> = None;
    let mut bad = 0usize;
    for xv in 0..RES_GRID {
        let gx = pp.g.substitute(1, &ZxyPoly::from_i64(xv));
        let r7x = pp.r7.substitute(0, &ZxyPoly::from_i64(xv));
        for yv in 0..RES_GRID {
            let fy = pp.f7.substitute(1, &ZxyPoly::from_i64(yv));
            // f7 is monic in h and deg_h f7 * deg_h G is even, so Res(G, f7) = Res(f7, G).
            let lhs = resultant_monic(&fy, &gx, 0).coeff(&[0; 4]);
            let r = r7x.substitute(1, &ZxyPoly::from_i64(yv)).coeff(&[0; 4]);
            let rhs = &scale * r.pow(3);
            if lhs != rhs {
                bad += 1;
                first_bad.get_or_insert_with(|| format!("(X, Y) = ({xv}, {yv}): lhs - rhs = {}", lhs - rhs));
            }
        }
    }
    out.push(Residual {
        label: format!(
            "Res_h(G(h,X), f7(h,Y)) = 7^42 R7(X,Y)^3 on a {RES_GRID}x{RES_GRID} grid (degree box {bx}x{by})"
        ),
        difference: first_bad.map(|s| format!("{bad} grid points differ; first at {s}")),
    });
    out
}

fn epsilon() -> NumRingElem {
    let r = r_elem();
    r.pow(8).mul(&r.sub(&NumRingElem::one()).pow(8))
}

fn g_t1_h(pp: &PaperPolynomials) -> Vec<Residual> {
    let (u, w) = t1_parts();
    let lhs = lift(&pp.g).substitute_fraction(0, &u, &w, 24);
    let eps = epsilon();
    let scale = eps.mul(&NumRingElem::from_rational(BigRational::from_integer(zi(7).pow(14))));
    let printed = nconst(NumRingElem::from_ints(-56645954512, -290993856257, 413283046371));
    alloc::vec![
        cmp_n("((1-r)x-1)^24 G(T1(x), j) = 7^14 eps H(x, j)", &lhs, &lift(&pp.h).scale(&scale)),
        cmp_n("eps = r^8 (r-1)^8 in the basis 1, r, r^2", &nconst(eps), &printed),
    ]
}

fn g_cubic_t1(pp: &PaperPolynomials) -> Vec<Residual> {
    let (u, w) = t1_parts();
    let lhs = lift(&pp.g_cubic).substitute_fraction(0, &u, &w, 3);
    let a = ZxyPoly::var(1);
    let a8 = a.add(&ZxyPoly::from_i64(8));
    let c2 = uni(1, &[15, 8]);
    let c1 = uni(1, &[-9, 5]);
    let bracket = ZxyPoly::from_coeffs_in(0, &[a8.clone(), c1.clone(), c2.neg(), a8.clone()]);
    let r = r_elem();
    let lead = r.mul(&NumRingElem::one().sub(&r));
    alloc::vec![
        cmp_n(
            "((1-r)x-1)^3 g(T1(x), a) = r(1-r)((a+8)x^3 - (8a+15)x^2 + (5a-9)x + (a+8))",
            &lhs,
            &lift(&bracket).scale(&lead),
        ),
        cmp_z("5a - 9 = (8a + 15) - 3(a + 8)", &c1, &c2.sub(&a8.scale(&zi(3)))),
    ]
}

fn f1728_split(pp: &PaperPolynomials) -> Vec<Residual> {
    let x = ZxyPoly::var(0);
    let xm1 = uni(0, &[-1, 1]);
    let rhs = pp
        .a_poly
        .pow(2)
        .sub(&x.pow(2).mul(&xm1.pow(2)).mul(&pp.b_poly.pow(2)).scale(&zi(28)));
    let one = ZxyPoly::one();
    let den = uni(0, &[1, -1]);
    alloc::vec![
        cmp_z("f1728 = A^2 - 28x^2(x-1)^2 B^2", &pp.f1728, &rhs),
        cmp_z("(1-x)^6 A(phi(x)) = A(x)", &pp.a_poly.substitute_fraction(0, &one, &den, 6), &pp.a_poly),
        cmp_z("(1-x)^3 B(phi(x)) = -B(x)", &pp.b_poly.substitute_fraction(0, &one, &den, 3), &pp.b_poly.neg()),
    ]
}

fn g1_to_f(pp: &PaperPolynomials) -> Vec<Residual> {
    let num = uni(0, &[-15, 8]);
    let den = uni(0, &[-8, 1]);
    let lhs = pp.g1.substitute_fraction(0, &num, &den, 8);
    alloc::vec![cmp_z("(z-8)^8 G1((8z-15)/(z-8), j) = 7^14 F(z, j)", &lhs, &pp.f.scale(&zi(7).pow(14)))]
}

fn split_quadratic(pp: &PaperPolynomials) -> Vec<Residual> {
    // (x, t, z) = variables (0, 1, 2)
    let x = ZxyPoly::var(0);
    let t = ZxyPoly::var(1);
    let z = ZxyPoly::var(2);
    let three = ZxyPoly::from_i64(3);
    let zp = t.add(&three).sub(&z);
    let cubic = |s: &ZxyPoly| {
        x.pow(3)
            .sub(&s.mul(&x.pow(2)))
            .add(&s.sub(&three).mul(&x))
            .add(&ZxyPoly::one())
    };
    let prod = cubic(&z).mul(&cubic(&zp));
    let modulus = z
        .pow(2)
        .sub(&t.add(&three).mul(&z))
        .add(&t.scale(&zi(8)))
        .add(&ZxyPoly::from_i64(9));
    let (_, rem) = prod.div_rem_monic(2, &modulus);
    let mut out = alloc::vec![cmp_z("f7 = (x^3 - z x^2 + (z-3)x + 1)(x^3 - z' x^2 + (z'-3)x + 1)", &rem, &pp.f7)];
    let (_, zz) = z.mul(&zp).div_rem_monic(2, &modulus);
    out.push(cmp_z("z z' = 8t + 9", &zz, &t.scale(&zi(8)).add(&ZxyPoly::from_i64(9))));
    out
}

fn a_k(k: u32) -> ZxyPoly {
    let u = ZxyPoly::var(0);
    let v = ZxyPoly::var(1);
    (1..k).fold(ZxyPoly::zero(), |acc, i| acc.add(&u.pow(i).mul(&v.pow(k - i))))
}

fn lemma2_f(pp: &PaperPolynomials) -> Vec<Residual> {
    let u = ZxyPoly::var(0);
    let v = ZxyPoly::var(1);
    let eight = ZxyPoly::from_i64(8);
    let nu = pp.j_rat_num.substitute(0, &u.add(&eight));
    let nv = nu.rename([1, 0, 2, 3]);
    // u v (J(u+8) - J(v+8)) = v N(u+8) - u N(v+8), since J(z) = N(z)/(z-8).
    let numer = v.mul(&nu).sub(&u.mul(&nv));
    let (quo, rem) = numer.div_rem_monic(0, &u.sub(&v));
    let rows: Vec<ZxyPoly> = constants::LEMMA2_ROWS.iter().map(|r| uni(1, r)).collect();
    let display = ZxyPoly::from_coeffs_in(0, &rows);
    let sym = constants::LEMMA2_A_COEFFS
        .iter()
        .fold(ZxyPoly::from_i64(constants::LEMMA2_CONSTANT), |acc, &(k, c)| acc.add(&a_k(k).scale(&zi(c))));
    alloc::vec![
        cmp_z("u - v divides u v (J(u+8) - J(v+8))", &rem, &ZxyPoly::zero()),
        cmp_z("F(u, v) matches the expanded octic", &quo, &display),
        cmp_z("F(u, v) = A8 + 28A7 + ... + 4018A2 - 49", &quo, &sym),
    ]
}

fn to_q(p: &ZxyPoly) -> QPoly {
    let n = p.degree_in(0).map_or(0, |d| d as usize + 1);
    let mut c = alloc::vec![BigInt::from(0); n];
    for (e, v) in p.terms() {
        c[e[0] as usize] = v.clone();
    }
    QPoly::from_bigints(&c)
}

/// `den^h H(num/den)` for a class polynomial `H` of degree `h`.
fn compose_class_poly(h_desc: &[i64], num: &ZxyPoly, den: &ZxyPoly) -> ZxyPoly {
    let h = uni_desc(0, h_desc);
    let deg = h.degree_in(0).unwrap_or(0);
    h.substitute_fraction(0, num, den, deg)
}

fn minpoly_gcd(pp: &PaperPolynomials) -> Vec<Residual> {
    let mut out = Vec::new();
    for e in constants::CLASS_POLYS {
        let fd = compose_class_poly(e.class_poly, &pp.j_rat_num, &pp.j_rat_den);
        let gd = compose_class_poly(e.class_poly, &pp.j7_rat_num, &pp.j_rat_den.pow(7));
        let g = to_q(&fd).gcd(&to_q(&gd));
        let want = to_q(&uni_desc(0, e.minpoly_z));
        out.push(Residual {
            label: format!("gcd(F_{0}, G_{0}) = m(x) for d = {0}", e.d),
            difference: (g != want).then(|| format!("gcd is {:?}", g.coeffs())),
        });
    }
    out
}

fn res_disc_small(pp: &PaperPolynomials) -> Vec<Residual> {
    let quad = uni_desc(0, constants::QUAD_ZERO);
    let c7 = uni_desc(0, constants::FIXED_CUBIC_7);
    let c28 = uni_desc(0, constants::FIXED_CUBIC_28);
    let k = |v: i64| ZxyPoly::from_i64(v);
    let j = ZxyPoly::var(1);
    let disc_f = discriminant_monic(&pp.f, 0);
    let want_f = j
        .pow(4)
        .mul(&uni(1, &[-1728, 1]).pow(4))
        .scale(&zi(-(7i64.pow(7))));
    let zq = uni_desc(0, constants::Z_QUAD_3).mul(&uni_desc(0, constants::Z_QUAD_11));
    alloc::vec![
        cmp_z("disc_z F(z, j) = -7^7 j^4 (j - 1728)^4", &disc_f, &want_f),
        cmp_z("Res(x^2 - x + 1, f1728) = 2^6 3^3 7", &resultant_monic(&quad, &pp.f1728, 0), &k(64 * 27 * 7)),
        cmp_z("Res(sextic, x^3 - x^2 - 2x + 1) = 3^3 5^3", &resultant_monic(&pp.sextic, &c7, 0), &k(27 * 125)),
        cmp_z(
            "Res(sextic, x^3 - 15x^2 + 12x + 1) = 5^3 17^3",
            &resultant_monic(&pp.sextic, &c28, 0),
            &k(125 * 4913)
        ),
        cmp_z("Res(x^2 - x + 1, x^3 - x^2 - 2x + 1) = 7", &resultant_monic(&quad, &c7, 0), &k(7)),
        cmp_z("Res(x^2 - x + 1, x^3 - 15x^2 + 12x + 1) = 3^3 7", &resultant_monic(&quad, &c28, 0), &k(189)),
        cmp_z("disc(sextic) = 2^12 3^3 7^5", &discriminant_monic(&pp.sextic, 0), &k(4096 * 27 * 16807)),
        cmp_z(
            "Res((z^2 - 3z + 9)(z^2 - 11z + 25), z - 8) = 7^2",
            &resultant_monic(&uni(0, &[-8, 1]), &zq, 0),
            &k(49)
        ),
    ]
}

fn thm4_transform(_pp: &PaperPolynomials) -> Vec<Residual> {
    // Variables: x = 0, eta = 1 (a free indeterminate).
    let (u, w) = t1_parts();
    let eta = NPoly::var(1);
    let x = NPoly::var(0);
    let n = |v: i64| NPoly::from_i64(v);
    let lhs = u
        .pow(3)
        .sub(&u.mul(&w.pow(2)).mul(&n(3)))
        .add(&w.pow(3))
        .sub(&eta.add(&n(8)).mul(&u).mul(&u.sub(&w)).mul(&w));
    let cubic = eta
        .mul(&x.pow(3))
        .add(&eta.mul(&n(-8)).sub(&n(49)).mul(&x.pow(2)))
        .add(&eta.mul(&n(5)).add(&n(49)).mul(&x))
        .add(&eta);
    let r = r_elem();
    let lead = r.mul(&r.sub(&NumRingElem::one()));
    alloc::vec![cmp_n(
        "T1^3 - 3T1 + 1 - (eta+8) T1 (T1-1) = r(r-1)(eta x^3 + (-8eta-49)x^2 + (5eta+49)x + eta)/((1-r)x-1)^3",
        &lhs,
        &cubic.scale(&lead),
    )]
}

pub const REGISTRY: &[IdentityCase] = &[
    IdentityCase { id: "DISC_F7", statement: "disc_x f7(x,t) = 7^4 t^4 (t+1)^3 (t-27)^3", check: disc_f7 },
    IdentityCase { id: "RES_G_F7", statement: "Res_x(g(x,a), f7(x,t)) = ((a+8)t + a^2 + 3a + 9)^3", check: res_g_f7 },
    IdentityCase {
        id: "LEMMA_B_DISC",
        statement: "Res_x(x^2+ax+b, f7) as a quadratic in t, and its discriminant (a^2-4b)(ab+b^2+a+3b+1)^2 B(a,b)^2",
        check: lemma_b_disc,
    },
    IdentityCase { id: "C_FACTOR", statement: "C(a,b) splits into three linear factors over Q(r)", check: c_factor },
    IdentityCase { id: "F7_T1", statement: "((1-r)x-1)^6 f7(T1(x),t) = eta (r+2)^3 f7(x,t)", check: f7_t1 },
    IdentityCase { id: "F7_PHI", statement: "(x-1)^6 f7(phi(x),t) = f7(x,t)", check: f7_phi },
    IdentityCase { id: "J7_TI", statement: "j7(T_i(x)) = j77(x) for i = 1, 2, 3", check: j7_ti },
    IdentityCase {
        id: "RES_G_F7_R7",
        statement: "Res_h(G(h,X), f7(h,Y)) = 7^42 R7(X,Y)^3 via a degree-exceeding integer grid",
        check: res_g_f7_r7,
    },
    IdentityCase { id: "G_T1_H", statement: "((1-r)x-1)^24 G(T1(x),j) = 7^14 eps H(x,j)", check: g_t1_h },
    IdentityCase {
        id: "G_CUBIC_T1",
        statement: "((1-r)x-1)^3 g(T1(x),a) = r(1-r)((a+8)x^3 - (8a+15)x^2 + (5a-9)x + (a+8))",
        check: g_cubic_t1,
    },
    IdentityCase {
        id: "F1728_SPLIT",
        statement: "f1728 = A^2 - 28x^2(x-1)^2 B^2 with A, B equivariant under phi",
        check: f1728_split,
    },
    IdentityCase { id: "G1_TO_F", statement: "(z-8)^8 G1((8z-15)/(z-8), j) = 7^14 F(z,j)", check: g1_to_f },
    IdentityCase {
        id: "SPLIT_QUADRATIC",
        statement: "f7 splits into two cubics over Z[t][z]/(z^2 - (t+3)z + 8t + 9)",
        check: split_quadratic,
    },
    IdentityCase { id: "LEMMA2_F", statement: "F(u,v) = uv(J(u+8) - J(v+8))/(u-v) in both printed forms", check: lemma2_f },
    IdentityCase { id: "MINPOLY_GCD", statement: "gcd(F_d, G_d) = m_d for d = 3, 12, 20, 52, 19", check: minpoly_gcd },
    IdentityCase { id: "RES_DISC_SMALL", statement: "scattered resultant and discriminant constants", check: res_disc_small },
    IdentityCase {
        id: "THM4_TRANSFORM",
        statement: "the cubic h^3 - 3h + 1 - z h(h-1) transported by T1, with eta = z - 8 free",
        check: thm4_transform,
    },
];

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

fn outcome(case: &'static IdentityCase, pp: &PaperPolynomials) -> IdentityOutcome {
    let residuals = (case.check)(pp);
    let failed: Vec<&Residual> = residuals.iter().filter(|r| r.difference.is_some()).collect();
    let verdict = if failed.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(
            failed
                .iter()
                .map(|r| format!("{}: residual {}", r.label, r.difference.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join("; "),
        )
    };
    IdentityOutcome { id: case.id, statement: case.statement, verdict, residuals }
}

/// Checks one identity against the given constants.
pub fn verify_identity(id: &str, pp: &PaperPolynomials) -> Result<IdentityOutcome> {
    Ok(outcome(find_case(id)?, pp))
}

/// Cases selected by `filter` (all when `None`), in registry order.
pub fn select_cases(filter: Option<&[String]>) -> Result<Vec<&'static IdentityCase>> {
    let cases: Vec<&'static IdentityCase> = match filter {
        None => REGISTRY.iter().collect(),
        Some(ids) => {
            for id in ids {
                find_case(id)?;
            }
            REGISTRY.iter().filter(|c| ids.iter().any(|i| i == c.id)).collect()
        }
    };
    if cases.is_empty() {
        return Err(Error::NoCasesSelected);
    }
    Ok(cases)
}

/// Runs a single case; exposed so callers can time or parallelize cases.
pub fn run_case(case: &'static IdentityCase, pp: &PaperPolynomials) -> IdentityOutcome {
    outcome(case, pp)
}

pub fn run_all_identities(pp: &PaperPolynomials, filter: Option<&[String]>) -> Result<Vec<IdentityOutcome>> {
    Ok(select_cases(filter)?.into_iter().map(|c| outcome(c, pp)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_seventeen_distinct_ids() {
        assert_eq!(REGISTRY.len(), 17);
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 17);
    }

    #[test]
    fn cheap_cases_pass() {
        let pp = PaperPolynomials::new();
        for id in ["DISC_F7", "RES_G_F7", "C_FACTOR", "F7_PHI", "F1728_SPLIT", "SPLIT_QUADRATIC", "THM4_TRANSFORM"] {
            let o = verify_identity(id, &pp).unwrap();
            assert!(o.verdict.is_pass(), "{id}: {:?}", o.verdict);
        }
    }

    #[test]
    fn empty_filter_is_an_error() {
        let empty: Vec<String> = Vec::new();
        assert!(matches!(select_cases(Some(&empty)), Err(Error::NoCasesSelected)));
        assert!(matches!(verify_identity("NOPE", &PaperPolynomials::new()), Err(Error::UnknownCase(_))));
    }
}
