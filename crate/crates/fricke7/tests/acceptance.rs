//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! `cargo test -p fricke7 --test acceptance`

use std::process::Command as Process;
use std::time::{Duration, Instant};

use fricke7::run::render_factors;
use fricke7_core::classnum::{class_number, field_discriminant, is_squarefree, kronecker};
use fricke7_core::cmeval::{psi7_mod_41, verify_pd_factorization, verify_pd_root, verify_psi7_root};
use fricke7_core::constants::{PaperPolynomials, P_TABLE};
use fricke7_core::exactalg::run_all_identities;
use fricke7_core::ffpoly::fp::{is_prime, mul_mod};
use fricke7_core::ffpoly::{factorize, resultant, FpPoly};
use fricke7_core::fricke7::{counts_and_nakaya, section3_consistency, ss7star_bruteforce, ss7star_resultant};
use fricke7_core::hasse7::count_factors;
use fricke7_core::qseries::{eta_quotient4, j7star_series, run_all_series};
use fricke7_core::{PrimeContext, Verdict};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).max(8)
}

fn bin(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_fricke7")).args(args).output().expect("binary runs")
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn within(limit: Duration, t: Duration) -> Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

fn primes(lo: u64, hi: u64, keep: impl Fn(u64) -> bool) -> Vec<u64> {
    (lo..hi).filter(|&p| is_prime(p) && p != 7 && keep(p)).collect()
}

/// Runs `check` over `ps` on a pool of `jobs()` threads and collects the failures.
fn prime_sweep(ps: &[u64], check: impl Fn(u64) -> Result<(), String> + Sync) -> Result<(), String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs()).build().map_err(|e| e.to_string())?;
    let bad: Vec<String> = pool.install(|| ps.par_iter().filter_map(|&p| check(p).err()).collect());
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("{} failures, first: {}", bad.len(), bad[0]))
    }
}

fn ctx(p: u64) -> Result<PrimeContext, String> {
    PrimeContext::new(p).map_err(|e| e.to_string())
}

fn pass(v: &Verdict, what: &str) -> Result<(), String> {
    if v.is_pass() {
        Ok(())
    } else {
        Err(format!("{what}: {v:?}"))
    }
}

const SS41: &str = "Y(Y+1)(Y+8)(Y+12)(Y+13)(Y+14)(Y+17)(Y+29)(Y+31)(Y+33)(Y+39)(Y^2+Y+18)(Y^2+37Y+26)";

fn c1() -> Outcome {
    let t = Instant::now();
    let o = bin(&["ss7star", "--primes", "41"]);
    let elapsed = t.elapsed();
    let out = compact(&String::from_utf8_lossy(&o.stdout));
    if o.status.code() != Some(0) || !out.contains(SS41) {
        return Err(format!("output was {out}"));
    }
    within(Duration::from_secs(1), elapsed)?;
    Ok(format!("factorization exact, {elapsed:.2?}"))
}

fn c2() -> Outcome {
    let (fs, v) = psi7_mod_41().map_err(|e| e.to_string())?;
    pass(&v, "printed comparison")?;
    let mut got: Vec<String> = fs.iter().map(|f| compact(&render_factors(std::slice::from_ref(f), "x"))).collect();
    got.sort();
    let mut want: Vec<String> =
        ["(x+1)", "(x+14)", "(x+8)^2", "(x+29)^2", "(x+31)^2"].iter().map(|s| s.to_string()).collect();
    want.sort();
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok(compact(&render_factors(&fs, "x")))
}

fn c3() -> Outcome {
    let mut seen = Vec::new();
    for (d, l) in [(20, 5), (52, 13), (68, 17), (83, 83)] {
        let f = verify_pd_factorization(d, l).map_err(|e| e.to_string())?;
        if !f.matches_table {
            return Err(format!("P_{d} mod {l} differs from the printed factorization"));
        }
        pass(&f.pattern, &format!("P_{d} shape"))?;
        pass(&f.verdict, &format!("P_{d}"))?;
        seen.push(format!("P{d} mod {l}"));
    }
    if P_TABLE.len() != 4 {
        return Err(format!("table has {} entries", P_TABLE.len()));
    }
    Ok(format!("{} match printed form and class-number shape", seen.join(", ")))
}

fn c4() -> Outcome {
    let ps = primes(5, 2000, |l| matches!(l % 7, 3 | 5 | 6));
    let t = Instant::now();
    prime_sweep(&ps, |l| {
        let r = count_factors(&ctx(l)?).map_err(|e| format!("l = {l}: {e}"))?;
        let (measured, formula, mult) = if l % 7 == 6 { (r.n1, r.formula_n1, 6) } else { (r.n3, r.formula_n3, 2) };
        let formula = formula.ok_or(format!("l = {l}: no formula"))?;
        if measured as u64 != formula || measured != mult * r.supersingular_fp {
            return Err(format!("l = {l}: count {measured}, formula {formula}, {mult} L = {}", mult * r.supersingular_fp));
        }
        pass(&r.theorem_a, &format!("l = {l}"))
    })?;
    let elapsed = t.elapsed();
    within(Duration::from_secs(120), elapsed)?;
    Ok(format!("{} primes (l = 3 excluded by hypothesis), {elapsed:.1?}", ps.len()))
}

fn c5() -> Outcome {
    let ps = primes(11, 1000, |_| true);
    let t = Instant::now();
    prime_sweep(&ps, |l| {
        let r = count_factors(&ctx(l)?).map_err(|e| format!("l = {l}: {e}"))?;
        let (v, pred, measured) = if matches!(l % 7, 1 | 6) {
            (&r.conjecture3, r.formula_n2, r.n2)
        } else {
            (&r.conjecture2, r.formula_n6, r.n6)
        };
        let pred = pred.ok_or(format!("l = {l}: no prediction"))?;
        if *pred.denom() != 1 || *pred.numer() != measured as i64 {
            return Err(format!("COUNTEREXAMPLE l = {l}: measured {measured}, formula {pred}"));
        }
        pass(v, &format!("l = {l}"))
    })?;
    Ok(format!("{} primes, {:.1?}", ps.len(), t.elapsed()))
}

fn c6() -> Outcome {
    let ps = primes(5, 1000, |_| true);
    let t = Instant::now();
    prime_sweep(&ps, |p| {
        let c = ctx(p)?;
        let r = counts_and_nakaya(&c, false).map_err(|e| format!("p = {p}: {e}"))?;
        pass(&r.nakaya, &format!("p = {p}"))?;
        let s3 = section3_consistency(&c, r.l7star).map_err(|e| format!("p = {p}: {e}"))?;
        match (p, &s3) {
            (5, Verdict::Skipped(_)) => Ok(()),
            _ => pass(&s3, &format!("branch formula at p = {p}")),
        }
    })?;
    Ok(format!("{} primes (branch formulas from p = 11), {:.1?}", ps.len(), t.elapsed()))
}

fn c7() -> Outcome {
    let ps = primes(11, 301, |_| true);
    let t = Instant::now();
    prime_sweep(&ps, |p| {
        let c = ctx(p)?;
        let a = ss7star_resultant(&c).map_err(|e| e.to_string())?;
        let b = ss7star_bruteforce(&c).map_err(|e| e.to_string())?;
        if a == b {
            Ok(())
        } else {
            Err(format!("p = {p}: routes differ"))
        }
    })?;
    Ok(format!("{} primes, {:.1?}", ps.len(), t.elapsed()))
}

fn c8() -> Outcome {
    let t = Instant::now();
    let out = run_all_identities(&PaperPolynomials::new(), None).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    if out.len() != 17 {
        return Err(format!("{} identities registered", out.len()));
    }
    for o in &out {
        pass(&o.verdict, o.id)?;
        if let Some(r) = o.residuals.iter().find(|r| r.difference.is_some()) {
            return Err(format!("{}: nonzero residual in {}", o.id, r.label));
        }
    }
    if !out.iter().any(|o| o.id == "RES_G_F7_R7") {
        return Err("RES_G_F7_R7 missing".into());
    }
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!("17/17 zero residual, {elapsed:.2?}"))
}

fn c9() -> Outcome {
    let out = run_all_series(200).map_err(|e| e.to_string())?;
    for o in &out {
        pass(&o.verdict, o.id)?;
    }
    for id in ["ETA_H", "KLEIN", "ST2H", "HM1_PROD", "H_A_RATIO", "Z_DEF", "F7_VANISH", "J7STAR", "J_TAU", "J_7TAU"] {
        if !out.iter().any(|o| o.id == id) {
            return Err(format!("{id} missing"));
        }
    }
    let j = j7star_series(200).map_err(|e| e.to_string())?;
    let want_j: Vec<i64> = vec![1, 9, 51, 204, 681, 1956, 5135];
    let got_j: Vec<String> = (-1..=5).map(|e| j.coeff(e).map(|c| c.to_string()).unwrap_or_default()).collect();
    if got_j != want_j.iter().map(i64::to_string).collect::<Vec<_>>() {
        return Err(format!("j7* starts {got_j:?}"));
    }
    let eta = eta_quotient4(200);
    let want_eta: Vec<i64> = vec![-4, 2, 8, -5, -4, -10, 12, -7, 8, 46];
    let got_eta: Vec<String> = (0..=9).map(|e| eta.coeff(e).map(|c| c.to_string()).unwrap_or_default()).collect();
    if got_eta != want_eta.iter().map(i64::to_string).collect::<Vec<_>>() {
        return Err(format!("eta quotient continues {got_eta:?}"));
    }
    let j_tau = out.iter().find(|o| o.id == "J_TAU").unwrap();
    if j_tau.checked_to < 50 {
        return Err(format!("J_TAU compared only below q^{}", j_tau.checked_to));
    }
    Ok(format!("{}/{} at prec 200, displays match, j agrees below q^{}", out.len(), out.len(), j_tau.checked_to))
}

fn c10() -> Outcome {
    // 2^-100 < 1e-30.
    const LIMIT: i64 = -100;
    let mut worst = i64::MIN;
    for d in [20, 52, 68, 83] {
        let r = verify_pd_root(d, 300).map_err(|e| e.to_string())?;
        pass(&r.verdict, &format!("P_{d}"))?;
        if r.residual_log2 > LIMIT {
            return Err(format!("P_{d}: residual bound 2^{}", r.residual_log2));
        }
        worst = worst.max(r.residual_log2);
    }
    let r = verify_psi7_root(300).map_err(|e| e.to_string())?;
    pass(&r.verdict, "Psi7")?;
    if r.residual_log2 > LIMIT || r.d != 164 {
        return Err(format!("Psi7 at d = {}: residual bound 2^{}", r.d, r.residual_log2));
    }
    Ok(format!("worst certified residual 2^{} (Psi7 2^{})", worst.max(r.residual_log2), r.residual_log2))
}

const PRIMES: &[u64] = &[3, 5, 11, 13, 101, 1009, 65537];
const CASES: usize = 128;

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> FpPoly {
    let p = PRIMES[(rng.next_u64() % PRIMES.len() as u64) as usize];
    random_poly_mod(rng, p, max_deg)
}

fn random_poly_mod(rng: &mut ChaCha8Rng, p: u64, max_deg: usize) -> FpPoly {
    let deg = 1 + (rng.next_u64() % max_deg as u64) as usize;
    let mut cs: Vec<u64> = (0..=deg).map(|_| rng.next_u64() % p).collect();
    cs[deg] = 1 + rng.next_u64() % (p - 1);
    FpPoly::new(p, cs)
}

/// `x^(p^k) mod g`.
fn frob(g: &FpPoly, k: usize) -> FpPoly {
    let p = g.modulus();
    let mut acc = FpPoly::x(p).rem(g);
    for _ in 0..k {
        acc = acc.pow_mod(p as u128, g);
    }
    acc
}

/// Rabin's irreducibility certificate.
fn rabin(g: &FpPoly) -> bool {
    let d = g.deg();
    let x = FpPoly::x(g.modulus()).rem(g);
    if frob(g, d) != x {
        return false;
    }
    (2..=d).filter(|q| d.is_multiple_of(*q) && is_prime(*q as u64)).all(|q| g.gcd(&(&frob(g, d / q) - &x)).is_one())
}

/// `h(D) = w sqrt|D| L(1, chi_D) / (2 pi)`, series cut where the partial
/// summation tail bound `2 sqrt|D| log|D| / N` keeps the error below 1/4.
fn analytic_class_number(d: i64) -> Option<u64> {
    let a = d.unsigned_abs() as f64;
    let w = match d {
        -3 => 6.0,
        -4 => 4.0,
        _ => 2.0,
    };
    let scale = w * a.sqrt() / (2.0 * std::f64::consts::PI);
    let n = (4.0 * scale * 2.0 * a.sqrt() * a.ln()).ceil() as i64 + 1;
    let l: f64 = (1..=n).map(|k| f64::from(kronecker(d, k)) / k as f64).sum();
    let est = scale * l;
    ((est - est.round()).abs() < 0.25).then_some(est.round() as u64)
}

fn c11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7_f7);
    for i in 0..CASES {
        let f = random_poly(&mut rng, 48);
        let fz = factorize(&f).map_err(|e| e.to_string())?;
        if fz.expand(f.modulus()) != f {
            return Err(format!("round trip failed in case {i}"));
        }
        if let Some((g, _)) = fz.factors.iter().find(|(g, _)| !g.is_monic() || !rabin(g)) {
            return Err(format!("factor {g} of case {i} has no irreducibility certificate"));
        }
    }
    for i in 0..CASES {
        let f = random_poly(&mut rng, 10);
        let p = f.modulus();
        let g = random_poly_mod(&mut rng, p, 10);
        let h = random_poly_mod(&mut rng, p, 10);
        let lhs = resultant(&f, &(&g * &h)).map_err(|e| e.to_string())?;
        let rhs = mul_mod(resultant(&f, &g).map_err(|e| e.to_string())?, resultant(&f, &h).map_err(|e| e.to_string())?, p);
        if lhs != rhs {
            return Err(format!("resultant not multiplicative in case {i} (p = {p})"));
        }
    }
    let mut classes = 0;
    for m in (1..=500).filter(|&m| is_squarefree(m)) {
        let disc = field_discriminant(m).map_err(|e| e.to_string())?;
        let h = class_number(&disc);
        if analytic_class_number(disc.value()) != Some(h) {
            return Err(format!("class number of Q(sqrt(-{m})) is {h}, analytic formula disagrees"));
        }
        classes += 1;
    }
    let mut runs = 0;
    for args in [
        ["hasse", "--primes", "2..400", "--format", "csv"],
        ["nakaya", "--primes", "5..300", "--format", "json"],
        ["identities", "--format", "json", "--prec", "10"],
    ] {
        let serial = bin(&[&args[..], &["--jobs", "1"]].concat());
        let parallel = bin(&[&args[..], &["--jobs", "4"]].concat());
        if serial.status.code() != Some(0) || serial.stdout != parallel.stdout || serial.stdout.is_empty() {
            return Err(format!("{} output differs between --jobs 1 and --jobs 4", args[0]));
        }
        runs += 1;
    }
    Ok(format!(
        "{CASES} factorizations certified, {CASES} resultant products, {classes} class numbers, {runs} parallel/serial runs identical"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("ss_41^(7*) factorization", c1),
        ("Psi7 mod 41", c2),
        ("P_d factorizations", c3),
        ("class-number count of linear/cubic factors, l < 2000", c4),
        ("N6/N2 case formulas, 11 <= l < 1000", c5),
        ("L7*(p) prediction and branch formulas, 5 <= p < 1000", c6),
        ("resultant route = brute-force route, 11 <= p <= 300", c7),
        ("17 exact identities", c8),
        ("q-series registry at precision 200", c9),
        ("CM roots at 300 bits", c10),
        ("property suites, class-number oracle, determinism", c11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS  {:>2}. {name}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
