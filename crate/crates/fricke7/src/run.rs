use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use fricke7_core::constants::{PaperPolynomials, P_TABLE};
use fricke7_core::exactalg::{identities::run_case, IdentityCase, REGISTRY};
use fricke7_core::ffpoly::FpPoly;
use fricke7_core::qseries::{verify_series_identity, SERIES_REGISTRY};
use fricke7_core::{cmeval, fricke7, hasse7, PrimeContext, Verdict};
use rayon::prelude::*;

use crate::config::{Command, RunConfig, Target};
use crate::report::{Check, Report, ReportRow, SuiteRow};
use crate::CliError;

/// Runs `work` over `items` on a pool of `jobs` threads and returns results in
/// input order. With `fail_fast`, items after the first failing one (in input
/// order) are dropped; every item before it is still computed, so the kept
/// prefix does not depend on scheduling.
pub fn sweep<T, R>(
    label: &str,
    items: &[T],
    jobs: usize,
    fail_fast: bool,
    work: impl Fn(&T) -> R + Sync,
    failed: impl Fn(&R) -> bool + Sync,
) -> Result<(Vec<R>, bool), CliError>
where
    T: Sync,
    R: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let first_fail = AtomicUsize::new(usize::MAX);
    let done = AtomicUsize::new(0);
    let n = items.len();
    let out: Vec<Option<R>> = pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(i, item)| {
                if fail_fast && i > first_fail.load(Ordering::SeqCst) {
                    return None;
                }
                let r = work(item);
                if failed(&r) {
                    first_fail.fetch_min(i, Ordering::SeqCst);
                }
                let k = done.fetch_add(1, Ordering::SeqCst) + 1;
                progress(&format!("{label}: {k}/{n}"));
                Some(r)
            })
            .collect()
    });
    let cut = if fail_fast { first_fail.into_inner() } else { usize::MAX };
    let truncated = cut.saturating_add(1) < n;
    let kept = out.into_iter().take(cut.saturating_add(1)).map(|r| r.expect("items before the cut ran")).collect();
    Ok((kept, truncated))
}

fn progress(msg: &str) {
    let _ = writeln!(std::io::stderr().lock(), "{msg}");
}

fn set_context(row: &mut ReportRow, ctx: &PrimeContext) {
    row.r = Some(ctx.r_l);
    row.s = Some(ctx.s_l);
    row.n = Some(ctx.n_l);
    row.mu = Some(ctx.mu7);
}

fn check(v: &Verdict) -> Option<Check> {
    Some(Check::from(v))
}

fn prime_row(t: &Target, fill: impl Fn(&mut ReportRow, &PrimeContext) -> fricke7_core::Result<()>) -> ReportRow {
    let mut row = ReportRow::new(t.p());
    match t {
        Target::Excluded(_) => row.skipped = Some("excluded by hypothesis".into()),
        Target::Run(p) => {
            let res = PrimeContext::new(*p).and_then(|ctx| {
                set_context(&mut row, &ctx);
                fill(&mut row, &ctx)
            });
            if let Err(e) = res {
                row.error = Some(e.to_string());
            }
        }
    }
    row
}

fn hasse_fill(row: &mut ReportRow, ctx: &PrimeContext) -> fricke7_core::Result<()> {
    let rep = hasse7::count_factors(ctx)?;
    row.n1 = Some(rep.n1 as u64);
    row.n2 = Some(rep.n2 as u64);
    row.n3 = Some(rep.n3 as u64);
    row.n6 = Some(rep.n6 as u64);
    row.l = Some(rep.supersingular_fp as u64);
    row.h_p = Some(rep.h_l);
    row.h_7p = Some(rep.h_7l);
    row.pred_n1 = rep.formula_n1;
    row.pred_n3 = rep.formula_n3;
    row.pred_n6 = rep.formula_n6.map(|r| r.to_string());
    row.pred_n2 = rep.formula_n2.map(|r| r.to_string());
    row.checks.theorem1 = check(&rep.classification);
    row.checks.theorem_a = check(&rep.theorem_a);
    row.checks.conjecture2 = check(&rep.conjecture2);
    row.checks.conjecture3 = check(&rep.conjecture3);
    row.checks.props_2_4 = check(&hasse7::verify_props_2_4(ctx)?);
    row.checks.theorem7 = check(&hasse7::verify_theorem7(ctx)?);
    Ok(())
}

fn ss7star_fill(row: &mut ReportRow, ctx: &PrimeContext, check_oracle: bool) -> fricke7_core::Result<()> {
    let rep = fricke7::counts_and_nakaya(ctx, check_oracle)?;
    row.l = Some(rep.l_count as u64);
    row.l7star = Some(rep.l7star as u64);
    row.h_7p = Some(rep.h_7p);
    row.a_p = Some(rep.a_p.to_string());
    row.pred_l7star = Some(rep.nakaya_predicted.to_string());
    row.route = Some(rep.route.label().to_string());
    row.oracle_match = rep.oracle_match;
    row.ss7star_coeffs = Some(rep.ss7star.coeffs().to_vec());
    row.ss7star_factored = Some(fricke7::factored_string(&rep.ss7star, "Y")?);
    row.checks.nakaya = check(&rep.nakaya);
    row.checks.oracle = rep.oracle_match.map(|ok| {
        Check::from(&if ok {
            Verdict::Pass
        } else {
            Verdict::Fail("resultant and brute-force routes disagree".into())
        })
    });
    Ok(())
}

fn nakaya_fill(row: &mut ReportRow, ctx: &PrimeContext, check_oracle: bool) -> fricke7_core::Result<()> {
    ss7star_fill(row, ctx, check_oracle)?;
    let l7star = row.l7star.unwrap_or_default() as usize;
    row.checks.section3 = check(&fricke7::section3_consistency(ctx, l7star)?);
    Ok(())
}

fn prime_report(cfg: &RunConfig, fill: impl Fn(&mut ReportRow, &PrimeContext) -> fricke7_core::Result<()> + Sync) -> Result<Report, CliError> {
    let targets = cfg.targets()?;
    for t in &targets {
        if let Target::Excluded(p) = t {
            progress(&format!("{}: skipping {p}: excluded by hypothesis", cfg.command.name()));
        }
    }
    let (rows, truncated) = sweep(
        cfg.command.name(),
        &targets,
        cfg.jobs,
        cfg.fail_fast,
        |t| prime_row(t, &fill),
        ReportRow::failed,
    )?;
    Ok(Report::new(cfg.command.name(), rows, Vec::new(), truncated))
}

fn suite_row(id: &str, statement: &str, v: &Verdict, value: Option<String>) -> SuiteRow {
    SuiteRow { id: id.into(), statement: statement.into(), check: Check::from(v), value, error: None }
}

fn error_row(id: &str, statement: &str, e: &fricke7_core::Error) -> SuiteRow {
    SuiteRow {
        id: id.into(),
        statement: statement.into(),
        check: Check::from(&Verdict::Fail(e.to_string())),
        value: None,
        error: Some(e.to_string()),
    }
}

fn identities_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let pp = PaperPolynomials::new();
    let registry: Vec<&'static IdentityCase> = REGISTRY.iter().collect();
    let (cases, truncated) = sweep(
        "identities",
        &registry,
        cfg.jobs,
        cfg.fail_fast,
        |case| {
            let o = run_case(case, &pp);
            let bad: Vec<&str> =
                o.residuals.iter().filter(|r| r.difference.is_some()).map(|r| r.label.as_str()).collect();
            let value = if bad.is_empty() {
                format!("{} comparisons, residual 0", o.residuals.len())
            } else {
                format!("nonzero residual in: {}", bad.join("; "))
            };
            suite_row(o.id, o.statement, &o.verdict, Some(value))
        },
        SuiteRow::failed,
    )?;
    Ok(Report::new("identities", Vec::new(), cases, truncated))
}

fn qseries_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let (cases, truncated) = sweep(
        "qseries",
        SERIES_REGISTRY,
        cfg.jobs,
        cfg.fail_fast,
        |case| match verify_series_identity(case.id, cfg.prec) {
            Ok(o) => {
                let unit = if o.scale == 1 { "q".to_string() } else { format!("q^(1/{})", o.scale) };
                suite_row(o.id, o.statement, &o.verdict, Some(format!("compared below {unit}^{}", o.checked_to)))
            }
            Err(e) => error_row(case.id, case.statement, &e),
        },
        SuiteRow::failed,
    )?;
    Ok(Report::new("qseries", Vec::new(), cases, truncated))
}

/// `(x + 1)(x + 8)^2` from a factor list.
pub fn render_factors(fs: &[(FpPoly, u32)], var: &str) -> String {
    fs.iter()
        .map(|(f, m)| {
            let s = format!("({})", f.to_var_string(var));
            if *m == 1 {
                s
            } else {
                format!("{s}^{m}")
            }
        })
        .collect()
}

#[derive(Clone, Copy)]
enum CmCase {
    Root(u64),
    Factor(u64, u64),
    Psi7Root,
    Psi7Mod41,
}

fn cm_case(case: CmCase, bits: u32) -> SuiteRow {
    let root_value = |r: &cmeval::RootCheck| {
        let (re, im) = r.h.to_f64();
        let sign = if im < 0.0 { '-' } else { '+' };
        format!(
            "|residual| <= 2^{} (tolerance 2^{}), h = {re:.12} {sign} {:.12}i",
            r.residual_log2,
            r.tolerance_log2,
            im.abs()
        )
    };
    match case {
        CmCase::Root(d) => {
            let (id, st) = (format!("P{d}_ROOT"), format!("P_{d}(h(w/7)) = 0 at {bits} bits"));
            match cmeval::verify_pd_root(d, bits) {
                Ok(r) => suite_row(&id, &st, &r.verdict, Some(root_value(&r))),
                Err(e) => error_row(&id, &st, &e),
            }
        }
        CmCase::Factor(d, l) => {
            let (id, st) = (format!("P{d}_MOD_{l}"), format!("P_{d} mod {l}: printed factorization and class-number shape"));
            match cmeval::verify_pd_factorization(d, l) {
                Ok(f) => suite_row(&id, &st, &f.verdict, Some(render_factors(&f.factors, "x"))),
                Err(e) => error_row(&id, &st, &e),
            }
        }
        CmCase::Psi7Root => {
            let st = format!("Psi7(j7*(w/7)) = 0 for w = 29 + sqrt(-41) at {bits} bits");
            match cmeval::verify_psi7_root(bits) {
                Ok(r) => suite_row("PSI7_ROOT", &st, &r.verdict, Some(root_value(&r))),
                Err(e) => error_row("PSI7_ROOT", &st, &e),
            }
        }
        CmCase::Psi7Mod41 => {
            let st = "Psi7 mod 41: printed factorization";
            match cmeval::psi7_mod_41() {
                Ok((fs, v)) => suite_row("PSI7_MOD_41", st, &v, Some(render_factors(&fs, "x"))),
                Err(e) => error_row("PSI7_MOD_41", st, &e),
            }
        }
    }
}

fn cm_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut cases = Vec::new();
    for e in P_TABLE {
        cases.push(CmCase::Root(u64::from(e.d)));
        cases.push(CmCase::Factor(u64::from(e.d), e.l));
    }
    cases.push(CmCase::Psi7Root);
    cases.push(CmCase::Psi7Mod41);
    let (rows, truncated) = sweep("cm", &cases, cfg.jobs, cfg.fail_fast, |&c| cm_case(c, cfg.bits), SuiteRow::failed)?;
    Ok(Report::new("cm", Vec::new(), rows, truncated))
}

/// Runs one validated configuration and returns the report.
pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let start = Instant::now();
    let oracle = cfg.check_oracle;
    let report = match cfg.command {
        Command::Hasse => prime_report(cfg, hasse_fill)?,
        Command::Ss7star => prime_report(cfg, |row, ctx| ss7star_fill(row, ctx, oracle))?,
        Command::Nakaya => prime_report(cfg, |row, ctx| nakaya_fill(row, ctx, oracle))?,
        Command::Identities => identities_report(cfg)?,
        Command::Qseries => qseries_report(cfg)?,
        Command::Cm => cm_report(cfg)?,
    };
    progress(&format!("{}: finished in {:.2?}", cfg.command.name(), start.elapsed()));
    Ok(report)
}

/// 0 when everything passed, 1 on a failed check, 3 when the library reported an error.
pub fn exit_code(report: &Report) -> u8 {
    if report.has_error() {
        3
    } else if report.summary.failed > 0 {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_fast_keeps_a_stable_prefix() {
        let items: Vec<u32> = (0..50).collect();
        for jobs in [1, 4] {
            let (out, truncated) = sweep("t", &items, jobs, true, |&i| i, |&i| i == 17 || i == 30).unwrap();
            assert!(truncated);
            assert_eq!(out, (0..=17).collect::<Vec<_>>());
        }
        let (out, truncated) = sweep("t", &items, 3, false, |&i| i * 2, |&i| i == 4).unwrap();
        assert!(!truncated);
        assert_eq!(out.len(), 50);
    }

    #[test]
    fn row_for_thirteen() {
        let row = prime_row(&Target::Run(13), hasse_fill);
        assert_eq!(row.n1, Some(6));
        assert_eq!(row.checks.theorem_a.as_ref().unwrap().verdict, "PASS");
        assert!(!row.failed());
    }
}
