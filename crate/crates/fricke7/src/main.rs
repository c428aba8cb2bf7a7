use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fricke7::{CliError, Command, Format, PrimeSpec, RunConfig};

const AFTER_HELP: &str = "\
OUTPUT
  Standard output carries only the payload (table, CSV or JSON); progress and
  the summary of CSV/JSON runs go to standard error. JSON documents carry
  \"version\": \"fricke7/1\", a \"rows\" or \"cases\" array and a \"summary\".

CSV COLUMNS (hasse, ss7star, nakaya)
  p, p_mod_3, p_mod_4, p_mod_7, p_mod_8  the prime and its residues
  r, s, n, mu                            r = [(-3/p) = -1], s = [(-4/p) = -1],
                                         n = floor(p/12), mu = [(-7/p) = -1]
  n1, n2, n3, n6                         measured factor counts of the Hasse invariant
  l                                      supersingular j in F_p
  l7star                                 roots in F_p of ss_p^(7*)
  h_p, h_7p                              class numbers of Q(sqrt(-p)), Q(sqrt(-7p))
  pred_n1, pred_n3, pred_n6, pred_n2     class-number predictions (rationals as a/b)
  a_p, pred_l7star                       weight and predicted L7*(p)
  route, oracle_match                    route used for ss_p^(7*); dual-route agreement
  ss7star_coeffs                         coefficients mod p, lowest degree first,
                                         separated by spaces
  ss7star_factored                       factored form in Y
  theorem1, theorem_a, conjecture2, conjecture3, props_2_4, theorem7,
  nakaya, section3, oracle               PASS, PASS-VACUOUS, FAIL, SKIP or empty
  note                                   skip reason, error, failure details
  Cells that a command does not compute are empty.

CSV COLUMNS (identities, qseries, cm)
  id, verdict, value, detail, statement

EXIT STATUS
  0 all checks passed, 1 a check failed, 2 usage or configuration error,
  3 internal error (a structural invariant failed inside the library).

Primes 2, 3 and 7 are reported as skipped (excluded by hypothesis). Ranges
A..B include both ends and pass over composites; an explicit composite is an
error.";

#[derive(Parser)]
#[command(name = "fricke7", version, about = "Verification sweeps for the level-7 Hasse invariant, ss_p^(7*), and the Fricke group", after_long_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Primes: `A..B` (inclusive) or a comma-separated list.
    #[arg(long, global = true)]
    primes: Option<PrimeSpec>,

    /// Output format: table, csv or json.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    /// Write the payload to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// q-series precision (number of coefficients), at least 10.
    #[arg(long, global = true, default_value_t = fricke7_core::qseries::DEFAULT_PREC)]
    prec: usize,

    /// Working precision in bits for CM evaluation, at least 128. A root check
    /// passes when its certified residual is below 2^-(bits/2).
    #[arg(long, global = true, default_value_t = fricke7_core::cmeval::DEFAULT_BITS)]
    bits: u32,

    /// Compute ss_p^(7*) by both routes and compare them.
    #[arg(long, global = true)]
    check_oracle: bool,

    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Stop at the first failure; the report covers everything before it.
    #[arg(long, global = true)]
    fail_fast: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Sub {
    /// Factor counts of the Hasse invariant and their class-number predictions.
    Hasse,
    /// ss_p^(7*) with its factorization and root count.
    Ss7star,
    /// The exact polynomial identity registry.
    Identities,
    /// The q-series identity registry.
    Qseries,
    /// CM values of h and the printed factorizations.
    Cm,
    /// Root counts of ss_p^(7*) against the class-number prediction.
    Nakaya,
}

fn config(cli: Cli) -> RunConfig {
    let command = match cli.command {
        Sub::Hasse => Command::Hasse,
        Sub::Ss7star => Command::Ss7star,
        Sub::Identities => Command::Identities,
        Sub::Qseries => Command::Qseries,
        Sub::Cm => Command::Cm,
        Sub::Nakaya => Command::Nakaya,
    };
    RunConfig {
        command,
        primes: cli.primes,
        prec: cli.prec,
        bits: cli.bits,
        format: cli.format,
        out: cli.out,
        jobs: cli.jobs,
        fail_fast: cli.fail_fast,
        check_oracle: cli.check_oracle,
    }
}

fn run(cfg: &RunConfig) -> Result<u8, CliError> {
    let (text, code, report) = fricke7::run_to_string(cfg)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    if cfg.format != Format::Table || cfg.out.is_some() {
        eprintln!("{}", report.summary.line());
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cfg = config(Cli::parse());
    match run(&cfg) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fricke7 {}: {e}", cfg.command.name());
            ExitCode::from(e.exit_code())
        }
    }
}
