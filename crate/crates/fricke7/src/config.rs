use std::path::PathBuf;
use std::str::FromStr;

use fricke7_core::ffpoly::fp::is_prime;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Hasse,
    Ss7star,
    Identities,
    Qseries,
    Cm,
    Nakaya,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Hasse => "hasse",
            Command::Ss7star => "ss7star",
            Command::Identities => "identities",
            Command::Qseries => "qseries",
            Command::Cm => "cm",
            Command::Nakaya => "nakaya",
        }
    }

    /// Whether the command sweeps over primes (and so needs `--primes`).
    pub fn takes_primes(self) -> bool {
        matches!(self, Command::Hasse | Command::Ss7star | Command::Nakaya)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format `{s}` (expected table, csv or json)"))),
        }
    }
}

/// `A..B` (inclusive on both ends) or a comma-separated list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSpec {
    Range { lo: u64, hi: u64 },
    List(Vec<u64>),
}

impl FromStr for PrimeSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let num = |t: &str| -> Result<u64, CliError> {
            t.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("`{t}` is not a non-negative integer")))
        };
        if let Some((a, b)) = s.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            return Ok(PrimeSpec::Range { lo: num(a)?, hi: num(b)? });
        }
        let list = s.split(',').filter(|t| !t.trim().is_empty()).map(num).collect::<Result<Vec<_>, _>>()?;
        if list.is_empty() {
            return Err(CliError::Usage("empty prime list".into()));
        }
        Ok(PrimeSpec::List(list))
    }
}

/// A prime to process, or one that is reported but not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Run(u64),
    Excluded(u64),
}

impl Target {
    pub fn p(&self) -> u64 {
        match self {
            Target::Run(p) | Target::Excluded(p) => *p,
        }
    }
}

/// Primes below 5 and the prime 7 are outside every hypothesis in the library.
pub fn is_excluded(p: u64) -> bool {
    p < 5 || p == 7
}

impl PrimeSpec {
    /// Primes in ascending order without duplicates. Composites inside a
    /// range are passed over; an explicit composite is a usage error.
    pub fn targets(&self) -> Result<Vec<Target>, CliError> {
        let mut ps: Vec<u64> = match self {
            PrimeSpec::Range { lo, hi } => (*lo..=*hi).filter(|&n| is_prime(n)).collect(),
            PrimeSpec::List(v) => {
                if let Some(&n) = v.iter().find(|&&n| !is_prime(n)) {
                    return Err(CliError::Usage(format!("{n} is not prime")));
                }
                v.clone()
            }
        };
        ps.sort_unstable();
        ps.dedup();
        Ok(ps.into_iter().map(|p| if is_excluded(p) { Target::Excluded(p) } else { Target::Run(p) }).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub primes: Option<PrimeSpec>,
    pub prec: usize,
    pub bits: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub fail_fast: bool,
    pub check_oracle: bool,
}

/// Below this the CM evaluator refuses to run.
pub const MIN_BITS: u32 = 128;

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            primes: None,
            prec: fricke7_core::qseries::DEFAULT_PREC,
            bits: fricke7_core::cmeval::DEFAULT_BITS,
            format: Format::Table,
            out: None,
            jobs: 1,
            fail_fast: false,
            check_oracle: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(PrimeSpec::Range { lo, hi }) = &self.primes {
            if lo > hi {
                return Err(CliError::Usage(format!("empty range {lo}..{hi}")));
            }
        }
        if self.command.takes_primes() && self.primes.is_none() {
            return Err(CliError::Usage(format!("`{}` needs --primes", self.command.name())));
        }
        if self.prec < fricke7_core::qseries::MIN_PREC {
            return Err(CliError::Usage(format!(
                "--prec must be at least {}",
                fricke7_core::qseries::MIN_PREC
            )));
        }
        if self.bits < MIN_BITS {
            return Err(CliError::Usage(format!("--bits must be at least {MIN_BITS}")));
        }
        if self.jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn targets(&self) -> Result<Vec<Target>, CliError> {
        match &self.primes {
            Some(spec) => spec.targets(),
            None => Ok(Vec::new()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_lists() {
        assert_eq!("11..100".parse::<PrimeSpec>().unwrap(), PrimeSpec::Range { lo: 11, hi: 100 });
        assert_eq!("5..=9".parse::<PrimeSpec>().unwrap(), PrimeSpec::Range { lo: 5, hi: 9 });
        assert_eq!("41, 13".parse::<PrimeSpec>().unwrap(), PrimeSpec::List(vec![41, 13]));
        assert!("a..3".parse::<PrimeSpec>().is_err());
        assert!("".parse::<PrimeSpec>().is_err());
    }

    #[test]
    fn targets_skip_composites_in_ranges_only() {
        let t = "2..13".parse::<PrimeSpec>().unwrap().targets().unwrap();
        let want = vec![
            Target::Excluded(2),
            Target::Excluded(3),
            Target::Run(5),
            Target::Excluded(7),
            Target::Run(11),
            Target::Run(13),
        ];
        assert_eq!(t, want);
        assert!(matches!("4".parse::<PrimeSpec>().unwrap().targets(), Err(CliError::Usage(_))));
        assert_eq!("13,11,13".parse::<PrimeSpec>().unwrap().targets().unwrap(), vec![Target::Run(11), Target::Run(13)]);
    }

    #[test]
    fn invariants() {
        let mut c = RunConfig::new(Command::Hasse);
        assert!(c.validate().is_err());
        c.primes = Some(PrimeSpec::Range { lo: 20, hi: 10 });
        assert!(c.validate().is_err());
        c.primes = Some(PrimeSpec::Range { lo: 10, hi: 20 });
        c.validate().unwrap();
        c.prec = 9;
        assert!(c.validate().is_err());
        c.prec = 10;
        c.jobs = 0;
        assert!(c.validate().is_err());
        c.jobs = 1;
        c.bits = 64;
        assert!(c.validate().is_err());
    }
}
