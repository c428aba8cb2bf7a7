//! Serializable report types. Field names are the JSON keys and CSV headers.

use fricke7_core::Verdict;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "fricke7/1";

/// A verdict flattened for output: `PASS`, `PASS-VACUOUS`, `FAIL` or `SKIP`, plus the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn is_fail(&self) -> bool {
        self.verdict == "FAIL"
    }
}

impl From<&Verdict> for Check {
    fn from(v: &Verdict) -> Self {
        let detail = match v {
            Verdict::Fail(s) | Verdict::Skipped(s) => Some(s.clone()),
            _ => None,
        };
        Check { verdict: v.label().to_string(), detail }
    }
}

/// Checks that a prime row can carry. Unused ones stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub theorem1: Option<Check>,
    pub theorem_a: Option<Check>,
    pub conjecture2: Option<Check>,
    pub conjecture3: Option<Check>,
    pub props_2_4: Option<Check>,
    pub theorem7: Option<Check>,
    pub nakaya: Option<Check>,
    pub section3: Option<Check>,
    pub oracle: Option<Check>,
}

impl Checks {
    pub const NAMES: [&'static str; 9] = [
        "theorem1",
        "theorem_a",
        "conjecture2",
        "conjecture3",
        "props_2_4",
        "theorem7",
        "nakaya",
        "section3",
        "oracle",
    ];

    pub fn all(&self) -> [&Option<Check>; 9] {
        [
            &self.theorem1,
            &self.theorem_a,
            &self.conjecture2,
            &self.conjecture3,
            &self.props_2_4,
            &self.theorem7,
            &self.nakaya,
            &self.section3,
            &self.oracle,
        ]
    }

    pub fn any_fail(&self) -> bool {
        self.all().iter().any(|c| c.as_ref().is_some_and(Check::is_fail))
    }
}

/// One prime. Rational predictions are written as `a/b` strings (or `a` when integral).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub p: u64,
    pub p_mod_3: u64,
    pub p_mod_4: u64,
    pub p_mod_7: u64,
    pub p_mod_8: u64,
    pub r: Option<u8>,
    pub s: Option<u8>,
    pub n: Option<u64>,
    pub mu: Option<u8>,
    pub n1: Option<u64>,
    pub n2: Option<u64>,
    pub n3: Option<u64>,
    pub n6: Option<u64>,
    /// Supersingular `j` in `F_p`.
    pub l: Option<u64>,
    pub l7star: Option<u64>,
    /// Class numbers of `Q(sqrt(-p))` and `Q(sqrt(-7p))`.
    pub h_p: Option<u64>,
    pub h_7p: Option<u64>,
    pub pred_n1: Option<u64>,
    pub pred_n3: Option<u64>,
    pub pred_n6: Option<String>,
    pub pred_n2: Option<String>,
    pub a_p: Option<String>,
    pub pred_l7star: Option<String>,
    pub route: Option<String>,
    pub oracle_match: Option<bool>,
    /// Coefficients of `ss_p^(7*)`, lowest degree first.
    pub ss7star_coeffs: Option<Vec<u64>>,
    pub ss7star_factored: Option<String>,
    pub checks: Checks,
    /// Why the prime was not processed.
    pub skipped: Option<String>,
    /// Library error that stopped this prime.
    pub error: Option<String>,
}

impl ReportRow {
    pub fn new(p: u64) -> Self {
        ReportRow { p, p_mod_3: p % 3, p_mod_4: p % 4, p_mod_7: p % 7, p_mod_8: p % 8, ..Default::default() }
    }

    pub fn failed(&self) -> bool {
        self.error.is_some() || self.checks.any_fail()
    }
}

/// One entry of a registry suite (identities, q-series, CM).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub id: String,
    pub statement: String,
    pub check: Check,
    /// Short measured value: residual bound, factorization, compared range.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SuiteRow {
    pub fn failed(&self) -> bool {
        self.error.is_some() || self.check.is_fail()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Set when `--fail-fast` cut the run short.
    pub truncated: bool,
}

impl Summary {
    pub fn line(&self) -> String {
        let evaluated = self.passed + self.failed;
        let mut s = if self.failed == 0 {
            format!("PASS {}/{}", self.passed, evaluated)
        } else {
            format!("FAIL {}/{} failed", self.failed, evaluated)
        };
        if self.skipped > 0 {
            s.push_str(&format!(" ({} skipped)", self.skipped));
        }
        if self.truncated {
            s.push_str(" (stopped at first failure)");
        }
        s
    }
}

/// The whole output document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<ReportRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<SuiteRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &str, rows: Vec<ReportRow>, cases: Vec<SuiteRow>, truncated: bool) -> Self {
        let mut summary = Summary { total: rows.len() + cases.len(), truncated, ..Default::default() };
        for r in &rows {
            if r.skipped.is_some() {
                summary.skipped += 1;
            } else if r.failed() {
                summary.failed += 1;
            } else {
                summary.passed += 1;
            }
        }
        for c in &cases {
            if c.failed() {
                summary.failed += 1;
            } else {
                summary.passed += 1;
            }
        }
        Report { version: SCHEMA_VERSION.to_string(), command: command.to_string(), rows, cases, summary }
    }

    pub fn has_error(&self) -> bool {
        self.rows.iter().any(|r| r.error.is_some()) || self.cases.iter().any(|c| c.error.is_some())
    }
}
