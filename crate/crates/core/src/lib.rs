//! Exact arithmetic for the Tate normal form `E7` and the Fricke group `Γ0*(7)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs: polynomial arithmetic over prime fields, exact
//! integer and number-ring polynomials, class numbers, Hasse invariants,
//! supersingular polynomials, truncated q-series and fixed-point complex
//! evaluation at CM points. IO, timing and parallel sweeps live in the
//! `fricke7` companion crate.

#![no_std]

extern crate alloc;

pub mod classnum;
pub mod cmeval;
pub mod constants;
pub mod error;
pub mod exactalg;
pub mod ffpoly;
pub mod fricke7;
pub mod hasse7;
pub mod qseries;

pub use error::{Error, Result};
pub use ffpoly::{FpPoly, Factorization, PrimeContext};

/// Outcome of a single verification check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The hypothesis holds but there is nothing to check (e.g. no supersingular `j` in range).
    PassVacuous,
    Fail(alloc::string::String),
    Skipped(alloc::string::String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::PassVacuous)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::PassVacuous => "PASS-VACUOUS",
            Verdict::Fail(_) => "FAIL",
            Verdict::Skipped(_) => "SKIP",
        }
    }

    pub(crate) fn check(ok: bool, detail: impl FnOnce() -> alloc::string::String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(detail())
        }
    }
}
