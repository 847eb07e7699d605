//! Built-in verification suites. Each check produces one
//! [`VerificationRecord`]; a run passes when no record has status `fail`.

mod exact_suite;
mod family_suite;
pub mod manifest;
mod quadratic_suite;
mod shannon_suite;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::TruncationPolicy;
use crate::record::{Status, VerificationRecord};

pub use exact_suite::exact_suite;
pub use family_suite::family_suite;
pub use quadratic_suite::quadratic_suite;
pub use shannon_suite::shannon_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Family,
    Shannon,
    Quadratic,
    Exact,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "family" => Ok(Suite::Family),
            "shannon" => Ok(Suite::Shannon),
            "quadratic" => Ok(Suite::Quadratic),
            "exact" => Ok(Suite::Exact),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite {other:?} (family, shannon, quadratic, exact, all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Family => "family",
            Suite::Shannon => "shannon",
            Suite::Quadratic => "quadratic",
            Suite::Exact => "exact",
            Suite::All => "all",
        })
    }
}

/// Deliberate defects for checking that the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negate the weight-derivative recurrence wherever the suites use it.
    FlipDerivativeSign,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub policy: TruncationPolicy,
    pub exact_n: u32,
    pub exact_n_wide: u32,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            policy: TruncationPolicy::default(),
            exact_n: manifest::EXACT_N,
            exact_n_wide: manifest::EXACT_N_WIDE,
            fault: None,
        }
    }
}

impl VerifyConfig {
    /// Caps every exact check at `n_max`.
    pub fn with_exact_cap(mut self, n_max: u32) -> Self {
        self.exact_n = n_max;
        self.exact_n_wide = n_max;
        self
    }

    pub(crate) fn derivative_sign(&self) -> f64 {
        match self.fault {
            Some(Fault::FlipDerivativeSign) => -1.0,
            None => 1.0,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    match suite {
        Suite::Family => family_suite(cfg),
        Suite::Shannon => shannon_suite(cfg),
        Suite::Quadratic => quadratic_suite(cfg),
        Suite::Exact => exact_suite(cfg),
        Suite::All => [Suite::Family, Suite::Shannon, Suite::Quadratic, Suite::Exact]
            .into_iter()
            .flat_map(|s| run_suite(s, cfg))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        records.iter().fold(Summary::default(), |mut s, r| {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ReportOnly => s.report_only += 1,
            }
            s
        })
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks: {} pass, {} fail, {} report-only",
            self.pass + self.fail + self.report_only,
            self.pass,
            self.fail,
            self.report_only
        )
    }
}

/// Runs `body` against a fresh record; an error from `body` fails the record.
pub(crate) fn check(
    suite: &str,
    case_id: impl Into<String>,
    body: impl FnOnce(&mut VerificationRecord) -> Result<()>,
) -> VerificationRecord {
    let mut rec = VerificationRecord::new(suite, case_id);
    if let Err(e) = body(&mut rec) {
        rec.fail(format!("error: {e}"));
    }
    rec
}

/// Margin for a strict inequality `v > 0`: zero counts as a failure.
pub(crate) fn strict(v: f64) -> f64 {
    if v > 0.0 {
        v
    } else {
        v.min(0.0) - f64::MIN_POSITIVE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Family, Suite::Shannon, Suite::Quadratic, Suite::Exact, Suite::All] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn check_turns_errors_into_failures() {
        let r = check("s", "c", |_| Err(Error::InvalidArgument("boom".into())));
        assert_eq!(r.status, Status::Fail);
        assert!(r.location.contains("boom"));
        assert!(strict(0.0) < 0.0);
        assert_eq!(strict(2.0), 2.0);
    }

    #[test]
    fn family_suite_passes_and_fault_is_caught() {
        let clean = family_suite(&VerifyConfig::default());
        assert!(Summary::of(&clean).ok(), "{:?}", clean.iter().find(|r| !r.passed()));
        let cfg = VerifyConfig { fault: Some(Fault::FlipDerivativeSign), ..VerifyConfig::default() };
        assert!(!Summary::of(&family_suite(&cfg)).ok());
    }
}
