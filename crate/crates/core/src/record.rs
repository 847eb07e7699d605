//! Outcome of one named check.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Evidence only; never affects exit codes.
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        })
    }
}

/// One identity, inequality, or residual check.
///
/// For inequality checks `worst_margin` is the smallest slack seen (negative
/// means violated); for residual checks it is `tolerance - worst residual`,
/// so negative again means failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub suite: String,
    pub case_id: String,
    pub status: Status,
    pub worst_margin: f64,
    pub location: String,
}

impl VerificationRecord {
    pub fn new(suite: &str, case_id: impl Into<String>) -> Self {
        VerificationRecord {
            suite: suite.to_string(),
            case_id: case_id.into(),
            status: Status::Pass,
            worst_margin: f64::INFINITY,
            location: String::new(),
        }
    }

    /// Fold in one observed margin; the record fails as soon as any margin
    /// is negative (or NaN).
    pub fn observe(&mut self, margin: f64, location: impl FnOnce() -> String) {
        if margin.is_nan() || margin < self.worst_margin {
            self.worst_margin = margin;
            self.location = location();
        }
        if (margin.is_nan() || margin < 0.0) && self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    /// Mark as a failure regardless of margins (used for errors raised while
    /// running the check).
    pub fn fail(&mut self, why: impl Into<String>) {
        self.status = Status::Fail;
        self.location = why.into();
        if !(self.worst_margin < 0.0) {
            self.worst_margin = f64::NEG_INFINITY;
        }
    }

    pub fn report_only(mut self) -> Self {
        self.status = Status::ReportOnly;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}/{} worst_margin={:e} at {}",
            self.status, self.suite, self.case_id, self.worst_margin, self.location
        )
    }
}
