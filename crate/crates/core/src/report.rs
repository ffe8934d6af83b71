//! JSON report records shared by the verification routines.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The computation contradicts the published text but not this crate's
    /// own invariants.
    Discrepancy,
}

impl Status {
    /// Combines statuses: any failure fails, otherwise any discrepancy.
    pub fn merge(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Discrepancy, _) | (_, Status::Discrepancy) => Status::Discrepancy,
            _ => Status::Pass,
        }
    }

    pub fn from_ok(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
        })
    }
}

/// Outcome of an identity check between stored formulas.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub method: String,
    pub samples: usize,
    pub status: Status,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Value>,
}

/// Outcome of a verification routine.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub details: Vec<Value>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            status: Status::Pass,
            details: Vec::new(),
        }
    }

    /// Adds a detail record and folds its status into the report.
    pub fn push(&mut self, status: Status, detail: Value) {
        self.status = self.status.merge(status);
        self.details.push(detail);
    }

    pub fn count(&self, status: Status) -> usize {
        self.details
            .iter()
            .filter(|d| d.get("status").and_then(Value::as_str) == Some(&status.to_string()))
            .count()
    }
}
