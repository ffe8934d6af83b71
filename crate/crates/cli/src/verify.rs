//! The `verify` suite: every identity and verification routine in a fixed order.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use splitjac_core::identities::s2_oracle_membership;
use splitjac_core::{
    check_identity, sample_c1_c2_singularity, verify_c3_system, verify_minors_on_iso1, verify_t3_points, verify_table1,
    CheckReport, CoreError, IdentityId, IdentityOptions, IdentityReport, Status,
};

use crate::input::UsageError;

/// Points per randomized identity check.
pub const IDENTITY_SAMPLES: usize = 100;
/// Curves drawn for the S2 oracle check.
pub const ORACLE_CURVES: usize = 50;
/// Points per component for the numeric singularity check.
pub const SINGULAR_SAMPLES: usize = 20;
/// Digits for the numeric singularity check.
pub const DEFAULT_PRECISION: usize = 60;
/// Prime for the minor check.
pub const DEFAULT_PRIME: u64 = 10007;
/// Points on and off the curve for the minor check.
pub const MINOR_POINTS: usize = 25;

pub const CHECK_IDS: [&str; 10] = [
    "theta_consistency",
    "eqr_consistency",
    "rho_factors_theta",
    "s3mod5_vanishes_on_theta",
    "s2_oracle_membership",
    "verify_c3_system",
    "verify_t3_points",
    "verify_table1",
    "verify_minors_on_iso1",
    "sample_c1_c2_singularity",
];

pub struct SuiteOptions {
    pub seed: u64,
    pub prime: u64,
    pub precision: usize,
}

impl SuiteOptions {
    pub fn new(seed: u64, prime: Option<u64>, precision: Option<usize>) -> anyhow::Result<Self> {
        let precision = precision.unwrap_or(DEFAULT_PRECISION);
        splitjac_core::numeric::check_precision(precision).map_err(|e| UsageError::new(e.to_string()))?;
        Ok(SuiteOptions {
            seed,
            prime: prime.unwrap_or(DEFAULT_PRIME),
            precision,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: Status,
    pub method: String,
    pub runtime_ms: u64,
    pub details: Value,
}

#[derive(Debug, Serialize)]
pub struct VerificationSuiteReport {
    pub seed: u64,
    pub checks: Vec<CheckEntry>,
    /// `pass`, `fail` or `discrepancies(n)`.
    pub overall: String,
    pub discrepancies: Vec<String>,
    pub failures: Vec<String>,
}

impl VerificationSuiteReport {
    fn new(seed: u64, checks: Vec<CheckEntry>) -> Self {
        let ids =
            |s: Status| -> Vec<String> { checks.iter().filter(|c| c.status == s).map(|c| c.id.clone()).collect() };
        let discrepancies = ids(Status::Discrepancy);
        let failures = ids(Status::Fail);
        let overall = if !failures.is_empty() {
            "fail".to_string()
        } else if !discrepancies.is_empty() {
            format!("discrepancies({})", discrepancies.len())
        } else {
            "pass".to_string()
        };
        VerificationSuiteReport {
            seed,
            checks,
            overall,
            discrepancies,
            failures,
        }
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!("{} checks, overall {}", self.checks.len(), self.overall);
        if !self.discrepancies.is_empty() {
            line.push_str(&format!("; discrepancies: {}", self.discrepancies.join(", ")));
        }
        if !self.failures.is_empty() {
            line.push_str(&format!("; failures: {}", self.failures.join(", ")));
        }
        line
    }
}

fn from_identity(r: IdentityReport) -> (Status, String, Value) {
    let details = json!({"samples": r.samples, "witnesses": r.witnesses, "notes": r.notes});
    (r.status, r.method, details)
}

fn from_check(r: CheckReport, method: String) -> (Status, String, Value) {
    (r.status, method, Value::Array(r.details))
}

fn run_check(id: &str, opts: &SuiteOptions) -> Result<(Status, String, Value), CoreError> {
    if let Some(identity) = IdentityId::from_name(id) {
        let o = IdentityOptions {
            seed: opts.seed,
            samples: IDENTITY_SAMPLES,
            symbolic: true,
        };
        return Ok(from_identity(check_identity(identity, &o)?));
    }
    Ok(match id {
        "s2_oracle_membership" => from_identity(s2_oracle_membership(opts.seed, ORACLE_CURVES)?),
        "verify_c3_system" => from_check(
            verify_c3_system()?,
            "exact residuals of the C3 equations, the z-lift and the S2 fiber over each listed point".into(),
        ),
        "verify_t3_points" => from_check(
            verify_t3_points()?,
            "exact r1, r2 system residuals, rho images, S2 membership and automorphism groups".into(),
        ),
        "verify_table1" => from_check(
            verify_table1()?,
            "exact theta values, minors and automorphism groups at the tabulated parameters".into(),
        ),
        "verify_minors_on_iso1" => from_check(
            verify_minors_on_iso1(opts.prime, MINOR_POINTS, opts.seed)?,
            format!(
                "theta minors over GF({}) at {MINOR_POINTS} points on iso1 and off it",
                opts.prime
            ),
        ),
        "sample_c1_c2_singularity" => from_check(
            sample_c1_c2_singularity(SINGULAR_SAMPLES, opts.precision, opts.seed)?,
            format!(
                "S2 value and gradient at the special point and {SINGULAR_SAMPLES} points per component at {} digits",
                opts.precision
            ),
        ),
        other => unreachable!("unlisted check {other}"),
    })
}

fn timed(id: &str, opts: &SuiteOptions) -> CheckEntry {
    let start = Instant::now();
    let (status, method, details) = match run_check(id, opts) {
        Ok(r) => r,
        Err(e) => (Status::Fail, "aborted".into(), json!({"error": e.to_string()})),
    };
    CheckEntry {
        id: id.to_string(),
        status,
        method,
        runtime_ms: start.elapsed().as_millis() as u64,
        details,
    }
}

/// Runs `check` (`all` or one id); checks run in parallel and are reported
/// in the order of [`CHECK_IDS`].
pub fn run_suite(check: &str, opts: &SuiteOptions) -> anyhow::Result<VerificationSuiteReport> {
    let ids: Vec<&str> = if check == "all" {
        CHECK_IDS.to_vec()
    } else if CHECK_IDS.contains(&check) {
        vec![check]
    } else {
        let unknown = CoreError::UnknownCheck {
            given: check.to_string(),
            valid: format!("all, {}", CHECK_IDS.join(", ")),
        };
        return Err(UsageError::new(unknown.to_string()).into());
    };
    let checks = std::thread::scope(|scope| {
        let handles: Vec<_> = ids.iter().map(|id| scope.spawn(move || timed(id, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    Ok(VerificationSuiteReport::new(opts.seed, checks))
}
