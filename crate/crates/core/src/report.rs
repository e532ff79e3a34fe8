//! Pass/fail reports shared by the verification operations.

use std::fmt;

use serde::Serialize;

/// One named check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A titled list of checks; the report passes iff every check does.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> VerificationReport {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for check in &self.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            if check.detail.is_empty() {
                writeln!(f, "{tag} {}", check.name)?;
            } else {
                writeln!(f, "{tag} {} — {}", check.name, check.detail)?;
            }
        }
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "overall: {overall} ({} checks)", self.checks.len())
    }
}
