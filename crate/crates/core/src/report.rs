//! Pass/fail reporting for the identity-verification suites.
//!
//! Verification operations never raise on a failed identity; they record
//! one entry per identity instance so callers (CLI, acceptance tests)
//! can render every line and derive an exit status.

use std::fmt;

/// Outcome of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Mismatch detail, populated only on failure.
    pub detail: Option<String>,
}

/// Ordered collection of checks under a suite label.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: None,
        });
    }

    /// Records equality of two displayable values, keeping both sides as
    /// detail when they differ.
    pub fn record_eq<T: PartialEq + fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: &T,
        actual: &T,
    ) {
        let passed = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: (!passed).then(|| format!("expected {expected}, got {actual}")),
        });
    }

    /// Appends all checks from another report, keeping this suite label.
    pub fn absorb(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed_count(&self) -> usize {
        self.checks.len() - self.passed_count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {}/{}", self.suite, check.name)?;
            if let Some(detail) = &check.detail {
                write!(f, ": {detail}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
