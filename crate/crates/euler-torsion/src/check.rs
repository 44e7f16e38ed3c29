//! Named pass/fail records shared by every verification suite.

use serde::{Deserialize, Serialize};

/// Outcome of one named identity check. Failures carry a witness; passing
/// checks may carry one too when the computed value is worth reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, pass: bool) -> Self {
        CheckResult { check: check.into(), pass, witness: None }
    }

    pub fn with_witness(check: impl Into<String>, pass: bool, witness: impl Into<String>) -> Self {
        CheckResult { check: check.into(), pass, witness: Some(witness.into()) }
    }
}

/// Collector used by the verify_* entry points.
#[derive(Clone, Debug, Default)]
pub struct CheckList {
    pub checks: Vec<CheckResult>,
}

impl CheckList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: impl Into<String>, pass: bool) {
        self.checks.push(CheckResult::new(check, pass));
    }

    pub fn push_witness(
        &mut self,
        check: impl Into<String>,
        pass: bool,
        witness: impl Into<String>,
    ) {
        self.checks.push(CheckResult::with_witness(check, pass, witness));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn find(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }
}
