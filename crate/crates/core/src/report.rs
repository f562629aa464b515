//! Small result-reporting types shared by the exhaustive checkers.

use std::fmt;

/// Outcome of an exhaustive identity check: how many assertions ran and the
/// failures found (expected: none). Checkers record the first counterexample
/// with enough detail to replay it.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

/// One failed assertion: a stable identifier, the inputs, and the nonzero
/// difference that witnesses the failure.
#[derive(Clone, Debug)]
pub struct CheckFailure {
    pub id: String,
    pub inputs: String,
    pub difference: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn record(&mut self) {
        self.checks += 1;
    }

    pub(crate) fn fail(&mut self, id: impl Into<String>, inputs: impl Into<String>, diff: impl Into<String>) {
        self.failures.push(CheckFailure {
            id: id.into(),
            inputs: inputs.into(),
            difference: diff.into(),
        });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} checks)", self.checks)
        } else {
            write!(f, "fail ({} checks, {} failures)", self.checks, self.failures.len())?;
            for fail in &self.failures {
                write!(f, "\n  {}: {} -> {}", fail.id, fail.inputs, fail.difference)?;
            }
            Ok(())
        }
    }
}
