//! Structured pass/fail records for the verification suites.

use serde::Serialize;
use serde_json::Value;

/// Parameters a suite ran with; serialized into every report so a run can
/// be reproduced exactly.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportParams {
    pub height: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_len: usize,
}

impl ReportParams {
    pub fn new(height: usize) -> Self {
        Self {
            height,
            samples: 0,
            seed: 0,
            max_len: 0,
        }
    }

    pub fn with_samples(mut self, samples: usize, seed: u64) -> Self {
        self.samples = samples;
        self.seed = seed;
        self
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = max_len;
        self
    }
}

/// One verified statement. `witness` carries a counterexample on failure,
/// or the exhibited data when the check is constructive.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub q: Value,
    pub gauge: Value,
    pub params: ReportParams,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, q: Value, gauge: Value, params: ReportParams) -> Self {
        Self {
            suite: suite.to_string(),
            q,
            gauge,
            params,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, check: impl Into<String>, pass: bool, witness: Option<Value>) {
        self.results.push(CheckResult {
            check: check.into(),
            pass,
            witness,
        });
    }

    /// Record a named check that passes unless a witness was collected.
    pub fn push_outcome(&mut self, check: impl Into<String>, witness: Option<Value>) {
        let pass = witness.is_none();
        self.results.push(CheckResult {
            check: check.into(),
            pass,
            witness,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    /// Merge another report's results under this suite, prefixing ids.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization is infallible")
    }
}
