//! Machine-readable verification reports. Exact values serialize as
//! strings ("p/q", {"coeff", "radicand"}), never as floats; residual
//! cases carry their tolerance so a report is self-describing. Cases are
//! sorted by id, making reports reproducible regardless of execution
//! order.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CaseResult {
    pub id: String,
    pub inputs: Value,
    /// Absolute residual magnitude, for floating-point checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<f64>,
    /// Exact-match flag, for structural equality checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl CaseResult {
    pub fn from_residual(id: impl Into<String>, inputs: Value, residual: f64, tol: f64) -> Self {
        let residual = residual.abs();
        Self {
            id: id.into(),
            inputs,
            residual: Some(residual),
            exact: None,
            tolerance: Some(tol),
            pass: residual <= tol,
        }
    }

    pub fn from_exact(id: impl Into<String>, inputs: Value, matched: bool) -> Self {
        Self {
            id: id.into(),
            inputs,
            residual: None,
            exact: Some(matched),
            tolerance: None,
            pass: matched,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts cases by id and fills in the summary.
    pub fn assemble(suite: impl Into<String>, mut cases: Vec<CaseResult>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let summary = summarize(&cases);
        Self {
            suite: suite.into(),
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

pub fn summarize(cases: &[CaseResult]) -> Summary {
    Summary {
        total: cases.len(),
        passed: cases.iter().filter(|c| c.pass).count(),
        max_residual: cases
            .iter()
            .filter_map(|c| c.residual)
            .fold(None, |acc: Option<f64>, r| {
                Some(acc.map_or(r, |a| a.max(r)))
            }),
    }
}
