use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed law together with the elements that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub witness: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A validation outcome. Empty means every checked law holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, rule: impl Into<String>, witness: &[usize]) {
        self.violations.push(Violation { rule: rule.into(), witness: witness.to_vec(), detail: None });
    }

    pub fn push_detail(&mut self, rule: impl Into<String>, witness: &[usize], detail: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.into(),
            witness: witness.to_vec(),
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn first_with_rule(&self, rule: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.rule == rule)
    }

    /// Distinct rule names in order of first appearance.
    pub fn rules(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.rule.as_str()) {
                out.push(&v.rule);
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {} at {:?}", v.rule, v.witness)?;
            if let Some(d) = &v.detail {
                write!(f, " ({d})")?;
            }
        }
        if self.violations.len() > 8 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}
