//! Results of identity checks.

use serde_json::{json, Value};

use crate::category::{Morphism, Window};

/// A failing entry of an identity: basis input, basis output and the two sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub input: String,
    pub output: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub subject: String,
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            outcomes: vec![],
        }
    }

    /// Records whether `lhs == rhs` (on admitted columns when a window is given).
    pub fn identity(
        &mut self,
        name: &str,
        lhs: &Morphism,
        rhs: &Morphism,
        window: Option<Window>,
    ) -> bool {
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            self.outcomes.push(CheckOutcome {
                name: name.into(),
                passed: false,
                counterexample: None,
                note: Some(format!(
                    "type mismatch: {} -> {} vs {} -> {}",
                    lhs.dom().name(),
                    lhs.cod().name(),
                    rhs.dom().name(),
                    rhs.cod().name()
                )),
            });
            return false;
        }
        let diff = lhs.first_difference(rhs, window);
        let passed = diff.is_none();
        let counterexample = diff.map(|(i, j, a, b)| Counterexample {
            input: lhs.dom().label(j),
            output: lhs.cod().label(i),
            lhs: a.to_string(),
            rhs: b.to_string(),
        });
        self.outcomes.push(CheckOutcome {
            name: name.into(),
            passed,
            counterexample,
            note: None,
        });
        passed
    }

    pub fn condition(&mut self, name: &str, passed: bool, note: Option<String>) -> bool {
        self.outcomes.push(CheckOutcome {
            name: name.into(),
            passed,
            counterexample: None,
            note,
        });
        passed
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed).collect()
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    /// Appends another report's outcomes, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut o in other.outcomes {
            if !prefix.is_empty() {
                o.name = format!("{prefix}/{}", o.name);
            }
            self.outcomes.push(o);
        }
    }

    pub fn to_json(&self) -> Value {
        let outcomes: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut v = json!({"name": o.name, "passed": o.passed});
                if let Some(c) = &o.counterexample {
                    v["counterexample"] =
                        json!({"input": c.input, "output": c.output, "lhs": c.lhs, "rhs": c.rhs});
                }
                if let Some(n) = &o.note {
                    v["note"] = json!(n);
                }
                v
            })
            .collect();
        json!({"subject": self.subject, "passed": self.passed(), "outcomes": outcomes})
    }
}
