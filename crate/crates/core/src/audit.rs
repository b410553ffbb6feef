//! Tallies of checked cases and the counterexamples found among them.

use serde::Serialize;
use serde_json::Value;

/// Counterexamples kept per audit; the total count is always exact.
pub const KEPT_VIOLATIONS: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub witness: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Audit {
    pub cases: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl Audit {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one case; `witness` is only built when `ok` is false.
    pub fn check(&mut self, ok: bool, rule: &str, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.fail(rule, witness());
        }
    }

    pub fn fail(&mut self, rule: &str, witness: Value) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_VIOLATIONS {
            self.violations.push(Violation {
                rule: rule.to_string(),
                witness,
            });
        }
    }

    pub fn merge(&mut self, other: Audit) {
        self.cases += other.cases;
        self.violation_count += other.violation_count;
        let room = KEPT_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn merged(audits: impl IntoIterator<Item = Audit>) -> Audit {
        audits.into_iter().fold(Audit::new(), |mut acc, a| {
            acc.merge(a);
            acc
        })
    }
}
