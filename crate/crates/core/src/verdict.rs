use serde_json::{json, Value};

/// Outcome of an exhaustive or sampled check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub checked: u64,
    pub counterexamples: Vec<String>,
}

impl Verdict {
    pub fn pass(checked: u64) -> Self {
        Verdict { ok: true, checked, counterexamples: Vec::new() }
    }

    pub fn from_failures(checked: u64, counterexamples: Vec<String>) -> Self {
        Verdict { ok: counterexamples.is_empty(), checked, counterexamples }
    }

    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.ok &= other.ok;
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({"ok": self.ok, "checked": self.checked, "counterexamples": self.counterexamples})
    }
}
