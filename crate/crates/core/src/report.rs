//! Check reports shared by validators and batteries.

use std::fmt::Write as _;

use serde::Serialize;

pub const REPORT_SCHEMA: &str = "hopfcheck-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    RejectedHypothesis,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::RejectedHypothesis => "rejected-hypothesis",
        }
    }
}

/// A named condition; `None` means it was not decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub value: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema: &'static str,
    pub label: String,
    pub battery: String,
    pub status: Status,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Witness>,
    pub facts: Vec<Fact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(label: impl Into<String>, battery: impl Into<String>) -> Self {
        CheckReport {
            schema: REPORT_SCHEMA,
            label: label.into(),
            battery: battery.into(),
            status: Status::Pass,
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            facts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, value: Option<bool>) {
        self.verdicts.push(Verdict {
            name: name.into(),
            value,
        });
    }

    pub fn witness(&mut self, condition: impl Into<String>, detail: impl Into<String>) {
        self.witnesses.push(Witness {
            condition: condition.into(),
            detail: detail.into(),
        });
    }

    pub fn fact(&mut self, name: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn get(&self, name: &str) -> Option<Option<bool>> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| v.value)
    }

    pub fn get_fact(&self, name: &str) -> Option<&str> {
        self.facts
            .iter()
            .find(|f| f.name == name)
            .map(|f| f.value.as_str())
    }

    /// For validators: valid exactly when no violation was recorded.
    pub fn is_valid(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Sets the status of a validator report from its witnesses.
    pub fn close_validation(mut self) -> Self {
        self.status = if self.witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    /// Marks the report failed; a failure always carries a witness.
    pub fn fail(&mut self, condition: impl Into<String>, detail: impl Into<String>) {
        self.status = Status::Fail;
        self.witness(condition, detail);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[{}] {} {}", self.status.as_str(), self.battery, self.label);
        for v in &self.verdicts {
            let val = match v.value {
                Some(true) => "true",
                Some(false) => "false",
                None => "undecided",
            };
            let _ = writeln!(s, "  {:<28} {}", v.name, val);
        }
        for f in &self.facts {
            let _ = writeln!(s, "  {:<28} {}", f.name, f.value);
        }
        for w in &self.witnesses {
            let _ = writeln!(s, "  witness {}: {}", w.condition, w.detail);
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "  time {t} ms");
        }
        s
    }
}
