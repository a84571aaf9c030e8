use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One check in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    pub detail: String,
}

impl Entry {
    pub fn new(name: impl Into<String>, paper_ref: &str, status: Status, detail: impl Into<String>) -> Self {
        Self { name: name.into(), paper_ref: paper_ref.to_string(), status, detail: detail.into() }
    }

    pub fn check(name: impl Into<String>, paper_ref: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self::new(name, paper_ref, Status::from_bool(passed), detail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub parameters: BTreeMap<String, String>,
    /// Sorted by name.
    pub checks: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, parameters: BTreeMap<String, String>, mut checks: Vec<Entry>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let failed = checks.iter().any(|c| c.status == Status::Fail);
        Self { command: command.to_string(), status: Status::from_bool(!failed), parameters, checks, data: None }
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = Some(data);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// `[("key", value)]` into a parameter map.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_sorted_and_status_aggregates() {
        let r = Report::new(
            "verify",
            params([("order", "3".into())]),
            vec![
                Entry::check("b", "x", true, ""),
                Entry::new("a", "x", Status::Skipped, ""),
                Entry::check("c", "x", false, "bad"),
            ],
        );
        let names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert_eq!(r.exit_code(), 1);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn skipped_does_not_fail() {
        let r = Report::new("x", BTreeMap::new(), vec![Entry::new("a", "x", Status::Skipped, "")]);
        assert!(r.passed());
    }
}
