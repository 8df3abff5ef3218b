//! Structured outcome of a verification: status plus the witnesses that back it.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn witness(&self, label: &str) -> Option<&Value> {
        self.witnesses.iter().find(|w| w.label == label).map(|w| &w.value)
    }

    /// Labels of the expectations that did not hold.
    pub fn failures(&self) -> Vec<&str> {
        self.witnesses
            .iter()
            .filter(|w| w.value.get("ok") == Some(&Value::Bool(false)))
            .map(|w| w.label.as_str())
            .collect()
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| Value::String(format!("<unserializable: {e}>")))
}

/// Accumulates expectations and witnesses, then seals them into a report.
pub struct ReportBuilder {
    id: String,
    started: Instant,
    witnesses: Vec<Witness>,
    failed: bool,
    precondition_failed: bool,
}

impl ReportBuilder {
    pub fn new(id: impl Into<String>) -> Self {
        ReportBuilder {
            id: id.into(),
            started: Instant::now(),
            witnesses: Vec::new(),
            failed: false,
            precondition_failed: false,
        }
    }

    /// Records an informational witness.
    pub fn note(&mut self, label: impl Into<String>, value: impl Serialize) {
        self.witnesses.push(Witness {
            label: label.into(),
            value: to_value(value),
        });
    }

    /// Records an expectation; a false `ok` fails the report.
    pub fn expect(&mut self, label: impl Into<String>, ok: bool, detail: impl Serialize) -> bool {
        self.failed |= !ok;
        self.witnesses.push(Witness {
            label: label.into(),
            value: serde_json::json!({ "ok": ok, "detail": to_value(detail) }),
        });
        ok
    }

    pub fn precondition_failed(&mut self, label: impl Into<String>, detail: impl Serialize) {
        self.precondition_failed = true;
        self.witnesses.push(Witness {
            label: label.into(),
            value: serde_json::json!({ "ok": false, "precondition": true, "detail": to_value(detail) }),
        });
    }

    /// Folds a sub-report in: its status propagates, its witnesses are
    /// prefixed with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, report: &CheckReport) {
        match report.status {
            Status::Pass => {}
            Status::Fail => self.failed = true,
            Status::PreconditionFailed => self.precondition_failed = true,
        }
        self.witnesses.push(Witness {
            label: format!("{prefix}/status"),
            value: to_value(report.status),
        });
        for w in &report.witnesses {
            self.witnesses.push(Witness {
                label: format!("{prefix}/{}", w.label),
                value: w.value.clone(),
            });
        }
    }

    pub fn is_failing(&self) -> bool {
        self.failed || self.precondition_failed
    }

    pub fn finish(self) -> CheckReport {
        let status = if self.precondition_failed {
            Status::PreconditionFailed
        } else if self.failed {
            Status::Fail
        } else {
            Status::Pass
        };
        CheckReport {
            id: self.id,
            status,
            witnesses: self.witnesses,
            elapsed: self.started.elapsed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_report_carries_witness() {
        let mut b = ReportBuilder::new("demo");
        b.expect("one", true, 1);
        b.expect("two", false, "mismatch");
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures(), vec!["two"]);
    }

    #[test]
    fn precondition_dominates() {
        let mut b = ReportBuilder::new("demo");
        b.expect("x", false, ());
        b.precondition_failed("inverse", "g not invertible");
        assert_eq!(b.finish().status, Status::PreconditionFailed);
    }
}
