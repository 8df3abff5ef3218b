use std::collections::BTreeSet;

use aydc::report::{CheckReport, Status};
use serde::Serialize;

use crate::catalogue::{catalogue, Entry};
use crate::context::Context;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Ids(Vec<String>),
    Tags(Vec<String>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub precondition_failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::PreconditionFailed => "PRECONDITION-FAILED",
            };
            out.push_str(&format!(
                "{status:<20} {:<28} {:>10.1} ms",
                c.id,
                c.elapsed.as_secs_f64() * 1e3
            ));
            let failures = c.failures();
            if !failures.is_empty() {
                out.push_str(&format!("  [{}]", failures.join("; ")));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} precondition-failed\n",
            s.total, s.passed, s.failed, s.precondition_failed
        ));
        out
    }
}

/// Resolves a selector to catalogue entries, sorted by id.
pub fn select(selector: &Selector) -> Result<Vec<Entry>, String> {
    let all = catalogue();
    match selector {
        Selector::All => Ok(all),
        Selector::Ids(ids) => {
            let known: BTreeSet<&str> = all.iter().map(|e| e.id).collect();
            if let Some(bad) = ids.iter().find(|id| !known.contains(id.as_str())) {
                return Err(format!("unknown check id: {bad}"));
            }
            Ok(all.into_iter().filter(|e| ids.iter().any(|id| id == e.id)).collect())
        }
        Selector::Tags(tags) => {
            let chosen: Vec<Entry> = all
                .into_iter()
                .filter(|e| e.tags.iter().any(|t| tags.iter().any(|u| u == t)))
                .collect();
            if chosen.is_empty() {
                return Err(format!("no checks carry the tags {}", tags.join(", ")));
            }
            Ok(chosen)
        }
    }
}

pub fn run(entries: &[Entry], ctx: &Context) -> RunReport {
    let checks: Vec<CheckReport> = entries.iter().map(|e| e.run(ctx)).collect();
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        total: checks.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        precondition_failed: count(Status::PreconditionFailed),
    };
    RunReport { checks, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<&str> = catalogue().iter().map(|e| e.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn selectors() {
        assert!(select(&Selector::Ids(vec!["nope".into()])).is_err());
        let picked = select(&Selector::Ids(vec!["taft-axioms".into(), "cross-relation".into()])).unwrap();
        assert_eq!(
            picked.iter().map(|e| e.id).collect::<Vec<_>>(),
            ["cross-relation", "taft-axioms"]
        );
        assert!(select(&Selector::Tags(vec!["classical".into()]))
            .unwrap()
            .iter()
            .all(|e| e.tags.contains(&"classical")));
        assert!(select(&Selector::Tags(vec!["none".into()])).is_err());
    }
}
