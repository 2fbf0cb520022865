//! Named verification outcomes.

use serde::{Deserialize, Serialize};

use crate::chart::Chart;
use crate::scalar::RationalExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// One check. `witness` is canonical expression text: `0` for a passing
/// identity, the nonzero defect for a failing one. `anchor` states the
/// identity or criterion being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub id: String,
    pub status: Status,
    pub witness: String,
    pub anchor: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(suite: &str) -> CheckReport {
        CheckReport { suite: suite.to_string(), items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        debug_assert!(item.status != Status::Fail || (!item.witness.is_empty() && item.witness != "0"));
        self.items.push(item);
    }

    pub fn pass(&mut self, id: &str, anchor: &str, witness: &str, detail: impl Into<String>) {
        self.push(CheckItem {
            id: id.into(),
            status: Status::Pass,
            witness: witness.into(),
            anchor: anchor.into(),
            detail: detail.into(),
        });
    }

    /// A failing item. An empty or zero witness is replaced by `1`.
    pub fn fail(&mut self, id: &str, anchor: &str, witness: &str, detail: impl Into<String>) {
        let witness = if witness.is_empty() || witness == "0" { "1" } else { witness };
        self.push(CheckItem {
            id: id.into(),
            status: Status::Fail,
            witness: witness.into(),
            anchor: anchor.into(),
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, id: &str, anchor: &str, detail: impl Into<String>) {
        self.push(CheckItem {
            id: id.into(),
            status: Status::Skip,
            witness: String::new(),
            anchor: anchor.into(),
            detail: detail.into(),
        });
    }

    /// Records an upstream error as a failed item.
    pub fn error(&mut self, id: &str, anchor: &str, err: &crate::Error) {
        self.fail(id, anchor, "1", err.to_string());
    }

    /// Passes iff `defect` is zero.
    pub fn identity(&mut self, id: &str, anchor: &str, defect: &RationalExpr, chart: &Chart) {
        if defect.is_zero() {
            self.pass(id, anchor, "0", "");
        } else {
            self.fail(id, anchor, &defect.to_text(chart), "");
        }
    }

    /// Passes iff every labelled defect is zero; a failure names the first
    /// offending component and counts the rest.
    pub fn identities<I, L>(&mut self, id: &str, anchor: &str, chart: &Chart, defects: I)
    where
        I: IntoIterator<Item = (L, RationalExpr)>,
        L: std::fmt::Display,
    {
        let mut first: Option<(String, RationalExpr)> = None;
        let mut total = 0usize;
        let mut bad = 0usize;
        for (label, d) in defects {
            total += 1;
            if !d.is_zero() {
                bad += 1;
                if first.is_none() {
                    first = Some((label.to_string(), d));
                }
            }
        }
        match first {
            None => self.pass(id, anchor, "0", format!("{total} components")),
            Some((label, d)) => {
                self.fail(id, anchor, &d.to_text(chart), format!("{bad} of {total} components fail, first at {label}"))
            }
        }
    }

    /// Pass/fail on a verdict with an explanatory witness.
    pub fn verdict(&mut self, id: &str, anchor: &str, ok: bool, witness: &str, detail: impl Into<String>) {
        if ok {
            self.pass(id, anchor, witness, detail);
        } else {
            self.fail(id, anchor, witness, detail);
        }
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_never_carry_a_zero_witness() {
        let mut r = CheckReport::new("t");
        r.fail("a", "x = y", "0", "");
        assert_eq!(r.items[0].witness, "1");
        let ch = Chart::from_names("x");
        r.identity("b", "x - x = 0", &RationalExpr::zero(), &ch);
        r.identities("c", "", &ch, vec![("[1]", RationalExpr::zero()), ("[2]", RationalExpr::var(0))]);
        assert_eq!(r.item("c").unwrap().witness, "x");
        assert_eq!(r.count(Status::Fail), 2);
        assert!(!r.all_passed());
    }
}
