//! Verification reports.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub item: String,
    pub detail: String,
}

/// Outcome of one check: status, the violations found and how much was examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub checked: usize,
    pub findings: Vec<Finding>,
    pub notes: Vec<String>,
}

/// Findings beyond this count are summarized rather than listed.
pub const MAX_FINDINGS: usize = 32;

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), status: Status::Pass, checked: 0, findings: Vec::new(), notes: Vec::new() }
    }

    pub fn error(check: impl Into<String>, message: impl Into<String>) -> Self {
        let mut r = Report::new(check);
        r.status = Status::Error;
        r.notes.push(message.into());
        r
    }

    /// Records a violation and marks the report failed.
    pub fn violation(&mut self, item: impl Into<String>, detail: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
        if self.findings.len() < MAX_FINDINGS {
            self.findings.push(Finding { item: item.into(), detail: detail.into() });
        } else if self.findings.len() == MAX_FINDINGS {
            self.findings.push(Finding { item: "...".into(), detail: "further violations omitted".into() });
        }
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn tick(&mut self, n: usize) {
        self.checked += n;
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds another report in as a sub-check.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        match other.status {
            Status::Pass => {}
            Status::Fail if self.status == Status::Pass => self.status = Status::Fail,
            Status::Error => self.status = Status::Error,
            _ => {}
        }
        for f in other.findings {
            self.violation(format!("{}: {}", other.check, f.item), f.detail);
        }
        if other.status == Status::Error {
            for n in other.notes {
                self.notes.push(format!("{}: {}", other.check, n));
            }
        }
    }

    /// Summary detail used in the `CHECK` line.
    pub fn detail(&self) -> String {
        match self.status {
            Status::Pass => format!("checked={}", self.checked),
            Status::Fail => format!(
                "checked={} violations={}{}",
                self.checked,
                self.findings.len(),
                self.findings.first().map(|f| format!(" first={} {}", f.item, f.detail)).unwrap_or_default()
            ),
            Status::Error => self.notes.first().cloned().unwrap_or_else(|| "error".into()),
        }
    }

    /// Machine-parsable text form: one `CHECK` line followed by findings and notes.
    pub fn render(&self) -> String {
        let mut s = format!("CHECK {} {} {}\n", self.check, self.status, self.detail());
        for f in &self.findings {
            s.push_str(&format!("  finding: {} {}\n", f.item, f.detail));
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
