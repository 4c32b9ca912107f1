//! Pass/fail reports produced by the verifiers.

use std::fmt::Write as _;

use serde::Serialize;

/// Failures kept per group; the count is always exact.
const MAX_LISTED: usize = 20;

/// One named group of exact checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckGroup {
    pub label: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckGroup {
    pub fn new(label: impl Into<String>) -> Self {
        CheckGroup {
            label: label.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records one check; `describe` runs only on failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub notes: Vec<String>,
    pub groups: Vec<CheckGroup>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            notes: Vec::new(),
            groups: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.groups.iter().all(CheckGroup::passed)
    }

    pub fn passed_groups(&self) -> usize {
        self.groups.iter().filter(|g| g.passed()).count()
    }

    pub fn group(&self, label_prefix: &str) -> Option<&CheckGroup> {
        self.groups
            .iter()
            .find(|g| g.label.starts_with(label_prefix))
    }

    /// Human-readable rendering; deterministic for a given report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for g in &self.groups {
            let status = if g.passed() { "pass" } else { "FAIL" };
            let _ = write!(out, "[{status}] {}: ", g.label);
            if g.passed() {
                let _ = write!(out, "{} checks", g.checked);
            } else {
                let _ = write!(out, "{} of {} checks failed", g.failed, g.checked);
            }
            if let Some(note) = &g.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
            for f in &g.failures {
                let _ = writeln!(out, "    - {f}");
            }
            if g.failed > g.failures.len() {
                let _ = writeln!(out, "    ... {} more", g.failed - g.failures.len());
            }
        }
        let _ = writeln!(
            out,
            "{}/{} check groups passed",
            self.passed_groups(),
            self.groups.len()
        );
        out
    }

    /// One `label<TAB>message` line per listed failure.
    pub fn failure_lines(&self) -> Vec<String> {
        self.groups
            .iter()
            .flat_map(|g| g.failures.iter().map(move |f| format!("{}\t{f}", g.label)))
            .collect()
    }
}
