//! Pass/fail records for verification suites, with text and JSON rendering.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A check that is expected to fail did fail.
    NegativeControl,
}

/// One row of a report. `residual_terms` counts the terms left after
/// normalizing the difference of the two sides (0 on pass).
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub source: String,
    pub status: Status,
    pub residual_terms: usize,
    pub millis: u64,
    #[serde(skip)]
    pub residual: Option<String>,
    #[serde(skip)]
    pub note: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, source: impl Into<String>, ok: bool) -> Self {
        Check {
            id: id.into(),
            source: source.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual_terms: 0,
            millis: 0,
            residual: None,
            note: None,
        }
    }

    /// A check whose correct outcome is failure.
    pub fn control(id: impl Into<String>, source: impl Into<String>, failed: bool) -> Self {
        let mut c = Check::new(id, source, true);
        c.status = if failed { Status::NegativeControl } else { Status::Fail };
        c
    }

    pub fn with_residual(mut self, terms: usize, rendering: Option<String>) -> Self {
        self.residual_terms = terms;
        self.residual = rendering;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    /// Conjunction over all items; negative controls count when they fail as expected.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// Keep only the named check ids.
    pub fn only(mut self, ids: &[String]) -> Self {
        if !ids.is_empty() {
            self.checks.retain(|c| ids.iter().any(|i| i == &c.id));
        }
        self
    }

    pub fn render_text(&self, verbose: bool) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NegativeControl => "CTRL",
            };
            let _ = write!(s, "{tag} {:<24} {:<48} {:>6} ms", c.id, c.source, c.millis);
            if c.residual_terms > 0 {
                let _ = write!(s, "  residual terms: {}", c.residual_terms);
            }
            if let Some(n) = &c.note {
                let _ = write!(s, "  [{n}]");
            }
            s.push('\n');
            if verbose || c.status == Status::Fail {
                if let Some(r) = &c.residual {
                    let _ = writeln!(s, "     residual: {r}");
                }
            }
        }
        let _ = writeln!(
            s,
            "{}: {} pass, {} fail, {} negative-control",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::NegativeControl)
        );
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.checks).expect("report serializes")
    }
}
