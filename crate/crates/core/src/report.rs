//! Check records and report rendering for the verification suite.
//!
//! Rendered output is deterministic byte-for-byte: per-check timings are
//! kept on the records for diagnostics (the CLI logs them to stderr) but
//! never rendered into the report body.

use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub section: String,
    pub description: String,
    /// Short verbatim quote locating the claim being checked.
    pub anchor: String,
    pub verdict: Verdict,
    /// Witness summary, or the infeasibility reason for SKIPPED entries.
    pub witness: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn has_fail(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut skipped = 0;
        for c in &self.checks {
            match c.verdict {
                Verdict::Pass => pass += 1,
                Verdict::Fail => fail += 1,
                Verdict::Skipped => skipped += 1,
            }
        }
        (pass, fail, skipped)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<7} {:<32} {} | witness: {} | anchor: \"{}\"\n",
                c.verdict.to_string(),
                format!("{}/{}", c.section, c.id),
                c.description,
                c.witness,
                c.anchor,
            ));
        }
        let (pass, fail, skipped) = self.counts();
        out.push_str(&format!(
            "checks={} pass={} fail={} skipped={}\n",
            self.checks.len(),
            pass,
            fail,
            skipped
        ));
        out
    }

    pub fn render_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}
