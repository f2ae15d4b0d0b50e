//! Run reports. Every command can emit either human-readable text or a
//! structured JSON document with a fixed field order, so identical flags
//! always produce byte-identical output.
//!
//! Structured schema:
//! ```json
//! {
//!   "run": {
//!     "command": "verify-identities",
//!     "m": 4,
//!     "parameters": "symbolic",
//!     "order": null,
//!     "seed": null,
//!     "suite": "spair"
//!   },
//!   "checks": [
//!     { "name": "...", "status": "pass", "detail": "..." }
//!   ]
//! }
//! ```

use lauricella_core::report::SuiteReport;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub command: String,
    pub m: Option<u64>,
    pub parameters: String,
    pub order: Option<String>,
    pub seed: Option<u64>,
    pub suite: Option<String>,
}

impl RunMeta {
    pub fn new(command: &str) -> Self {
        RunMeta {
            command: command.to_string(),
            m: None,
            parameters: "symbolic".to_string(),
            order: None,
            seed: None,
            suite: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub run: RunMeta,
    pub checks: Vec<CheckOut>,
}

impl Report {
    pub fn new(run: RunMeta) -> Self {
        Report {
            run,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckOut {
            name: name.into(),
            status: if pass { "pass" } else { "fail" }.to_string(),
            detail: detail.into(),
        });
    }

    pub fn absorb(&mut self, suite: &SuiteReport) {
        for c in &suite.checks {
            self.push(c.name.clone(), c.pass, c.detail.clone());
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn render_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.status == "pass" { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{tag} {}\n", c.name));
            } else {
                out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
            }
        }
        let failed = self.checks.iter().filter(|c| c.status != "pass").count();
        if failed == 0 {
            out.push_str(&format!("{} checks, all passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{} of {} checks failed\n",
                failed,
                self.checks.len()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_output_is_stable() {
        let mut meta = RunMeta::new("rank");
        meta.m = Some(3);
        let mut r = Report::new(meta);
        r.push("rank", true, "8");
        let a = r.render_structured();
        let b = r.render_structured();
        assert_eq!(a, b);
        assert!(a.starts_with("{\n  \"run\": {\n    \"command\": \"rank\""));
        assert!(a.contains("\"status\": \"pass\""));
    }

    #[test]
    fn text_output_counts_failures() {
        let mut r = Report::new(RunMeta::new("x"));
        r.push("one", true, "");
        r.push("two", false, "difference at term 3");
        assert!(!r.all_pass());
        let t = r.render_text();
        assert!(t.contains("PASS one\n"));
        assert!(t.contains("FAIL two: difference at term 3\n"));
        assert!(t.contains("1 of 2 checks failed\n"));
    }
}
