//! Machine-readable run reports: per-check records with stable ordering so
//! repeated runs with the same configuration are byte-identical, in JSON,
//! CSV (flattened, fixed column order) or plain text.

use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::scalars::Backend;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational outcome (observed anomalies, as-printed transcriptions);
    /// never affects the exit code.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

#[derive(Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub witness: serde_json::Value,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    pub fn new(id: &str, paper_ref: &str, pass: bool, witness: serde_json::Value) -> Self {
        CheckRecord {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            witness,
            elapsed_ms: 0,
        }
    }

    pub fn flagged(id: &str, paper_ref: &str, witness: serde_json::Value) -> Self {
        CheckRecord {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: Status::Flagged,
            witness,
            elapsed_ms: 0,
        }
    }
}

#[derive(Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub version: String,
    pub backend: String,
    pub tolerance: f64,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    #[serde(skip)]
    timer: Option<std::time::Instant>,
}

impl SuiteResult {
    pub fn new(suite: &str, cfg: &RunConfig) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            backend: cfg.backend.name().to_string(),
            tolerance: cfg.tolerance,
            seed: cfg.seed,
            checks: Vec::new(),
            // timings are opt-in so that default reports are byte-identical
            timer: cfg.timings.then(std::time::Instant::now),
        }
    }

    pub fn push(&mut self, mut rec: CheckRecord) {
        if let Some(prev) = self.timer {
            rec.elapsed_ms = prev.elapsed().as_millis() as u64;
            self.timer = Some(std::time::Instant::now());
        }
        self.checks.push(rec);
    }

    /// Exit-code contract: success exactly when nothing failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Column order: suite, id, paper_ref, status, witness, elapsed_ms.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("suite,id,paper_ref,status,witness,elapsed_ms\n");
        for c in &self.checks {
            let witness = serde_json::to_string(&c.witness).unwrap_or_default();
            let quoted = witness.replace('"', "\"\"");
            out.push_str(&format!(
                "{},{},{},{},\"{}\",{}\n",
                self.suite, c.id, c.paper_ref, c.status, quoted, c.elapsed_ms
            ));
        }
        out
    }

    pub fn to_text_string(&self) -> String {
        let mut out = format!(
            "suite {} (backend {}, tolerance {}, seed {})\n",
            self.suite, self.backend, self.tolerance, self.seed
        );
        for c in &self.checks {
            out.push_str(&format!("  [{}] {} ({})\n", c.status, c.id, c.paper_ref));
            if c.status == Status::Fail || c.status == Status::Flagged {
                out.push_str(&format!("        {}\n", c.witness));
            }
        }
        let (pass, fail, flagged) = self.tally();
        out.push_str(&format!("  {} passed, {} failed, {} flagged\n", pass, fail, flagged));
        out
    }

    pub fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                Status::Pass => t.0 += 1,
                Status::Fail => t.1 += 1,
                Status::Flagged => t.2 += 1,
            }
        }
        t
    }

    pub fn render(&self, format: OutFormat) -> String {
        match format {
            OutFormat::Json => self.to_json_string(),
            OutFormat::Csv => self.to_csv_string(),
            OutFormat::Text => self.to_text_string(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutFormat::Json),
            "csv" => Ok(OutFormat::Csv),
            "text" => Ok(OutFormat::Text),
            other => Err(format!("unknown format `{other}` (expected json|csv|text)")),
        }
    }
}

/// Shared run options; the seed defaults to 0 and tolerances are ignored by
/// the exact backends.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub backend: Backend,
    pub tolerance: f64,
    pub seed: u64,
    pub format: OutFormat,
    pub out: Option<PathBuf>,
    /// Record wall-clock times per check; off by default so that reports are
    /// byte-identical across runs.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            backend: Backend::Gauss,
            tolerance: 1e-9,
            seed: 0,
            format: OutFormat::Json,
            out: None,
            timings: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_text_shapes() {
        let cfg = RunConfig::default();
        let mut r = SuiteResult::new("demo", &cfg);
        r.push(CheckRecord::new("a", "1.2", true, serde_json::json!({"k": 1})));
        r.push(CheckRecord::new("b", "3.4", false, serde_json::json!("boom")));
        r.push(CheckRecord::flagged("c", "5.6", serde_json::json!("odd")));
        assert!(!r.passed());
        let csv = r.to_csv_string();
        assert!(csv.starts_with("suite,id,paper_ref,status,witness,elapsed_ms\n"));
        assert_eq!(csv.lines().count(), 4);
        let text = r.to_text_string();
        assert!(text.contains("[fail] b"));
        assert!(text.contains("1 passed, 1 failed, 1 flagged"));
        // flagged alone does not fail a suite
        let mut ok = SuiteResult::new("demo2", &cfg);
        ok.push(CheckRecord::flagged("c", "5.6", serde_json::json!("odd")));
        assert!(ok.passed());
    }
}
