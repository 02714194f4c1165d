//! Report assembly and rendering. The JSON layout keeps a fixed key order:
//! `config`, `claims`, `overall`, `runtime_ms`, with each claim record laid
//! out as `id`, `description`, `expected`, `computed`, `provenance`, `pass`.

use serde::Serialize;
use serde_json::Value;

use crate::config::{OutputFormat, VerifyConfig};

/// One evaluated claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub expected: Value,
    pub computed: Value,
    pub provenance: String,
    pub pass: bool,
}

/// Echo of the configuration the run used.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub q: String,
    pub seed: u64,
    pub trials: usize,
    pub claims: Vec<String>,
    pub format: String,
    pub version: String,
}

/// Full verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub claims: Vec<ClaimRecord>,
    pub overall: bool,
    pub runtime_ms: u64,
}

impl Report {
    pub fn new(cfg: &VerifyConfig, claims: Vec<ClaimRecord>, runtime_ms: u64) -> Self {
        let overall = claims.iter().all(|c| c.pass);
        Report {
            config: ConfigEcho {
                n: cfg.n,
                q: cfg.q_mode.label(),
                seed: cfg.seed,
                trials: cfg.trials,
                claims: cfg.claims.iter().map(|c| c.as_str().to_string()).collect(),
                format: cfg.format.label().to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            claims,
            overall,
            runtime_ms,
        }
    }

    /// Renders the report in the requested format, ending with a newline.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self)
                    .expect("report serialization cannot fail");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "qcohom verify  n={} q={} seed={} trials={}\n",
            self.config.n, self.config.q, self.config.seed, self.config.trials
        ));
        for claim in &self.claims {
            let verdict = if claim.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{:<4} {}  {} | expected {} | computed {}\n",
                claim.id,
                verdict,
                claim.description,
                compact(&claim.expected),
                compact(&claim.computed),
            ));
        }
        let total = self.claims.len();
        let failed = self.claims.iter().filter(|c| !c.pass).count();
        if self.overall {
            out.push_str(&format!("PASSED {total}/{total} ({} ms)\n", self.runtime_ms));
        } else {
            out.push_str(&format!("FAILED {failed}/{total} ({} ms)\n", self.runtime_ms));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("value serialization cannot fail")
}
