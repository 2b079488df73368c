//! Machine-readable reports: one entry per check, an overall verdict, and a
//! stable JSON rendering. Elapsed times are informational only and are not
//! part of the reproducibility contract.

use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub checks: Vec<CheckEntry>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, parameters: Map<String, Value>) -> Self {
        Report { command: command.to_string(), parameters, checks: Vec::new(), pass: true }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.pass &= entry.pass;
        self.checks.push(entry);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            let mut out = String::new();
            let params: Vec<String> =
                self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("{} {}\n", self.command, params.join(" ")));
            for c in &self.checks {
                let mark = if c.pass { " ok " } else { "FAIL" };
                out.push_str(&format!(
                    "[{mark}] {}: expected {}, actual {}",
                    c.name, c.expected, c.actual
                ));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("  ({w})"));
                }
                out.push_str(&format!("  [{} ms]\n", c.elapsed_ms));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if self.pass { "pass" } else { "FAIL" }
            ));
            out
        }
    }
}

/// Runs a closure and wraps its outcome in a timed check entry. The closure
/// returns (expected, actual, pass, witness).
pub fn timed_check<F>(name: &str, body: F) -> CheckEntry
where
    F: FnOnce() -> (String, String, bool, Option<String>),
{
    let start = Instant::now();
    let (expected, actual, pass, witness) = body();
    CheckEntry {
        name: name.to_string(),
        expected,
        actual,
        pass,
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
