use std::fmt::Write as _;

use lines27::verify::{Certificate, Certificates};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Output of one command: its name, echoed parameters, payload and certificates.
pub struct Envelope {
    pub command: &'static str,
    pub parameters: Value,
    pub result: Value,
    pub certificates: Certificates,
    /// Human-readable summary lines for `--format text`.
    pub text: Vec<String>,
}

impl Envelope {
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "certificates": self.certificates.iter().map(certificate_json).collect::<Vec<_>>(),
        })
    }

    /// Pretty JSON. `serde_json::Map` is ordered by key, so output is canonical.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self, quiet: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for line in &self.text {
            let _ = writeln!(out, "  {line}");
        }
        if !quiet {
            let _ = writeln!(out, "certificates:");
            for c in self.certificates.iter() {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "  [{mark}] {}: {}", c.name, c.detail);
            }
        }
        out
    }
}

fn certificate_json(c: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("passed".into(), json!(c.passed));
    m.insert("detail".into(), json!(c.detail));
    Value::Object(m)
}
