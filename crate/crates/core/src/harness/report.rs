use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub target: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub data: Map<String, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub ring: String,
    pub presentation: String,
    pub characteristic: u64,
    pub dimension: usize,
    pub complete_intersection: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn any_fails(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fails)
    }

    pub fn record(&self, check: &str, target: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == check && c.target == target)
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let ci = if self.complete_intersection { ", complete intersection" } else { "" };
        let _ = writeln!(s, "ring {} = {} (dim {}{ci})", self.ring, self.presentation, self.dimension);
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {} on {}", c.verdict.label(), c.check, c.target);
            if let Some(r) = &c.reason {
                let _ = writeln!(s, "    reason: {r}");
            }
            for (k, v) in &c.data {
                write_value(&mut s, k, v, 4);
            }
        }
        s
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::String(text) if text.contains('\n') => {
            let _ = writeln!(out, "{pad}{key}:");
            for line in text.lines() {
                let _ = writeln!(out, "{pad}    {line}");
            }
        }
        Value::String(text) => {
            let _ = writeln!(out, "{pad}{key}: {text}");
        }
        Value::Object(map) if map.values().any(|x| x.is_object()) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                write_value(out, k, x, indent + 4);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {other}");
        }
    }
}
