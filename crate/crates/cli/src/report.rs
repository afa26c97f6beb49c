//! The single document every command produces, and its two renderings.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results,
            verified: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is always serializable");
        s.push('\n');
        s
    }

    /// Plain text with exactly the values of the JSON form.
    pub fn to_text(&self) -> String {
        let doc = serde_json::to_value(self).expect("report is always serializable");
        let mut out = String::new();
        if let Value::Object(map) = &doc {
            for (key, value) in map_in_report_order(map) {
                write_entry(&mut out, 0, key, value);
            }
        }
        out
    }
}

fn map_in_report_order(map: &serde_json::Map<String, Value>) -> Vec<(&str, &Value)> {
    ["command", "inputs", "results", "verified"]
        .iter()
        .filter_map(|k| map.get(*k).map(|v| (*k, v)))
        .collect()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// `a=1 b=2 c.d=3` for one record on a single line.
fn inline(prefix: &str, v: &Value, parts: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                inline(&key, child, parts);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            parts.push(format!("{prefix}={}", joined.join(",")));
        }
        other => parts.push(format!("{prefix}={}", scalar(other))),
    }
}

fn write_entry(out: &mut String, indent: usize, key: &str, value: &Value) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                write_entry(out, indent + 2, k, v);
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{pad}{key}: {}\n", joined.join(" ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                let mut parts = Vec::new();
                inline("", item, &mut parts);
                out.push_str(&format!("{pad}  - {}\n", parts.join(" ")));
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
    }
}
