//! Uniform output for every subcommand.
//!
//! JSON output is always `{"command", "ok", "result"}` with the command's
//! fields under `result` in a fixed order. Text output prints one
//! `key: value` line per field; CSV prints `key,value` rows. A command
//! with a natural table (scans, generator rows) prints that instead.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Report {
    pub command: &'static str,
    pub ok: bool,
    fields: Map<String, Value>,
    summary: Option<String>,
    table: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            ok: true,
            fields: Map::new(),
            summary: None,
            table: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    /// One-line digest printed first in text mode.
    pub fn summary(&mut self, s: String) {
        self.summary = Some(s);
    }

    /// Replaces the field listing in text and CSV output.
    pub fn table(&mut self, csv: String) {
        self.table = Some(csv);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({ "command": self.command, "ok": self.ok, "result": self.fields });
                let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.clone().unwrap_or_else(|| {
                let mut s = String::from("key,value\n");
                for (k, v) in &self.fields {
                    s.push_str(&format!("{k},{}\n", csv_cell(&text_value(v))));
                }
                s
            }),
            Format::Text => {
                let mut s = String::new();
                if let Some(sum) = &self.summary {
                    s.push_str(sum);
                    s.push('\n');
                }
                if let Some(t) = &self.table {
                    s.push_str(t);
                    return s;
                }
                for (k, v) in &self.fields {
                    s.push_str(&format!("{k}: {}\n", text_value(v)));
                }
                s
            }
        }
    }

    pub fn emit(&self, format: Format) -> std::io::Result<()> {
        std::io::stdout().lock().write_all(self.render(format).as_bytes())
    }
}

/// `weight -> count` map from ascending pairs.
pub fn enumerator<K: ToString, V: Into<Value>>(pairs: impl IntoIterator<Item = (K, V)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v.into())).collect())
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Null => "n/a".into(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.into(),
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(" "),
        Value::Object(m) if m.values().all(|x| x.is_string()) => m
            .iter()
            .map(|(k, x)| format!("{k}:{}", text_value(x)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| format!("{k}={}", text_value(x)))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
