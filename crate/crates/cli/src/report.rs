use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub p: Option<u32>,
}

/// Rows for sweep-style outputs; rendered by the CSV and text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub params: Params,
    pub input: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub passed: bool,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str, params: Params) -> Self {
        Self {
            command: command.to_string(),
            version: VERSION.to_string(),
            params,
            input: Map::new(),
            outputs: Map::new(),
            passed: true,
            failures: Vec::new(),
            timing_ms: None,
            table: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.input.insert(key.to_string(), to_value(value));
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(key.to_string(), to_value(value));
    }

    /// Merges the fields of a serializable struct into the outputs.
    pub fn outputs_from(&mut self, value: impl Serialize) {
        if let Value::Object(map) = to_value(value) {
            self.outputs.extend(map);
        }
    }

    /// Records a checked assertion; a false one fails the report.
    pub fn check(&mut self, name: &str, ok: bool) {
        if !ok {
            self.passed = false;
            self.failures.push(name.to_string());
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some(t) => {
                w.write_record(&t.columns).unwrap();
                for row in &t.rows {
                    w.write_record(row).unwrap();
                }
            }
            None => {
                w.write_record(["key", "value"]).unwrap();
                for (k, v) in self.flat() {
                    w.write_record([k, v]).unwrap();
                }
            }
        }
        String::from_utf8(w.into_inner().unwrap()).expect("csv is utf-8")
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.flat() {
            let _ = writeln!(out, "{k}: {v}");
        }
        if let Some(t) = &self.table {
            let _ = writeln!(out, "{}", t.columns.join("\t"));
            for row in &t.rows {
                let _ = writeln!(out, "{}", row.join("\t"));
            }
        }
        out
    }

    /// Dotted keys with scalar values; arrays stay inline JSON.
    fn flat(&self) -> Vec<(String, String)> {
        fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
            match v {
                Value::Object(m) => {
                    for (k, x) in m {
                        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                        walk(&key, x, out);
                    }
                }
                Value::String(s) => out.push((prefix.to_string(), s.clone())),
                other => out.push((prefix.to_string(), other.to_string())),
            }
        }
        let mut out = Vec::new();
        walk("", &to_value(self), &mut out);
        out
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("values serialize")
}
