use std::fmt::Write as _;

use lie_ext::exactlin::{format_rat, Mat, Rat, Subspace};
use lie_ext::liecore::LieAlgebra;
use serde::Serialize;
use serde_json::{json, Map, Value};

/// Where the analysed algebra came from.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputId {
    Catalog(String),
    File { path: String, sha256: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputId>,
    pub values: Map<String, Value>,
    pub certificates: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            inputs: Vec::new(),
            values: Map::new(),
            certificates: Map::new(),
            timing_ms: None,
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(
            key.to_string(),
            serde_json::to_value(v).expect("plain data"),
        );
    }

    pub fn certify(&mut self, key: &str, ok: bool) {
        self.certificates.insert(key.to_string(), Value::Bool(ok));
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.values().all(|v| v == &Value::Bool(true))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for input in &self.inputs {
            match input {
                InputId::Catalog(name) => writeln!(out, "input: catalog {name}").unwrap(),
                InputId::File { path, sha256 } => {
                    writeln!(out, "input: file {path} (sha256 {sha256})").unwrap()
                }
            }
        }
        for (k, v) in &self.values {
            write_text(&mut out, k, v, 0);
        }
        if !self.certificates.is_empty() {
            writeln!(out, "certificates:").unwrap();
            for (k, v) in &self.certificates {
                let mark = if v == &Value::Bool(true) {
                    "ok  "
                } else {
                    "FAIL"
                };
                writeln!(out, "  [{mark}] {k}").unwrap();
            }
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "timing: {ms} ms").unwrap();
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn write_text(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        writeln!(out, "{pad}{key}: {s}").unwrap();
        return;
    }
    writeln!(out, "{pad}{key}:").unwrap();
    match v {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                write_text(out, &format!("[{}]", i + 1), item, depth + 1);
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                write_text(out, k, item, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

pub fn rat(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn vector(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.vectors().map(vector).collect::<Vec<_>>(),
    })
}

pub fn matrix(m: &Mat) -> Value {
    Value::Array(m.row_vectors().map(vector).collect())
}

/// Brackets written out with labels, e.g. `[x1, y1] = z`.
pub fn bracket_lines(l: &LieAlgebra) -> Vec<String> {
    let labels = l.labels();
    l.nonzero_brackets()
        .map(|(i, j, terms)| {
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| {
                    let c = format_rat(c);
                    match c.as_str() {
                        "1" => labels[*k].clone(),
                        "-1" => format!("-{}", labels[*k]),
                        _ => format!("{c}*{}", labels[*k]),
                    }
                })
                .collect();
            format!(
                "[{}, {}] = {}",
                labels[i],
                labels[j],
                rhs.join(" + ").replace("+ -", "- ")
            )
        })
        .collect()
}
