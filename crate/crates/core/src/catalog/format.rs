//! JSON catalog files.
//!
//! ```json
//! {
//!   "name": "heisenberg:3",
//!   "dim": 3,
//!   "basis": ["x1", "y1", "z"],
//!   "brackets": [[1, 2, [[3, "1"]]]],
//!   "expected": {"der_dim": 6, "center_dim": 1}
//! }
//! ```
//!
//! Indices are 1-based, only pairs `i < j` are listed, and coefficients are strings
//! `"p"` or `"p/q"` in lowest terms. `expected` is optional; every field present in it
//! is checked when the file is loaded.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::{CatalogEntry, ExpectedInvariants};
use crate::error::{Error, Result};
use crate::exactlin::{format_rat, parse_rat, Rat};
use crate::liecore::LieAlgebra;

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn as_index(v: &Value, loc: &str, dim: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| parse_err(loc, "expected a positive integer index"))?;
    if i == 0 || i as usize > dim {
        return Err(parse_err(loc, format!("index {i} outside 1..={dim}")));
    }
    Ok(i as usize - 1)
}

fn as_rat(v: &Value, loc: &str) -> Result<Rat> {
    let s = v.as_str().ok_or_else(|| {
        parse_err(
            loc,
            "expected a rational written as a string \"p\" or \"p/q\"",
        )
    })?;
    parse_rat(s).map_err(|e| parse_err(loc, e.to_string()))
}

/// Parses a catalog document and validates it (Jacobi, then expected invariants).
pub fn from_json_str(text: &str) -> Result<CatalogEntry> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        parse_err(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let obj = doc
        .as_object()
        .ok_or_else(|| parse_err("top level", "expected a JSON object"))?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("name", "missing or not a string"))?
        .to_string();
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("dim", "missing or not a non-negative integer"))?
        as usize;
    let basis = match obj.get("basis") {
        None => (1..=dim).map(|i| format!("e{i}")).collect(),
        Some(b) => {
            let arr = b
                .as_array()
                .ok_or_else(|| parse_err("basis", "expected an array of labels"))?;
            arr.iter()
                .enumerate()
                .map(|(i, l)| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| parse_err(format!("basis[{i}]"), "expected a string"))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    if basis.len() != dim {
        return Err(parse_err(
            "basis",
            format!("{} labels given for dim {dim}", basis.len()),
        ));
    }
    let rows = obj
        .get("brackets")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("brackets", "missing or not an array"))?;
    let mut brackets = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let loc = format!("brackets[{r}]");
        let parts = row
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| parse_err(&loc, "expected [i, j, [[k, \"c\"], ...]]"))?;
        let i = as_index(&parts[0], &format!("{loc}[0]"), dim)?;
        let j = as_index(&parts[1], &format!("{loc}[1]"), dim)?;
        if i >= j {
            return Err(parse_err(&loc, "pairs must satisfy i < j"));
        }
        let terms = parts[2]
            .as_array()
            .ok_or_else(|| parse_err(format!("{loc}[2]"), "expected an array of [k, \"c\"]"))?;
        let mut parsed = Vec::with_capacity(terms.len());
        for (t, term) in terms.iter().enumerate() {
            let tloc = format!("{loc}[2][{t}]");
            let kc = term
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| parse_err(&tloc, "expected [k, \"c\"]"))?;
            let k = as_index(&kc[0], &format!("{tloc}[0]"), dim)?;
            let c = as_rat(&kc[1], &format!("{tloc}[1]"))?;
            parsed.push((k, c));
        }
        brackets.push((i, j, parsed));
    }
    let algebra = LieAlgebra::from_brackets(basis, brackets)?;
    let expected = match obj.get("expected") {
        None => ExpectedInvariants::default(),
        Some(v) => {
            serde_json::from_value(v.clone()).map_err(|e| parse_err("expected", e.to_string()))?
        }
    };
    let entry = CatalogEntry {
        name,
        algebra,
        expected,
    };
    entry.validate()?;
    Ok(entry)
}

pub fn to_json_value(entry: &CatalogEntry) -> Value {
    let l = &entry.algebra;
    let brackets: Vec<Value> = l
        .nonzero_brackets()
        .map(|(i, j, t)| {
            let terms: Vec<Value> = t
                .iter()
                .map(|(k, c)| json!([k + 1, format_rat(c)]))
                .collect();
            json!([i + 1, j + 1, terms])
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("name".into(), json!(entry.name));
    obj.insert("dim".into(), json!(l.dim()));
    obj.insert("basis".into(), json!(l.labels()));
    obj.insert("brackets".into(), Value::Array(brackets));
    if entry.expected != ExpectedInvariants::default() {
        obj.insert(
            "expected".into(),
            serde_json::to_value(&entry.expected).expect("plain data"),
        );
    }
    Value::Object(obj)
}

pub fn to_json_string(entry: &CatalogEntry) -> String {
    let mut s = serde_json::to_string_pretty(&to_json_value(entry)).expect("plain data");
    s.push('\n');
    s
}

pub fn load(path: &Path) -> Result<CatalogEntry> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    from_json_str(&text)
}

pub fn store(entry: &CatalogEntry, path: &Path) -> Result<()> {
    std::fs::write(path, to_json_string(entry)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
