//! Rendering one JSON value as JSON, text or CSV, so every number shown in
//! text mode is the one in the JSON document.

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub const SCHEMA: &str = tancone::explorer::SCHEMA;

/// Adds the schema tag as the first key.
pub fn tag(v: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    if let Value::Object(o) = v {
        for (k, x) in o {
            if k != "schema" {
                m.insert(k, x);
            }
        }
    } else {
        m.insert("value".into(), v);
    }
    Value::Object(m)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            a.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn is_table(a: &[Value]) -> bool {
    !a.is_empty() && a.iter().all(Value::is_object)
}

fn columns(a: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for row in a {
        for k in row.as_object().unwrap().keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => "-".into(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

fn text_into(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text_into(out, &key, x);
            }
        }
        Value::Array(a) if is_table(a) => {
            out.push_str(&format!("{prefix}:\n"));
            let cols = columns(a);
            let rows: Vec<Vec<String>> = a
                .iter()
                .map(|r| cols.iter().map(|c| cell(r.get(c))).collect())
                .collect();
            let widths: Vec<usize> = (0..cols.len())
                .map(|i| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([cols[i].len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                format!("  {}\n", parts.join("  ").trim_end())
            };
            out.push_str(&line(&cols));
            for r in &rows {
                out.push_str(&line(r));
            }
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    text_into(&mut out, "", v);
    out
}

/// Generic CSV: a table-valued field becomes the CSV body; otherwise one
/// `key,value` line per scalar.
pub fn csv(v: &Value, table: Option<&str>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(Value::Array(a)) = table.and_then(|t| v.get(t)) {
        if is_table(a) {
            let cols = columns(a);
            w.write_record(&cols).unwrap();
            for r in a {
                let rec: Vec<String> = cols
                    .iter()
                    .map(|c| match r.get(c) {
                        Some(x @ Value::Array(_)) => scalar(x).replace(", ", " "),
                        other => cell(other),
                    })
                    .collect();
                w.write_record(&rec).unwrap();
            }
            return String::from_utf8(w.into_inner().unwrap()).unwrap();
        }
    }
    w.write_record(["key", "value"]).unwrap();
    let mut flat = String::new();
    text_into(&mut flat, "", v);
    for l in flat.lines().filter(|l| !l.starts_with(' ')) {
        if let Some((k, x)) = l.split_once(": ") {
            w.write_record([k, x]).unwrap();
        }
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
