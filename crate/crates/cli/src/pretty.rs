//! Plain-text rendering of JSON reports for `--pretty`.
//!
//! Objects become aligned `key  value` blocks, arrays of scalars print on one
//! line and arrays of flat objects with shared keys become column tables.

use serde_json::{Map, Value};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(x) => Some(x.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| scalar(x).is_some() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        _ => None,
    }
}

fn flat_keys(rows: &[Value]) -> Option<Vec<String>> {
    let first = rows.first()?.as_object()?;
    let keys: Vec<String> = first.keys().cloned().collect();
    for r in rows {
        let o = r.as_object()?;
        if o.keys().ne(keys.iter()) || o.values().any(|v| scalar(v).is_none()) {
            return None;
        }
    }
    Some(keys)
}

fn table(out: &mut String, indent: usize, keys: &[String], rows: &[Value]) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            keys.iter()
                .map(|k| scalar(&r[k.as_str()]).unwrap())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(j, k)| cells.iter().map(|c| c[j].len()).fold(k.len(), usize::max))
        .collect();
    let line = |cols: Vec<&str>| {
        let padded: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        format!("{}{}\n", " ".repeat(indent), padded.join("  ").trim_end())
    };
    out.push_str(&line(keys.iter().map(String::as_str).collect()));
    for c in &cells {
        out.push_str(&line(c.iter().map(String::as_str).collect()));
    }
}

fn object(out: &mut String, indent: usize, map: &Map<String, Value>) {
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let pad = " ".repeat(indent);
    for (k, v) in map {
        if let Some(s) = scalar(v) {
            out.push_str(&format!("{pad}{k:<width$}  {s}\n"));
            continue;
        }
        out.push_str(&format!("{pad}{k}:\n"));
        value(out, indent + 2, v);
    }
}

fn value(out: &mut String, indent: usize, v: &Value) {
    match v {
        Value::Object(map) => object(out, indent, map),
        Value::Array(rows) => {
            if let Some(keys) = flat_keys(rows) {
                table(out, indent, &keys, rows);
                return;
            }
            for (k, r) in rows.iter().enumerate() {
                match scalar(r) {
                    Some(s) => out.push_str(&format!("{}{s}\n", " ".repeat(indent))),
                    None => {
                        out.push_str(&format!("{}[{k}]\n", " ".repeat(indent)));
                        value(out, indent + 2, r);
                    }
                }
            }
        }
        other => out.push_str(&format!(
            "{}{}\n",
            " ".repeat(indent),
            scalar(other).unwrap()
        )),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    value(&mut out, 0, v);
    out
}
