//! Plain-text rendering of report JSON.
//!
//! Scalars become `key: value` lines, nested objects are indented, and arrays
//! of objects become aligned tables whose columns are the union of the row
//! keys. Rows that themselves hold objects or tables are printed as indented
//! items instead; arrays of scalars are printed as compact JSON.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::Value;

pub fn render_text(body: &Value) -> String {
    let mut out = String::new();
    match body {
        Value::Object(_) => object(&mut out, body, 0),
        other => {
            let _ = writeln!(out, "{}", cell(other));
        }
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_nested(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(|x| x.is_object() || x.is_array()),
        _ => false,
    }
}

fn is_flat(row: &Value) -> bool {
    row.as_object().is_some_and(|m| !m.values().any(is_nested))
}

fn object(out: &mut String, v: &Value, depth: usize) {
    let Value::Object(map) = v else { return };
    let pad = "  ".repeat(depth);
    for (k, val) in map {
        match val {
            Value::Object(_) => {
                let _ = writeln!(out, "{pad}{k}:");
                object(out, val, depth + 1);
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                let _ = writeln!(out, "{pad}{k}:");
                if items.iter().all(is_flat) {
                    table(out, items, depth + 1);
                } else {
                    for item in items {
                        let _ = writeln!(out, "{pad}  -");
                        object(out, item, depth + 2);
                    }
                }
            }
            other => {
                let _ = writeln!(out, "{pad}{k}: {}", cell(other));
            }
        }
    }
}

fn table(out: &mut String, rows: &[Value], depth: usize) {
    let pad = "  ".repeat(depth);
    let columns: Vec<&String> = rows
        .iter()
        .filter_map(Value::as_object)
        .flat_map(|m| m.keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let grid: Vec<Vec<String>> =
        rows.iter().map(|r| columns.iter().map(|c| r.get(c.as_str()).map_or(String::new(), cell)).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| grid.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        format!("{pad}{}", parts.join("  ").trim_end())
    };
    let _ = writeln!(out, "{}", line(columns.iter().map(|c| c.as_str()).collect()));
    for r in &grid {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}
