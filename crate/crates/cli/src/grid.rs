//! Human-readable table layouts.

use std::fmt::Write as _;

use mnm_core::nmatrix::{DerivedTable, Nmatrix};
use mnm_core::syntax::Connective;
use mnm_core::values::{TruthValue, ValueSet};
use serde_json::{json, Value};

fn pad(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(i, s)| format!("{s:<w$}", w = widths[i])).collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
    out
}

/// A unary table as a column, a binary one as a square with `x` down the
/// side and `y` across the top.
pub fn table_grid(nm: &Nmatrix, c: Connective) -> String {
    let t = nm.table(c);
    let dom: Vec<TruthValue> = nm.domain().iter().collect();
    let mut rows = Vec::new();
    if c.arity() == 1 {
        rows.push(vec![String::new(), c.symbol().to_string()]);
        for &x in &dom {
            rows.push(vec![x.to_string(), t.unary(x).to_string()]);
        }
    } else {
        let mut head = vec![c.symbol().to_string()];
        head.extend(dom.iter().map(|y| y.to_string()));
        rows.push(head);
        for &x in &dom {
            let mut row = vec![x.to_string()];
            row.extend(dom.iter().map(|&y| t.binary(x, y).to_string()));
            rows.push(row);
        }
    }
    pad(&rows)
}

pub fn table_json(nm: &Nmatrix, c: Connective) -> Value {
    let t = nm.table(c);
    let rows: Vec<Value> = t
        .tuples(nm.domain())
        .into_iter()
        .map(|args| json!({ "args": args, "cell": t.get(&args) }))
        .collect();
    Value::Array(rows)
}

pub fn derived_grid(t: &DerivedTable, domain: ValueSet) -> String {
    let dom: Vec<TruthValue> = domain.iter().collect();
    let mut rows = Vec::new();
    if t.variables.len() == 2 {
        let mut head = vec![format!("{} \\ {}", t.variables[0], t.variables[1])];
        head.extend(dom.iter().map(|y| y.to_string()));
        rows.push(head);
        for &x in &dom {
            let mut row = vec![x.to_string()];
            row.extend(dom.iter().map(|&y| t.get(&[x, y]).map(|s| s.to_string()).unwrap_or_default()));
            rows.push(row);
        }
    } else {
        let mut head = t.variables.clone();
        head.push("value".into());
        rows.push(head);
        for (args, cell) in &t.rows {
            let mut row: Vec<String> = args.iter().map(|v| v.to_string()).collect();
            row.push(cell.to_string());
            rows.push(row);
        }
    }
    pad(&rows)
}
