//! Text, CSV and JSON output. Numbers are always decimal strings in JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use refperm::audit::{self, AuditReport};
use refperm::equivalence::{OrbitClass, SuperWilfReport};
use refperm::genfun::RationalGF;
use refperm::{PatternSet, Permutation};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// A table entry; `Missing` marks cells outside a formula's domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Value(String),
    Missing,
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Value(v) => Value::String(v.clone()),
            Cell::Missing => Value::Null,
        }
    }

    fn csv(&self) -> &str {
        match self {
            Cell::Value(v) => v,
            Cell::Missing => "",
        }
    }

    fn plain(&self) -> &str {
        match self {
            Cell::Value(v) => v,
            Cell::Missing => "-",
        }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn table(format: Format, patterns: &PatternSet, method: &str, rows: &[Vec<Cell>]) -> String {
    match format {
        Format::Json => json_line(&json!({
            "patterns": patterns.to_string(),
            "method": method,
            "n_max": rows.len().saturating_sub(1),
            "rows": rows
                .iter()
                .map(|r| r.iter().map(Cell::json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let width = rows.len();
            let mut out = String::from("n");
            for k in 0..width {
                let _ = write!(out, ",k{k}");
            }
            out.push('\n');
            for (n, r) in rows.iter().enumerate() {
                let _ = write!(out, "{n}");
                for k in 0..width {
                    out.push(',');
                    out.push_str(r.get(k).map_or("", Cell::csv));
                }
                out.push('\n');
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for (n, r) in rows.iter().enumerate() {
                let cells: Vec<&str> = r.iter().map(Cell::plain).collect();
                let _ = writeln!(out, "{n}: {}", cells.join(" "));
            }
            out
        }
    }
}

pub fn sequence(
    format: Format,
    patterns: &PatternSet,
    k: usize,
    method: &str,
    values: &[Cell],
) -> String {
    match format {
        Format::Json => json_line(&json!({
            "patterns": patterns.to_string(),
            "k": k,
            "method": method,
            "n_max": values.len().saturating_sub(1),
            "values": values.iter().map(Cell::json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", v.csv());
            }
            out
        }
        Format::Plain => {
            let cells: Vec<&str> = values.iter().map(Cell::plain).collect();
            format!("{}\n", cells.join(","))
        }
    }
}

pub fn reports(format: Format, reports: &[AuditReport]) -> String {
    match format {
        Format::Json => {
            let mut s = audit::reports_json(reports);
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out =
                String::from("item,kind,status,n_max,cells_checked,cells_skipped,n,k,formula_value,oracle_value\n");
            for r in reports {
                let kind = serde_json::to_value(r.kind).expect("kind");
                let _ = write!(
                    out,
                    "{},{},{},{},{},{}",
                    r.formula,
                    kind.as_str().unwrap_or_default(),
                    r.status,
                    r.n_max,
                    r.cells_checked,
                    r.cells_skipped
                );
                match &r.counterexample {
                    Some(c) => {
                        let _ = writeln!(
                            out,
                            ",{},{},{},{}",
                            c.n, c.k, c.formula_value, c.oracle_value
                        );
                    }
                    None => out.push_str(",,,,\n"),
                }
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for r in reports {
                let _ = write!(
                    out,
                    "{:<10} {} ({} cells)",
                    r.status.to_string().to_uppercase(),
                    r.formula,
                    r.cells_checked
                );
                if let Some(c) = &r.counterexample {
                    let _ = write!(
                        out,
                        ": n={} k={} expected {} got {}",
                        c.n, c.k, c.formula_value, c.oracle_value
                    );
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn classes(format: Format, mode: &str, classes: &[OrbitClass]) -> String {
    match format {
        Format::Json => json_line(&json!({
            "mode": mode,
            "count": classes.len(),
            "classes": classes.iter().map(|c| strings(&c.members)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("class,patterns\n");
            for (i, c) in classes.iter().enumerate() {
                for m in &c.members {
                    let _ = writeln!(out, "{},\"{m}\"", i + 1);
                }
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for (i, c) in classes.iter().enumerate() {
                let members: Vec<String> = c.members.iter().map(|m| format!("{{{m}}}")).collect();
                let _ = writeln!(out, "({}) {}", i + 1, members.join(" "));
            }
            out
        }
    }
}

pub fn super_wilf(format: Format, report: &SuperWilfReport) -> String {
    match format {
        Format::Json => json_line(&json!({
            "mode": "superwilf",
            "empirical": report.empirical,
            "n_max": report.n_max,
            "count": report.classes.len(),
            "classes": report.classes.iter().map(|c| strings(&c.members)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("class,patterns\n");
            for (i, c) in report.classes.iter().enumerate() {
                for m in &c.members {
                    let _ = writeln!(out, "{},\"{m}\"", i + 1);
                }
            }
            out
        }
        Format::Plain => {
            let mut out = format!("empirical, n <= {}\n", report.n_max);
            for (i, c) in report.classes.iter().enumerate() {
                let members: Vec<String> = c.members.iter().map(|m| format!("{{{m}}}")).collect();
                let _ = writeln!(out, "({}) {}", i + 1, members.join(" "));
            }
            out
        }
    }
}

pub fn gf(format: Format, k: usize, gf: &RationalGF, series: &[BigInt]) -> String {
    match format {
        Format::Json => json_line(&json!({
            "k": k,
            "expression": gf.to_string(),
            "numerator": strings(gf.numerator().coeffs()),
            "denominator": strings(gf.denominator().coeffs()),
            "series": strings(series),
        })),
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in series.iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
            out
        }
        Format::Plain => format!("G_{k}(x) = {gf}\n{}\n", strings(series).join(",")),
    }
}

pub fn avoiders(format: Format, list: &[Permutation]) -> String {
    match format {
        Format::Json => json_line(&json!(list
            .iter()
            .map(|p| json!({"permutation": p.to_string(), "fixed_points": p.fixed_points()}))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let mut out = String::from("permutation,fixed_points\n");
            for p in list {
                let _ = writeln!(out, "\"{p}\",{}", p.fixed_points());
            }
            out
        }
        Format::Plain => list.iter().map(|p| format!("{p}\n")).collect(),
    }
}
