use std::io::Write;
use std::path::Path;

use monogamy_core::BoundReport;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    OptFloat(Option<f64>),
    Bool(bool),
    Text(&'static str),
}

impl Cell {
    fn to_csv(self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format_float(x),
            Cell::OptFloat(x) => x.map(format_float).unwrap_or_default(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.to_string(),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Cell::Int(i) => Value::from(i),
            Cell::Float(x) => Value::from(x),
            Cell::OptFloat(x) => x.map_or(Value::Null, Value::from),
            Cell::Bool(b) => Value::from(b),
            Cell::Text(s) => Value::from(s),
        }
    }
}

/// Shortest decimal that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub const REPORT_COLUMNS: [&str; 9] =
    ["sample_index", "exponent", "lhs", "rhs_thm", "rhs_cor", "rhs_plain", "rhs_delta1", "condition_holds", "slack"];

pub fn report_row(r: &BoundReport) -> Vec<Cell> {
    vec![
        Cell::Int(r.sample_index as u64),
        Cell::Float(r.exponent),
        Cell::Float(r.lhs),
        Cell::Float(r.rhs_thm),
        Cell::OptFloat(r.rhs_cor),
        Cell::OptFloat(r.rhs_plain()),
        Cell::OptFloat(r.rhs_delta1()),
        Cell::Bool(r.condition.holds),
        Cell::Float(r.slack),
    ]
}

pub fn report_table(reports: &[BoundReport]) -> Table {
    Table { columns: REPORT_COLUMNS.to_vec(), rows: reports.iter().map(report_row).collect() }
}

pub fn render(table: &Table, format: Format, config: &Value) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(&table.columns).map_err(|e| CliError::Output(e.to_string()))?;
            for row in &table.rows {
                w.write_record(row.iter().map(|c| c.to_csv())).map_err(|e| CliError::Output(e.to_string()))?;
            }
            w.into_inner().map_err(|e| CliError::Output(e.to_string()))
        }
        Format::Json => {
            let results: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        table.columns.iter().zip(row).map(|(k, c)| (k.to_string(), c.to_json())).collect();
                    Value::Object(obj)
                })
                .collect();
            let doc = serde_json::json!({ "config": config, "results": results });
            let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| CliError::Output(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// or to stdout when no path is given.
pub fn write_atomic(bytes: &[u8], path: Option<&Path>) -> Result<(), CliError> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        return out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| CliError::Output(e.to_string()));
    };
    let fail = |e: std::io::Error| CliError::Output(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(bytes).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

/// Writes bound reports with the standard columns.
pub fn emit_report(
    reports: &[BoundReport],
    format: Format,
    path: Option<&Path>,
    config: &Value,
) -> Result<(), CliError> {
    write_atomic(&render(&report_table(reports), format, config)?, path)
}
