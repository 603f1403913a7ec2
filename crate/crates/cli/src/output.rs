//! Rendering of command results as JSON, CSV or aligned text.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

/// A command result: a JSON document plus an optional table view of it.
pub struct Report {
    pub json: Value,
    pub table: Option<Table>,
    /// Lines shown before the table in pretty output.
    pub summary: Vec<String>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&self.header);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

/// Text of a JSON scalar for table cells; `null` becomes empty.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(cell).collect();
            format!("({})", inner.join(","))
        }
        other => other.to_string(),
    }
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some(t) => {
                        w.write_record(&t.header).map_err(|e| e.to_string())?;
                        for row in &t.rows {
                            w.write_record(row).map_err(|e| e.to_string())?;
                        }
                    }
                    None => {
                        // flat object: one header row, one value row
                        let obj = self.json.as_object().ok_or("no tabular form")?;
                        w.write_record(obj.keys()).map_err(|e| e.to_string())?;
                        w.write_record(obj.values().map(cell)).map_err(|e| e.to_string())?;
                    }
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
            Format::Pretty => {
                let mut s = String::new();
                for line in &self.summary {
                    s.push_str(line);
                    s.push('\n');
                }
                if let Some(t) = &self.table {
                    if !self.summary.is_empty() {
                        s.push('\n');
                    }
                    s.push_str(&t.aligned());
                }
                Ok(s)
            }
        }
    }
}
