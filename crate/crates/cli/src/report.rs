//! Reports in text, JSON and CSV form.

use anyhow::{bail, Result};
use serde_json::Value;

use crate::args::Format;

/// Outcome of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    /// False when a verification failed.
    pub verified: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => Ok(to_json(&self.json)),
            Format::Csv => match &self.csv {
                Some(c) => Ok(c.clone()),
                None => bail!("CSV output is only available for Betti and dimension tables"),
            },
        }
    }
}

/// Canonical JSON: keys sorted, two-space indent, trailing newline.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Integers go out as decimal strings.
pub fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn ints<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

/// Rows of text with right-aligned columns.
pub fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> =
        (0..cols).map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0)).collect();
    let line = |r: &[String]| {
        let cells: Vec<String> = r.iter().zip(&width).map(|(s, w)| format!("{s:>w$}")).collect();
        cells.join("  ")
    };
    let mut out = line(header);
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}
