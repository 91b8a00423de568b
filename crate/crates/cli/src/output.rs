//! Table and matrix rendering: CSV and JSON with lossless floats.
//!
//! Floats are emitted with 17 significant digits, which round-trips every
//! finite `f64` bit-exactly through `str::parse`. JSON mirrors the CSV
//! fields; non-finite values (the Chernoff exponent of a perfectly
//! distinguishable pair is `+inf`) become JSON strings since JSON has no
//! infinity literal.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

use num_complex::Complex64;
use uqd_core::linalg::CMat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Value {
    Int(i64),
    UInt(u64),
    Float(f64),
    Str(String),
    Bool(bool),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}
impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::UInt(v)
    }
}
impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::UInt(u64::from(v))
    }
}
impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::UInt(v as u64)
    }
}
impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}
impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}
impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_owned())
    }
}
impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

/// 17-significant-digit decimal form; round-trips bit-exactly.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::UInt(u) => u.to_string(),
        Value::Float(f) => fmt_f64(*f),
        Value::Str(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
    }
}

fn json_cell(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::UInt(u) => u.to_string(),
        Value::Float(f) if f.is_finite() => fmt_f64(*f),
        Value::Float(f) => format!("\"{}\"", fmt_f64(*f)),
        Value::Str(s) => format!("\"{s}\""),
        Value::Bool(b) => b.to_string(),
    }
}

/// A rectangular result table with named columns.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str("  {");
            for (j, (name, value)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "\"{name}\": {}", json_cell(value));
            }
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }
}

/// Renders a complex matrix: CSV rows carry `re,im` cell pairs row-major,
/// JSON is an array of rows of `[re, im]` pairs.
pub fn render_matrix(mat: &CMat, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for i in 0..mat.dim() {
                let mut cells = Vec::with_capacity(2 * mat.dim());
                for j in 0..mat.dim() {
                    let z: Complex64 = mat.get(i, j);
                    cells.push(fmt_f64(z.re));
                    cells.push(fmt_f64(z.im));
                }
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = String::from("[\n");
            for i in 0..mat.dim() {
                out.push_str("  [");
                for j in 0..mat.dim() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    let z = mat.get(i, j);
                    let _ = write!(out, "[{}, {}]", fmt_f64(z.re), fmt_f64(z.im));
                }
                out.push(']');
                if i + 1 < mat.dim() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("]\n");
            out
        }
    }
}

/// Writes to `path` when given, otherwise to stdout. All file IO goes
/// through this single writer.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_bit_exactly() {
        for &x in &[
            0.875,
            0.15625,
            1.0 / 3.0,
            -(2.0f64.ln()),
            4.9e-324,
            1.7976931348623157e308,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
        assert_eq!("inf".parse::<f64>().unwrap(), f64::INFINITY);
    }

    #[test]
    fn csv_and_json_shapes() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push(vec![Value::from(1u64), Value::from(0.5)]);
        let csv = t.render(Format::Csv);
        assert!(csv.starts_with("a,b\n1,"));
        let json = t.render(Format::Json);
        assert!(json.contains("\"a\": 1"));
        assert!(json.contains("\"b\": 5.0000000000000000e-1"));
    }

    #[test]
    fn non_finite_floats_become_json_strings() {
        let mut t = Table::new(vec!["xi"]);
        t.push(vec![Value::from(f64::INFINITY)]);
        assert!(t.render(Format::Json).contains("\"xi\": \"inf\""));
        assert!(t.render(Format::Csv).contains("inf"));
    }
}
