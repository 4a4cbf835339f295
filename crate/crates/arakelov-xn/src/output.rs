//! Tables of decimal strings and their CSV and JSON encodings.

use crate::config::Format;
use crate::CliError;
use serde::Serialize;
use std::io::Write;

/// Version of the table layouts; bumped whenever a header row changes.
pub const SCHEMA_VERSION: u32 = 1;

/// A named table. Every cell is a string, so both encodings carry identical numerals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    schema: String,
    schema_version: u32,
    table: &'a str,
    columns: &'a [&'static str],
    rows: &'a [Vec<String>],
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table { name, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in table {}", self.name);
        self.rows.push(row);
    }

    /// The cell in `column` of the first row whose cells match `key` on the given columns.
    pub fn lookup(&self, key: &[(&str, &str)], column: &str) -> Option<&str> {
        let idx = |c: &str| self.columns.iter().position(|x| *x == c);
        let target = idx(column)?;
        let key: Option<Vec<(usize, &str)>> = key.iter().map(|(c, v)| idx(c).map(|i| (i, *v))).collect();
        let key = key?;
        self.rows.iter().find(|r| key.iter().all(|(i, v)| r[*i] == *v)).map(|r| r[target].as_str())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        let csv_err = |e: csv::Error| CliError::Io(std::io::Error::other(e));
        w.write_record(&self.columns).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(row).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        let doc = JsonDocument {
            schema: format!("arakelov-xn/{}", self.name),
            schema_version: SCHEMA_VERSION,
            table: self.name,
            columns: &self.columns,
            rows: &self.rows,
        };
        serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| CliError::Io(e.into()))?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<(), CliError> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        String::from_utf8(buf).map_err(|e| CliError::Io(std::io::Error::other(e)))
    }
}
