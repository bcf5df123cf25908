//! Structured results for the bench and verify subcommands.
//!
//! Reports render two ways: an aligned human table, or line-delimited JSON
//! records for machines. Record bodies are deterministic for fixed inputs;
//! wall-clock time is quarantined in the `elapsed_seconds` field so
//! consumers can strip it before diffing.

use std::io::{self, Write};

use serde::Serialize;

/// Which reference table (or ad-hoc check set) a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    Table1,
    Table2,
    Custom,
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::Custom => "custom",
        })
    }
}

/// One checked point: what went in, what was expected (when known), what
/// came out, and how long it took.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub input: u64,
    pub expected: Option<u64>,
    pub got: u64,
    pub method: String,
    pub elapsed_seconds: f64,
}

/// A batch of checked points plus the rolled-up match flag.
#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub table_id: TableId,
    pub rows: Vec<BenchRow>,
    pub all_match: bool,
}

/// Output shape for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    /// Aligned table for terminals.
    Human,
    /// One JSON record per row.
    Records,
}

impl BenchReport {
    /// Sorts rows by input (required for deterministic output) and derives
    /// `all_match`: true iff every row with an expected value hit it.
    pub fn new(table_id: TableId, mut rows: Vec<BenchRow>) -> Self {
        rows.sort_by_key(|r| r.input);
        let all_match = rows.iter().all(|r| r.expected.is_none_or(|e| e == r.got));
        BenchReport {
            table_id,
            rows,
            all_match,
        }
    }

    pub fn render(&self, format: ReportFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            ReportFormat::Human => self.write_human(out),
            ReportFormat::Records => self.write_records(out),
        }
    }

    fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "table: {}", self.table_id)?;
        writeln!(
            out,
            "{:>16}  {:>16}  {:>16}  {:<34}  {:>12}  ok",
            "input", "expected", "got", "method", "seconds"
        )?;
        for r in &self.rows {
            let expected = r
                .expected
                .map_or_else(|| "-".to_string(), |e| e.to_string());
            let ok = r
                .expected
                .map_or("-", |e| if e == r.got { "yes" } else { "NO" });
            writeln!(
                out,
                "{:>16}  {:>16}  {:>16}  {:<34}  {:>12.6}  {}",
                r.input, expected, r.got, r.method, r.elapsed_seconds, ok
            )?;
        }
        writeln!(out, "all values match: {}", self.all_match)
    }

    fn write_records(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in &self.rows {
            let line = serde_json::to_string(r).expect("rows serialize to JSON");
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}
