//! Per-trial tables (CSV or JSON), summary text and the constants object.

use std::io::Write;

use serde::Serialize;

use fpp_core::constants::ThresholdConstants;

use crate::harness::{CouplingRow, OutputFormat, RunOutput, SummaryRow, TrialRecord};
use crate::Result;

/// First line of every CSV file.
pub const CSV_VERSION_LINE: &str = "# fpp-regular v1";

/// CSV column header.
pub const CSV_HEADER: &str =
    "mode,d,n,trial,seed,stat_name,stat_value,normalized,theory_const,wall_ms";

/// One long-format row: a single statistic of a single trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row<'a> {
    /// Run mode.
    pub mode: &'a str,
    /// Degree.
    pub d: u32,
    /// Vertex count.
    pub n: usize,
    /// Trial index.
    pub trial: usize,
    /// Derived seed.
    pub seed: u64,
    /// Statistic name.
    pub stat_name: &'a str,
    /// Raw value.
    pub stat_value: f64,
    /// Normalized value.
    pub normalized: f64,
    /// Theoretical limit of `normalized`, if known.
    pub theory_const: Option<f64>,
    /// Wall time of the trial.
    pub wall_ms: f64,
}

/// Flattens records into rows, stats in record order.
pub fn rows(records: &[TrialRecord]) -> impl Iterator<Item = Row<'_>> {
    records.iter().flat_map(|r| {
        r.stats.iter().map(move |s| Row {
            mode: r.mode.as_str(),
            d: r.d,
            n: r.n,
            trial: r.trial,
            seed: r.seed,
            stat_name: &s.name,
            stat_value: s.value,
            normalized: s.normalized,
            theory_const: s.theory,
            wall_ms: r.wall_ms,
        })
    })
}

/// Writes records as versioned CSV.
pub fn write_csv<W: Write>(out: &mut W, records: &[TrialRecord]) -> Result<()> {
    writeln!(out, "{CSV_VERSION_LINE}")?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows(records) {
        let theory = r.theory_const.map(|t| t.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.mode,
            r.d,
            r.n,
            r.trial,
            r.seed,
            r.stat_name,
            r.stat_value,
            r.normalized,
            theory,
            r.wall_ms
        )?;
    }
    Ok(())
}

/// Writes records as a JSON array of row objects. Non-finite values become
/// `null`.
pub fn write_json<W: Write>(out: &mut W, records: &[TrialRecord]) -> Result<()> {
    let rows: Vec<Row<'_>> = rows(records).collect();
    serde_json::to_writer_pretty(&mut *out, &rows)?;
    writeln!(out)?;
    Ok(())
}

/// Writes records in `format`.
pub fn write_records<W: Write>(
    out: &mut W,
    records: &[TrialRecord],
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(out, records),
        OutputFormat::Json => write_json(out, records),
    }
}

/// Writes the constants object.
pub fn write_constants<W: Write>(out: &mut W, c: &ThresholdConstants) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &ConstantsJson::from(c))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ConstantsJson {
    d: u32,
    gamma: f64,
    alpha_star: f64,
    alpha_hat: f64,
    flood_weight_const: f64,
    diam_weight_const: f64,
}

impl From<&ThresholdConstants> for ConstantsJson {
    fn from(c: &ThresholdConstants) -> Self {
        ConstantsJson {
            d: c.d,
            gamma: c.gamma,
            alpha_star: c.alpha_star,
            alpha_hat: c.alpha_hat,
            flood_weight_const: c.flood_weight_const,
            diam_weight_const: c.diam_weight_const,
        }
    }
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.4}"))
}

/// Human-readable summary table.
pub fn write_summary<W: Write>(out: &mut W, rows: &[SummaryRow]) -> Result<()> {
    writeln!(
        out,
        "{:<10} {:>3} {:>8} {:<20} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "mode", "d", "n", "stat", "count", "mean", "std", "stderr", "min", "max", "theory", "gap"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:<10} {:>3} {:>8} {:<20} {:>6} {:>10.4} {:>10} {:>10} {:>10.4} {:>10.4} {:>10} {:>10}",
            r.mode.as_str(),
            r.d,
            r.n,
            r.stat_name,
            r.count,
            r.mean,
            opt(r.std),
            opt(r.stderr),
            r.min,
            r.max,
            opt(r.theory),
            opt(r.gap)
        )?;
    }
    Ok(())
}

/// Human-readable coupling table.
pub fn write_coupling<W: Write>(out: &mut W, rows: &[CouplingRow]) -> Result<()> {
    writeln!(
        out,
        "{:>3} {:>8} {:>5} {:>7} {:>8}",
        "d", "n", "k", "runs", "tv"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:>3} {:>8} {:>5} {:>7} {:>8.4}",
            r.d, r.n, r.k, r.runs, r.tv
        )?;
    }
    Ok(())
}

/// Warnings, summary and coupling tables, as printed to stderr by the CLI.
pub fn write_report<W: Write>(out: &mut W, run: &RunOutput) -> Result<()> {
    for w in &run.warnings {
        writeln!(out, "warning: {w}")?;
    }
    if !run.summary.is_empty() {
        write_summary(out, &run.summary)?;
    }
    if !run.coupling.is_empty() {
        writeln!(out)?;
        write_coupling(out, &run.coupling)?;
    }
    Ok(())
}
