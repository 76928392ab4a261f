//! Text, CSV and JSON renderings of harness outcomes.

use std::fmt::Write;

use serde_json::json;

use super::{Format, Outcome};
use crate::report::ClaimReport;

const SCHEMA: u32 = 1;

fn alternatives(r: &ClaimReport) -> String {
    r.alternatives
        .iter()
        .map(|a| format!("{}={}", a.formula, a.value))
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Column-aligned table of reports.
pub fn render_table(reports: &[ClaimReport]) -> String {
    let header = ["claim", "params", "formula", "predicted", "rel", "measured", "alt", "status", "secs"];
    let rows: Vec<[String; 9]> = reports
        .iter()
        .map(|r| {
            [
                r.claim_id.clone(),
                r.params.render(),
                r.formula.clone(),
                r.predicted.to_string(),
                r.relation.symbol().to_string(),
                r.measured.to_string(),
                alternatives(r),
                r.status.as_str().to_string(),
                format!("{:.3}", r.runtime_secs),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = render_table(&outcome.reports);
            for r in outcome.reports.iter().filter(|r| !r.notes.is_empty()) {
                if r.status.as_str() != "pass" {
                    for note in &r.notes {
                        let _ = writeln!(out, "  {} [{}]: {note}", r.claim_id, r.params.render());
                    }
                }
            }
            for e in &outcome.errors {
                let _ = writeln!(out, "error {}: {}", e.claim_id, e.message);
            }
            let failed = outcome.reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(
                out,
                "{} reports, {} failed, {} errors",
                outcome.reports.len(),
                failed,
                outcome.errors.len()
            );
            out
        }
        Format::Csv => {
            let mut out = String::from(
                "claim_id,params,formula,predicted,relation,measured,alternatives,status,runtime_secs\n",
            );
            for r in &outcome.reports {
                let fields = [
                    r.claim_id.clone(),
                    r.params.render(),
                    r.formula.clone(),
                    r.predicted.to_string(),
                    r.relation.symbol().to_string(),
                    r.measured.to_string(),
                    alternatives(r),
                    r.status.as_str().to_string(),
                    format!("{:.6}", r.runtime_secs),
                ];
                let cells: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
            out
        }
        Format::Json => {
            let value = json!({
                "schema": SCHEMA,
                "reports": outcome.reports,
                "errors": outcome.errors,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}
