//! JSON and text rendering of suite reports.

use std::fmt::Write;

use serde::Serialize;

use crate::suite::{Check, SuiteReport, SuiteStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

/// Pretty JSON with a trailing newline. Field order is fixed by the types
/// and all maps are ordered, so equal inputs give identical bytes.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn status_word(s: SuiteStatus) -> &'static str {
    match s {
        SuiteStatus::Pass => "PASS",
        SuiteStatus::Fail => "FAIL",
        SuiteStatus::NotApplicable => "N/A",
    }
}

fn check_text(out: &mut String, c: &Check) {
    let mark = if c.ok { "ok  " } else { "FAIL" };
    let body = c.report.to_string();
    let mut lines = body.lines();
    let head = lines.next().unwrap_or_default();
    let expect = match c.expected {
        Some(e) if c.report.applicable => format!(" (expected {e})"),
        _ => String::new(),
    };
    let _ = writeln!(out, "  {mark} {head}{expect}");
    for l in lines {
        let _ = writeln!(out, "       {}", l.trim_start());
    }
}

/// Human-readable form with witnesses inlined under each check.
pub fn suite_text(r: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[{}] {} :: {}", status_word(r.status), r.fixture, r.suite);
    for w in &r.warnings {
        let _ = writeln!(out, "  warning: {w}");
    }
    for c in &r.checks {
        check_text(&mut out, c);
    }
    out
}

pub fn emit_report(r: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Text => suite_text(r),
    }
}

pub fn emit_reports(rs: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Json => to_json(rs),
        Format::Text => {
            let mut out: String = rs.iter().map(suite_text).collect();
            let failed = rs.iter().filter(|r| r.failed()).count();
            let na = rs.iter().filter(|r| r.status == SuiteStatus::NotApplicable).count();
            let _ = writeln!(out, "{} suites: {} failed, {} not applicable", rs.len(), failed, na);
            out
        }
    }
}
