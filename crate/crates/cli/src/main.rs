use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use mn_cli::fixture::{load_fixture, shipped_fixtures, Fixture};
use mn_cli::{emit_report, emit_reports, exit, run_fixture, run_suite, Format, RunOptions, Suite, SuiteReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mn", version, about = "Exhaustive checks for finite rings and twisted series rings over them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a fixture and run the load-time checks.
    Validate {
        fixture: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate ideals and examine the named ones.
    Ideals {
        fixture: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide the base-ring properties.
    Props {
        fixture: PathBuf,
        /// Keep only the report with this property name.
        #[arg(long)]
        property: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run one suite.
    Verify {
        fixture: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Exponent window, as `lo..hi` (inclusive).
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i32, i32)>,
        #[arg(long)]
        max_support: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every suite of each fixture (default: the shipped fixtures).
    Report {
        fixtures: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_window(s: &str) -> Result<(i32, i32)> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| anyhow!("expected lo..hi"))?;
    let (lo, hi) = (lo.trim().parse()?, hi.trim().parse()?);
    if lo > hi {
        return Err(anyhow!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn load(path: &PathBuf) -> std::result::Result<Fixture, i32> {
    load_fixture(path).map_err(|e| {
        eprintln!("mn: {}: {e}", path.display());
        exit::INVALID
    })
}

fn status(reports: &[SuiteReport]) -> i32 {
    for r in reports {
        for w in &r.warnings {
            eprintln!("mn: warning: {}: {w}", r.fixture);
        }
    }
    if reports.iter().any(|r| r.failed()) {
        exit::FAIL
    } else {
        exit::PASS
    }
}

fn run(cli: Cli) -> std::result::Result<i32, i32> {
    let opts = RunOptions::default();
    match cli.command {
        Command::Validate { fixture, format } => {
            let path = fixture.display().to_string();
            match load_fixture(&fixture) {
                Ok(f) => {
                    let v = f.validation.as_ref().expect("validated on load");
                    match format {
                        Format::Json => print!(
                            "{}",
                            mn_cli::emit::to_json(&json!({"fixture": f.label(), "valid": true, "validation": v}))
                        ),
                        Format::Text => println!(
                            "{}: valid ({} elements, {} associativity triples, twist laws on {} exponents)",
                            f.label(),
                            f.ring.size(),
                            v.associativity_triples,
                            v.twist.window.len()
                        ),
                    }
                    Ok(exit::PASS)
                }
                Err(e) => {
                    match format {
                        Format::Json => print!("{}", mn_cli::emit::to_json(&json!({"fixture": path, "valid": false, "error": e.to_string()}))),
                        Format::Text => println!("{path}: invalid: {e}"),
                    }
                    Ok(exit::INVALID)
                }
            }
        }
        Command::Ideals { fixture, format } => {
            let f = load(&fixture)?;
            let r = run_suite(&f, Suite::Ideals, &opts);
            print!("{}", emit_report(&r, format));
            Ok(status(&[r]))
        }
        Command::Props { fixture, property, format } => {
            let f = load(&fixture)?;
            let mut r = run_suite(&f, Suite::Properties, &opts);
            if let Some(p) = property {
                r.checks.retain(|c| c.report.property == p);
                if r.checks.is_empty() {
                    eprintln!("mn: no property named {p}");
                    return Err(exit::INVALID);
                }
            }
            print!("{}", emit_report(&r, format));
            Ok(status(&[r]))
        }
        Command::Verify { fixture, suite, window, max_support, seed, samples, format } => {
            let f = load(&fixture)?;
            let opts = RunOptions { window, max_support, seed, samples };
            let r = run_suite(&f, suite, &opts);
            print!("{}", emit_report(&r, format));
            Ok(status(&[r]))
        }
        Command::Report { fixtures, seed, format } => {
            let paths = if fixtures.is_empty() { shipped_fixtures() } else { fixtures };
            let mut loaded = Vec::new();
            for p in &paths {
                loaded.push(load(p)?);
            }
            loaded.sort_by(|a, b| a.label().cmp(b.label()));
            let opts = RunOptions { seed, ..opts };
            let reports: Vec<SuiteReport> = loaded.iter().flat_map(|f| run_fixture(f, &opts)).collect();
            print!("{}", emit_reports(&reports, format));
            Ok(status(&reports))
        }
    }
}

fn main() -> ExitCode {
    let code = run(Cli::parse()).unwrap_or_else(|c| c);
    ExitCode::from(code as u8)
}
