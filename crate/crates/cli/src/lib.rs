//! Fixture loading, suite orchestration and report emission for the `mn`
//! command.

pub mod emit;
pub mod fixture;
pub mod suite;

pub use emit::{emit_report, emit_reports, Format};
pub use fixture::{load_fixture, Fixture, FixtureError};
pub use suite::{run_fixture, run_suite, RunOptions, Suite, SuiteReport, SuiteStatus};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const INVALID: i32 = 2;
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
