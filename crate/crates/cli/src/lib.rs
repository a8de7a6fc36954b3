//! Command-line front end for `commscheme-core`: argument parsing, a
//! per-degree result cache, parallel dispatch across degrees and report
//! rendering.
//!
//! Exit codes of the binary: 0 on success, 2 when a verification fails, 1 on
//! usage or input errors.

pub mod args;
pub mod cache;
pub mod commands;
pub mod parse;
pub mod report;

pub use args::Cli;
pub use commands::run;
pub use report::Report;

/// Exit code for a failed verification.
pub const EXIT_FAIL: i32 = 2;
/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 1;
