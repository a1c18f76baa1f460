//! Command-line front end for `paraspec`.
//!
//! Reads a matrix from a JSON document or a built-in fixture and writes
//! JSON, CSV, text or SVG. See [`run`] for exit codes.

mod cli;
pub mod document;
pub mod report;
pub mod svg;
pub mod table;

/// Runs the command line and returns the process exit code.
///
/// 0 success, 1 usage, 2 unreadable or invalid input, 3 numeric
/// non-convergence, 4 capability limit, 5 internal or output failure.
pub use cli::run;
pub use cli::{CliError, BUILTINS};
