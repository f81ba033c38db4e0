//! Library half of the `bitensor` command-line tool: the expression
//! parser, the output formatters, and the named self-check suites. The
//! binary in `main.rs` is a thin clap wrapper over these.

pub mod checks;
pub mod format;
pub mod parse;
