//! Command-line front end: argument parsing, request/result envelopes and
//! the reference fixture suite.

#![forbid(unsafe_code)]

pub mod app;
pub mod checks;

pub use app::{run, EXIT_DOMAIN, EXIT_FAILED, EXIT_USAGE};
