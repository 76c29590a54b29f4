//! Library half of the `lsurkit` binary: scans, single-state checks and the
//! brute-force oracle comparison.

pub mod check;
pub mod config;
pub mod error;
pub mod format;
pub mod oracle_cmd;
pub mod scan;

pub use error::{CliError, CliResult};
