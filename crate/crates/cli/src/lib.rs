//! Library half of the `speclap` command-line tool: the edge-list format,
//! argument definitions and the JSON reports each subcommand prints.

pub mod args;
pub mod commands;
pub mod edgelist;
pub mod error;

pub use error::{CliError, Result};

/// Eigensolver tolerance, overridable through `SPECLAP_TOL`.
pub fn tolerance_from_env() -> Result<f64> {
    match std::env::var("SPECLAP_TOL") {
        Err(_) => Ok(speclap::eigen::DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(CliError::InvalidTolerance(s)),
        },
    }
}
