//! Command-line front end for the `bsent` library: point evaluations,
//! parameter sweeps (including the figure presets), critical-noise
//! maps and Fock-oracle comparisons, written as CSV or JSON lines.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod grid;
pub mod presets;
pub mod record;

pub use cli::{run, Cli};
pub use error::{CliError, CliResult};
