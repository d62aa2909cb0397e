//! Truncated Fock-space oracle.
//!
//! Builds the squeezed-thermal and thermal inputs as density matrices, applies
//! the beam-splitter unitary and evaluates the logarithmic negativity from
//! the trace norm of the partial transpose. Nothing here touches covariance
//! matrices except moment extraction for validation, so agreement with
//! [`crate::entanglement`] is an independent check.

mod ops;
mod oracle;
mod state;
mod two_mode;

pub use ops::{annihilation, coherent_state, number_operator, squeeze_operator};
pub use oracle::{oracle_check_point, OracleOutcome, OracleReport, MAX_ORACLE_DIM};
pub use state::{fock_squeezed_thermal, fock_thermal, squeezed_thermal_seed, FockDensityMatrix};
pub use two_mode::{fock_beam_splitter, fock_log_negativity, FockNegativity};

use crate::error::{domain, Result};

/// Truncation and tolerance settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Number of Fock levels kept per mode (photon cutoff + 1).
    pub dim: usize,
    /// Largest acceptable probability lost at the cutoff.
    pub tol_trace: f64,
    /// Agreement required between Gaussian and Fock negativities.
    pub tol_compare: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            dim: 40,
            tol_trace: 1e-8,
            tol_compare: 1e-3,
        }
    }
}

impl OracleConfig {
    pub fn new(dim: usize, tol_trace: f64, tol_compare: f64) -> Result<Self> {
        let cfg = Self {
            dim,
            tol_trace,
            tol_compare,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 4 {
            return Err(domain("dim", self.dim as f64, "dim >= 4"));
        }
        if self.tol_trace.is_nan() || self.tol_trace <= 0.0 {
            return Err(domain("tol_trace", self.tol_trace, "tol_trace > 0"));
        }
        if self.tol_compare.is_nan() || self.tol_compare <= 0.0 {
            return Err(domain("tol_compare", self.tol_compare, "tol_compare > 0"));
        }
        Ok(())
    }

    pub fn with_dim(&self, dim: usize) -> Self {
        Self { dim, ..*self }
    }
}
