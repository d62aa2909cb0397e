use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside its admissible range.
    #[error("{name} = {value} is out of range: {bound}")]
    Domain {
        name: &'static str,
        value: f64,
        bound: &'static str,
    },

    /// A covariance matrix violates the uncertainty relation or positivity.
    #[error("unphysical covariance: {0}")]
    Unphysical(String),

    /// Roots of the symplectic characteristic equation came out complex.
    #[error("characteristic equation has complex roots (discriminant {discriminant:e})")]
    ComplexRoots { discriminant: f64 },

    /// Truncated Fock space loses too much probability at the cutoff.
    #[error("truncation leakage {leakage:e} exceeds {tolerance:e} at dim {dim}; increase dim")]
    Truncation {
        dim: usize,
        leakage: f64,
        tolerance: f64,
    },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The critical-noise condition has no sign change where one must exist.
    #[error("no sign change of the entanglement condition in [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, bound: &'static str) -> Error {
    Error::Domain { name, value, bound }
}
