//! Gaussian state representations and the lossless beam splitter.
//!
//! The public representation is the complex-amplitude covariance used in the
//! characteristic function `chi(x) = exp(-x^dag V x / 2)` with
//! `x = (alpha, alpha*)`, where the vacuum has `V = I/2`. Symplectic machinery
//! runs on the real quadrature twin (see [`QuadCov`]) with `[x, p] = i` and
//! vacuum covariance `I/2`. The two are related per mode by
//! `V_q = J^dag V J / 2`, `J = [[i, -1], [-i, -1]]`, which preserves every
//! block determinant.

mod beam_splitter;
mod quadrature;
mod single;
mod two_mode;

pub use beam_splitter::BeamSplitter;
pub use quadrature::{symplectic_form, QuadCov};
pub use single::{
    covariance_from_spec, nonclassical_depth, purity, thermal_covariance, thermal_occupation,
    CovMat1M, GaussianSpec, ThermalParams, BOLTZMANN, HBAR,
};
pub use two_mode::{apply_beam_splitter, thermal_mixing_blocks, CovMat2M};

/// Covariances within this distance of the uncertainty boundary are accepted
/// and clamped onto it.
pub const PHYSICALITY_TOL: f64 = 1e-9;
