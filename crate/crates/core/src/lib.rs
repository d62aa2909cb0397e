//! Entanglement generated by mixing a squeezed Gaussian state with a thermal
//! state on a lossless beam splitter.
//!
//! * [`gaussian`]: covariance representations, thermal states, beam splitter.
//! * [`entanglement`]: partial-transpose symplectic spectrum, logarithmic
//!   negativity, critical thermal noise.
//! * [`channels`]: additive Gaussian noise and the thermal-substitution
//!   channel.
//! * [`fock`]: truncated Fock-space oracle used to cross-check the Gaussian
//!   results.

pub mod channels;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod roots;

pub use error::{Error, Result};
