//! Gaussian noise processes acting on a single mode.
//!
//! Two processes destroy single-mode nonclassicality:
//!
//! * additive Gaussian noise, a random displacement with Gaussian weight of
//!   variance `sigma`, which maps `V -> V + sigma I` and lowers the
//!   nonclassical depth by exactly `sigma`;
//! * thermal substitution: the channel that prepares a squeezed state from
//!   vacuum is fed a thermal state instead.
//!
//! A Gaussian channel acts on the quadrature covariance as
//! `V -> X V X^T + Y`. For thermal substitution we use the decomposition
//! "squeeze, then add classical noise": `X` is the squeezer whose narrow
//! variance `e^{-2r}/2` equals the target's narrow variance `(1 - 2 tau)/2`,
//! and `Y = V_target - X X^T / 2`, which is positive semidefinite and vanishes
//! along the squeezed axis. Feeding `(n + 1/2) I` leaves the narrow variance
//! at `(2n + 1)(1 - 2 tau)/2`, so the state turns classical exactly at
//! `n = tau / (1 - 2 tau)` for any purity, the same value as the 50:50
//! critical noise.
//!
//! The reverse order, "add noise, then squeeze", has a thermal seed
//! `(1 - u)/(2u)` and a stronger squeezer `e^{-2r} = u (1 - 2 tau)`; there the
//! threshold moves to `tau / (u (1 - 2 tau))`. That decomposition is not
//! provided.

use nalgebra::{Complex, Matrix2};

use crate::error::{domain, Result};
use crate::gaussian::{CovMat1M, GaussianSpec, QuadCov, ThermalParams};

/// Variance of an additive Gaussian displacement noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianNoiseParams {
    sigma: f64,
}

impl GaussianNoiseParams {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(domain("sigma", sigma, "0 <= sigma < inf"));
        }
        Ok(Self { sigma })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// `a -> a + sigma`, `b` unchanged.
pub fn add_gaussian_noise(v: &CovMat1M, g: &GaussianNoiseParams) -> CovMat1M {
    // adding a positive multiple of identity never breaks physicality
    CovMat1M::new_unchecked(v.a() + g.sigma, v.b())
}

/// Single-mode Gaussian channel `V -> X V X^T + Y` on quadratures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianChannel1M {
    pub x: Matrix2<f64>,
    pub y: Matrix2<f64>,
}

impl GaussianChannel1M {
    pub fn apply(&self, v: &CovMat1M) -> Result<CovMat1M> {
        let q = quad2(v);
        let out = self.x * q * self.x.transpose() + self.y;
        QuadCov::new(nalgebra::DMatrix::from_fn(2, 2, |r, c| out[(r, c)]))?.to_single()
    }

    /// Smallest eigenvalue of the Hermitian matrix
    /// `Y + (i/2)(sigma - X sigma X^T)`; complete positivity requires it to
    /// be nonnegative.
    pub fn complete_positivity_margin(&self) -> f64 {
        let sigma = Matrix2::new(0.0, 1.0, -1.0, 0.0);
        let skew = sigma - self.x * sigma * self.x.transpose();
        let h = Matrix2::from_fn(|r, c| Complex::new(self.y[(r, c)], 0.5 * skew[(r, c)]));
        h.symmetric_eigenvalues().min()
    }

    pub fn is_completely_positive(&self, tol: f64) -> bool {
        self.complete_positivity_margin() >= -tol
    }
}

fn quad2(v: &CovMat1M) -> Matrix2<f64> {
    let q = v.to_quadrature();
    let m = q.matrix();
    Matrix2::new(m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)])
}

fn rotation(angle: f64) -> Matrix2<f64> {
    let (s, c) = angle.sin_cos();
    Matrix2::new(c, -s, s, c)
}

/// Channel that takes vacuum to the state described by `spec`: a squeezer
/// with `e^{-2r} = 1 - 2 tau` along the axis set by `phi_b`, followed by
/// classical noise `Y`.
pub fn preparation_channel(spec: &GaussianSpec) -> GaussianChannel1M {
    let s = 1.0 - 2.0 * spec.tau();
    // narrow axis of the target sits at angle phi_b / 2 in the (x, p) plane
    let frame = rotation(0.5 * spec.phi_b());
    let squeeze = Matrix2::new(s.sqrt(), 0.0, 0.0, 1.0 / s.sqrt());
    let x = frame * squeeze * frame.transpose();
    let target = quad2(&spec.covariance());
    let y = target - x * x.transpose() * 0.5;
    GaussianChannel1M {
        x,
        y: (y + y.transpose()) * 0.5,
    }
}

/// Preparation channel applied to a thermal state of occupation `nbar_th`
/// instead of vacuum.
pub fn thermal_substitution(spec: &GaussianSpec, nbar_th: f64) -> Result<CovMat1M> {
    let th = ThermalParams::new(nbar_th)?;
    preparation_channel(spec).apply(&th.covariance())
}

/// `tau / (1 - 2 tau)`: thermal occupation at which
/// [`thermal_substitution`] yields a classical state.
pub fn classicality_threshold(spec: &GaussianSpec) -> f64 {
    spec.tau() / (1.0 - 2.0 * spec.tau())
}
