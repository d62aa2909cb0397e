use std::f64::consts::TAU;

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::{QuadCov, PHYSICALITY_TOL};
use crate::error::{domain, Error, Result};

/// Reduced Planck constant, J s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K (CODATA 2018, exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Single-mode Gaussian state described by its nonclassical depth `tau`,
/// purity `u` and the phase `phi_b` of the off-diagonal covariance entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpec {
    tau: f64,
    u: f64,
    phi_b: f64,
}

impl GaussianSpec {
    /// `tau` must lie in `[0, 1/2)` and `u` in `(0, 1]`. The phase is
    /// reduced into `[0, 2pi)`.
    pub fn new(tau: f64, u: f64, phi_b: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&tau) {
            return Err(domain("tau", tau, "0 <= tau < 1/2"));
        }
        if !(u > 0.0 && u <= 1.0) {
            return Err(domain("u", u, "0 < u <= 1"));
        }
        if !phi_b.is_finite() {
            return Err(domain("phi_b", phi_b, "finite"));
        }
        Ok(Self {
            tau,
            u,
            phi_b: phi_b.rem_euclid(TAU),
        })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn phi_b(&self) -> f64 {
        self.phi_b
    }

    pub fn covariance(&self) -> CovMat1M {
        covariance_from_spec(self)
    }
}

/// One-mode complex-amplitude covariance `[[a, b], [b*, a]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovMat1M {
    a: f64,
    b: Complex64,
}

impl CovMat1M {
    /// Checks `a > 0` and `a^2 - |b|^2 >= 1/4` up to [`PHYSICALITY_TOL`].
    pub fn new(a: f64, b: Complex64) -> Result<Self> {
        if !(a.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::Unphysical(format!(
                "non-finite entries a={a}, b={b}"
            )));
        }
        if a <= 0.0 {
            return Err(Error::Unphysical(format!(
                "diagonal a = {a} must be positive"
            )));
        }
        let det = a * a - b.norm_sqr();
        if det < 0.25 - PHYSICALITY_TOL {
            return Err(Error::Unphysical(format!(
                "det V = {det} violates det V >= 1/4"
            )));
        }
        Ok(Self { a, b })
    }

    pub(crate) fn new_unchecked(a: f64, b: Complex64) -> Self {
        Self { a, b }
    }

    pub fn vacuum() -> Self {
        Self::new_unchecked(0.5, Complex64::new(0.0, 0.0))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn det(&self) -> f64 {
        self.a * self.a - self.b.norm_sqr()
    }

    pub fn matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(
            Complex64::new(self.a, 0.0),
            self.b,
            self.b.conj(),
            Complex64::new(self.a, 0.0),
        )
    }

    pub fn to_quadrature(&self) -> QuadCov {
        QuadCov::from_single(self)
    }

    pub fn nonclassical_depth(&self) -> f64 {
        nonclassical_depth(self)
    }

    pub fn purity(&self) -> f64 {
        purity(self)
    }

    /// Recovers `(tau, u, phi_b)`. Fails for states whose depth reaches 1/2,
    /// which no finite covariance has.
    pub fn to_spec(&self) -> Result<GaussianSpec> {
        let phi = if self.b.norm() == 0.0 {
            0.0
        } else {
            self.b.arg()
        };
        GaussianSpec::new(self.nonclassical_depth(), self.purity(), phi)
    }
}

/// `a = 1/(4u^2(1-2tau)) + (1-2tau)/4`, `|b| = 1/(4u^2(1-2tau)) - (1-2tau)/4`,
/// `arg b = phi_b`.
pub fn covariance_from_spec(spec: &GaussianSpec) -> CovMat1M {
    let s = 1.0 - 2.0 * spec.tau;
    let wide = 1.0 / (4.0 * spec.u * spec.u * s);
    let narrow = s / 4.0;
    CovMat1M::new_unchecked(
        wide + narrow,
        Complex64::from_polar(wide - narrow, spec.phi_b),
    )
}

/// `max{0, -a + |b| + 1/2}`: how far the narrow quadrature variance
/// `a - |b|` sits below the vacuum value.
pub fn nonclassical_depth(v: &CovMat1M) -> f64 {
    (0.5 - v.a + v.b.norm()).max(0.0)
}

/// `1 / (2 sqrt(det V))`, clamped to 1 for states on the boundary.
pub fn purity(v: &CovMat1M) -> f64 {
    (0.5 / v.det().max(0.25).sqrt()).min(1.0)
}

/// Mean thermal photon number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    nbar: f64,
}

impl ThermalParams {
    pub fn new(nbar: f64) -> Result<Self> {
        if !(nbar >= 0.0 && nbar.is_finite()) {
            return Err(domain("nbar", nbar, "0 <= nbar < inf"));
        }
        Ok(Self { nbar })
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn covariance(&self) -> CovMat1M {
        thermal_covariance(self)
    }

    pub fn purity(&self) -> f64 {
        1.0 / (2.0 * self.nbar + 1.0)
    }
}

/// `(nbar + 1/2) I`.
pub fn thermal_covariance(t: &ThermalParams) -> CovMat1M {
    CovMat1M::new_unchecked(t.nbar + 0.5, Complex64::new(0.0, 0.0))
}

/// Bose-Einstein occupation `1/(exp(hbar omega / kT) - 1)` for a mode of
/// angular frequency `omega` (rad/s) at temperature `kelvin`.
pub fn thermal_occupation(kelvin: f64, omega: f64) -> Result<ThermalParams> {
    if !(kelvin >= 0.0 && kelvin.is_finite()) {
        return Err(domain("temperature", kelvin, "0 <= T < inf"));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(domain("frequency", omega, "0 < omega < inf"));
    }
    if kelvin == 0.0 {
        return ThermalParams::new(0.0);
    }
    let x = HBAR * omega / (BOLTZMANN * kelvin);
    ThermalParams::new(1.0 / x.exp_m1())
}
