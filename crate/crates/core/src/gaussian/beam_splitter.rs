use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{domain, Result};

/// Lossless beam splitter with mixing angle `theta` (transmittance
/// `cos^2 theta`) and reflection phase `phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    theta: f64,
    phi: f64,
}

impl BeamSplitter {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(domain("theta", theta, "finite"));
        }
        if !phi.is_finite() {
            return Err(domain("phi", phi, "finite"));
        }
        Ok(Self { theta, phi })
    }

    /// 50:50 splitter, `theta = pi/4`.
    pub fn balanced(phi: f64) -> Self {
        Self {
            theta: std::f64::consts::FRAC_PI_4,
            phi,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn transmittance(&self) -> f64 {
        self.theta.cos().powi(2)
    }

    /// Amplitude transformation `beta = M alpha`:
    /// `[[cos t, sin t e^{i phi}], [-sin t e^{-i phi}, cos t]]`.
    pub fn matrix(&self) -> Matrix2<Complex64> {
        let (s, c) = self.theta.sin_cos();
        let e = Complex64::from_polar(1.0, self.phi);
        Matrix2::new(
            Complex64::new(c, 0.0),
            e * s,
            -e.conj() * s,
            Complex64::new(c, 0.0),
        )
    }

    /// Congruence acting on the two-mode complex covariance, ordered as
    /// `(beta_1, beta_1*, beta_2, beta_2*)`: `V_out = T^dag V_in T`.
    pub(crate) fn amplitude_congruence(&self) -> Matrix4<Complex64> {
        let m = self.matrix();
        let mut t = Matrix4::zeros();
        for i in 0..2 {
            for j in 0..2 {
                t[(2 * i, 2 * j)] = m[(i, j)];
                t[(2 * i + 1, 2 * j + 1)] = m[(i, j)].conj();
            }
        }
        t
    }

    /// The same map as a real symplectic, orthogonal matrix `S` on
    /// `(x1, p1, x2, p2)`: `V_q,out = S^T V_q,in S`.
    pub fn quadrature_matrix(&self) -> Matrix4<f64> {
        let j = super::quadrature::amplitude_frame(2);
        let t = self.amplitude_congruence();
        let t = nalgebra::DMatrix::from_fn(4, 4, |r, c| t[(r, c)]);
        let s = (j.adjoint() * t * j).map(|z| z * 0.5);
        Matrix4::from_fn(|r, c| s[(r, c)].re)
    }
}
