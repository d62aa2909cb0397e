use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;

use super::{CovMat1M, CovMat2M, PHYSICALITY_TOL};
use crate::error::{Error, Result};

/// Real covariance over canonical quadratures `(x1, p1, x2, p2, ...)`,
/// vacuum `I/2`, with `[x_k, p_k] = i`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadCov {
    m: DMatrix<f64>,
}

/// Block-diagonal symplectic form with `[[0, 1], [-1, 0]]` per mode.
pub fn symplectic_form(modes: usize) -> DMatrix<f64> {
    let mut s = DMatrix::zeros(2 * modes, 2 * modes);
    for k in 0..modes {
        s[(2 * k, 2 * k + 1)] = 1.0;
        s[(2 * k + 1, 2 * k)] = -1.0;
    }
    s
}

/// Per-mode `J = [[i, -1], [-i, -1]]` mapping `(x, p)`-weights onto
/// `(alpha, alpha*)`. `J^dag J = 2 I`.
pub(crate) fn amplitude_frame(modes: usize) -> DMatrix<Complex64> {
    let mut j = DMatrix::zeros(2 * modes, 2 * modes);
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    for k in 0..modes {
        j[(2 * k, 2 * k)] = i;
        j[(2 * k, 2 * k + 1)] = -one;
        j[(2 * k + 1, 2 * k)] = -i;
        j[(2 * k + 1, 2 * k + 1)] = -one;
    }
    j
}

impl QuadCov {
    /// Accepts a real symmetric matrix of even size.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() || !m.nrows().is_multiple_of(2) || m.nrows() == 0 {
            return Err(Error::Dimension(format!(
                "quadrature covariance must be 2n x 2n, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let asym = (&m - m.transpose()).amax();
        if asym > 1e-12 * m.amax().max(1.0) {
            return Err(Error::Unphysical(format!(
                "not symmetric (deviation {asym:e})"
            )));
        }
        Ok(Self { m })
    }

    pub(crate) fn from_complex(v: &DMatrix<Complex64>) -> Self {
        let j = amplitude_frame(v.nrows() / 2);
        let q = j.adjoint() * v * &j;
        let m = DMatrix::from_fn(q.nrows(), q.ncols(), |r, c| 0.5 * q[(r, c)].re);
        // symmetrize away rounding
        let m = (&m + m.transpose()) * 0.5;
        Self { m }
    }

    pub(crate) fn to_complex(&self) -> DMatrix<Complex64> {
        let j = amplitude_frame(self.modes());
        let m = self.m.map(|x| Complex64::new(x, 0.0));
        (&j * m * j.adjoint()).map(|z| z * 0.5)
    }

    pub fn from_single(v: &CovMat1M) -> Self {
        let m = v.matrix();
        Self::from_complex(&DMatrix::from_fn(2, 2, |r, c| m[(r, c)]))
    }

    pub fn from_two_mode(v: &CovMat2M) -> Self {
        let m = v.matrix();
        Self::from_complex(&DMatrix::from_fn(4, 4, |r, c| m[(r, c)]))
    }

    /// Inverse of [`QuadCov::from_single`].
    pub fn to_single(&self) -> Result<CovMat1M> {
        if self.modes() != 1 {
            return Err(Error::Dimension(format!(
                "expected 1 mode, got {}",
                self.modes()
            )));
        }
        let c = self.to_complex();
        CovMat1M::new(c[(0, 0)].re, c[(0, 1)])
    }

    /// Inverse of [`QuadCov::from_two_mode`].
    pub fn to_two_mode(&self) -> Result<CovMat2M> {
        if self.modes() != 2 {
            return Err(Error::Dimension(format!(
                "expected 2 modes, got {}",
                self.modes()
            )));
        }
        let c = self.to_complex();
        CovMat2M::from_matrix(&Matrix4::from_fn(|r, k| c[(r, k)]))
    }

    pub fn modes(&self) -> usize {
        self.m.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Transposition of one mode's density operator: `p_mode -> -p_mode`.
    pub fn partial_transpose(&self, mode: usize) -> Self {
        let mut m = self.m.clone();
        let p = 2 * mode + 1;
        for k in 0..m.nrows() {
            if k != p {
                m[(p, k)] = -m[(p, k)];
                m[(k, p)] = -m[(k, p)];
            }
        }
        Self { m }
    }

    /// Moduli of the eigenvalues of `i sigma V`, ascending. Computed from the
    /// real symmetric `K^T K` with `K = V^{1/2} sigma V^{1/2}`, whose spectrum
    /// is each symplectic eigenvalue squared, twice.
    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        let eig = self.m.clone().symmetric_eigen();
        let lowest = eig.eigenvalues.min();
        if lowest <= 0.0 {
            return Err(Error::Unphysical(format!(
                "covariance not positive definite (eigenvalue {lowest:e})"
            )));
        }
        let root = &eig.eigenvectors
            * DMatrix::from_diagonal(&eig.eigenvalues.map(f64::sqrt))
            * eig.eigenvectors.transpose();
        let k = &root * symplectic_form(self.modes()) * &root;
        let gram = k.transpose() * &k;
        let mut sq: Vec<f64> = gram.symmetric_eigenvalues().iter().copied().collect();
        sq.sort_by(f64::total_cmp);
        Ok(sq
            .chunks(2)
            .map(|p| (0.5 * (p[0] + p[1])).max(0.0).sqrt())
            .collect())
    }

    /// Uncertainty relation `V + i sigma / 2 >= 0`, i.e. every symplectic
    /// eigenvalue at least 1/2.
    pub fn is_physical(&self) -> bool {
        match self.symplectic_eigenvalues() {
            Ok(nu) => nu.iter().all(|&x| x >= 0.5 - PHYSICALITY_TOL),
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{GaussianSpec, ThermalParams};
    use approx::assert_abs_diff_eq;

    #[test]
    fn vacuum_is_half_identity() {
        let q = CovMat1M::vacuum().to_quadrature();
        assert!((q.matrix() - DMatrix::<f64>::identity(2, 2) * 0.5).amax() < 1e-15);
    }

    #[test]
    fn thermal_is_isotropic() {
        let q = ThermalParams::new(2.5)
            .unwrap()
            .covariance()
            .to_quadrature();
        assert!((q.matrix() - DMatrix::<f64>::identity(2, 2) * 3.0).amax() < 1e-15);
    }

    #[test]
    fn squeezed_quadrature_eigenvalues() {
        let v = GaussianSpec::new(0.3, 1.0, 0.7).unwrap().covariance();
        let ev = v.to_quadrature().eigenvalues();
        assert_abs_diff_eq!(ev[0], 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(ev[1], 1.25, epsilon = 1e-12);
    }

    #[test]
    fn frame_is_scaled_unitary() {
        let j = amplitude_frame(2);
        let g = j.adjoint() * &j;
        let two = DMatrix::<Complex64>::identity(4, 4).map(|z| z * 2.0);
        assert!((g - two).norm() < 1e-15);
    }

    #[test]
    fn round_trip_single() {
        let v = GaussianSpec::new(0.37, 0.6, 2.1).unwrap().covariance();
        let back = v.to_quadrature().to_single().unwrap();
        assert_abs_diff_eq!(back.a(), v.a(), epsilon = 1e-14);
        assert!((back.b() - v.b()).norm() < 1e-14);
    }

    #[test]
    fn symplectic_eigenvalue_of_single_mode_is_sqrt_det() {
        let v = GaussianSpec::new(0.2, 0.4, 1.0).unwrap().covariance();
        let nu = v.to_quadrature().symplectic_eigenvalues().unwrap();
        assert_eq!(nu.len(), 1);
        assert_abs_diff_eq!(nu[0], v.det().sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(nu[0], 0.5 / 0.4, epsilon = 1e-12);
    }

    #[test]
    fn rejects_odd_or_asymmetric() {
        assert!(QuadCov::new(DMatrix::identity(3, 3)).is_err());
        let mut m = DMatrix::identity(2, 2);
        m[(0, 1)] = 0.3;
        assert!(QuadCov::new(m).is_err());
    }

    #[test]
    fn partial_transpose_flips_momentum() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.3, 0.3, 2.0]);
        let q = QuadCov::new(m).unwrap().partial_transpose(0);
        assert_eq!(q.matrix()[(0, 1)], -0.3);
        assert_eq!(q.matrix()[(1, 1)], 2.0);
    }
}
