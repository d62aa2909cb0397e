use nalgebra::{DMatrix, Matrix2, Matrix4};
use num_complex::Complex64;

use super::{BeamSplitter, CovMat1M, QuadCov, ThermalParams, PHYSICALITY_TOL};
use crate::error::{Error, Result};

/// Two-mode complex-amplitude covariance `[[A, C], [C^dag, B]]` in the
/// ordering `(alpha_1, alpha_1*, alpha_2, alpha_2*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovMat2M {
    a: CovMat1M,
    b: CovMat1M,
    c: Matrix2<Complex64>,
}

impl CovMat2M {
    /// Uncorrelated product `V1 (+) V2`.
    pub fn product(v1: &CovMat1M, v2: &CovMat1M) -> Self {
        Self {
            a: *v1,
            b: *v2,
            c: Matrix2::zeros(),
        }
    }

    /// Validates Hermiticity, the conjugate-pair block pattern and the
    /// uncertainty relation.
    pub fn from_matrix(m: &Matrix4<Complex64>) -> Result<Self> {
        let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let tol = 1e-12 * scale;
        let herm = (m - m.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if herm > tol {
            return Err(Error::NotHermitian(herm));
        }
        let pattern = [
            (m[(0, 0)] - m[(1, 1)]).norm(),
            (m[(2, 2)] - m[(3, 3)]).norm(),
            (m[(0, 2)] - m[(1, 3)].conj()).norm(),
            (m[(0, 3)] - m[(1, 2)].conj()).norm(),
        ];
        if pattern.iter().any(|&d| d > tol) {
            return Err(Error::Unphysical(
                "blocks do not have the (alpha, alpha*) conjugate-pair structure".into(),
            ));
        }
        let v = Self::from_matrix_unchecked(m);
        let nu = v.to_quadrature().symplectic_eigenvalues()?;
        if nu[0] < 0.5 - PHYSICALITY_TOL {
            return Err(Error::Unphysical(format!(
                "smallest symplectic eigenvalue {} below 1/2",
                nu[0]
            )));
        }
        Ok(v)
    }

    fn from_matrix_unchecked(m: &Matrix4<Complex64>) -> Self {
        Self {
            a: CovMat1M::new_unchecked(m[(0, 0)].re, m[(0, 1)]),
            b: CovMat1M::new_unchecked(m[(2, 2)].re, m[(2, 3)]),
            c: Matrix2::new(m[(0, 2)], m[(0, 3)], m[(1, 2)], m[(1, 3)]),
        }
    }

    pub fn block_a(&self) -> &CovMat1M {
        &self.a
    }

    pub fn block_b(&self) -> &CovMat1M {
        &self.b
    }

    pub fn block_c(&self) -> &Matrix2<Complex64> {
        &self.c
    }

    pub fn matrix(&self) -> Matrix4<Complex64> {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.a.matrix());
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.b.matrix());
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&self.c);
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&self.c.adjoint());
        m
    }

    pub fn det_a(&self) -> f64 {
        self.a.det()
    }

    pub fn det_b(&self) -> f64 {
        self.b.det()
    }

    /// `|c11|^2 - |c12|^2`; real for the conjugate-pair pattern.
    pub fn det_c(&self) -> f64 {
        self.c.determinant().re
    }

    pub fn det(&self) -> f64 {
        // LU over the real twin; it has the same determinant and stays real.
        self.to_quadrature().matrix().clone().determinant()
    }

    pub fn to_quadrature(&self) -> QuadCov {
        QuadCov::from_two_mode(self)
    }

    /// Largest entrywise modulus difference to another covariance.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.matrix() - other.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// Output covariance of the beam splitter fed with `v1` and `v2`, computed as
/// the congruence `T^dag (V1 (+) V2) T` induced by the amplitude map.
pub fn apply_beam_splitter(v1: &CovMat1M, v2: &CovMat1M, bs: &BeamSplitter) -> CovMat2M {
    let vin = CovMat2M::product(v1, v2).matrix();
    let t = bs.amplitude_congruence();
    let vout = t.adjoint() * vin * t;
    CovMat2M::from_matrix_unchecked(&vout)
}

/// Closed-form blocks A, B, C for a nonclassical input `v1` mixed with a
/// thermal state. Independent of [`apply_beam_splitter`]; the two must agree.
pub fn thermal_mixing_blocks(
    v1: &CovMat1M,
    thermal: &ThermalParams,
    bs: &BeamSplitter,
) -> CovMat2M {
    let (s, c) = bs.theta().sin_cos();
    let (s2, c2, sc) = (s * s, c * c, s * c);
    let a = v1.a();
    let b = v1.b();
    let th = thermal.nbar() + 0.5;
    let e = Complex64::from_polar(1.0, bs.phi());
    let e2 = e * e;

    let block_a = CovMat1M::new_unchecked(a * c2 + th * s2, b * c2);
    let block_b = CovMat1M::new_unchecked(a * s2 + th * c2, b * e2.conj() * s2);
    let x = a - th;
    let block_c = Matrix2::new(e * x, b * e.conj(), b.conj() * e, e.conj() * x).map(|z| z * sc);
    CovMat2M {
        a: block_a,
        b: block_b,
        c: block_c,
    }
}

impl From<&CovMat2M> for DMatrix<Complex64> {
    fn from(v: &CovMat2M) -> Self {
        let m = v.matrix();
        DMatrix::from_fn(4, 4, |r, c| m[(r, c)])
    }
}
