use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::ops::{annihilation, squeeze_operator};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::gaussian::{CovMat1M, GaussianSpec};

/// Density matrix on one mode (`dim x dim`) or two modes (`dim^2 x dim^2`,
/// index `n1 * dim + n2`) in a truncated Fock basis.
///
/// The trace may fall short of one by the probability lost at the cutoff;
/// expectation values are taken relative to the actual trace.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDensityMatrix {
    dim: usize,
    modes: usize,
    m: DMatrix<Complex64>,
}

impl FockDensityMatrix {
    pub fn new(m: DMatrix<Complex64>, dim: usize, modes: usize) -> Result<Self> {
        let size = dim.pow(modes as u32);
        if !(modes == 1 || modes == 2) || m.nrows() != size || m.ncols() != size {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for {modes} mode(s) of dim {dim}",
                m.nrows(),
                m.ncols()
            )));
        }
        let dev = hermitian_deviation(&m);
        if dev > 1e-10 {
            return Err(Error::NotHermitian(dev));
        }
        Ok(Self { dim, modes, m })
    }

    pub(crate) fn from_parts(m: DMatrix<Complex64>, dim: usize, modes: usize) -> Self {
        Self { dim, modes, m }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn trace(&self) -> f64 {
        self.m.diagonal().iter().map(|z| z.re).sum()
    }

    /// Probability missing from the truncated space.
    pub fn leakage(&self) -> f64 {
        (1.0 - self.trace()).max(0.0)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        hermitian_deviation(&self.m)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.m.clone().symmetric_eigenvalues().min()
    }

    /// `tr(rho^2) / tr(rho)^2`.
    pub fn purity(&self) -> f64 {
        let t = self.trace();
        self.m.iter().map(|z| z.norm_sqr()).sum::<f64>() / (t * t)
    }

    /// `rho_1 (x) rho_2` for two single-mode states of equal dim.
    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        if a.modes != 1 || b.modes != 1 || a.dim != b.dim {
            return Err(Error::Dimension(
                "tensor needs two single-mode states of equal dim".into(),
            ));
        }
        Ok(Self::from_parts(a.m.kronecker(&b.m), a.dim, 2))
    }

    /// Reduced state of `mode` (0 or 1) of a two-mode matrix.
    pub fn reduced(&self, mode: usize) -> Result<Self> {
        if self.modes != 2 || mode > 1 {
            return Err(Error::Dimension(
                "partial trace needs a two-mode state".into(),
            ));
        }
        let d = self.dim;
        let mut out = DMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    acc += if mode == 0 {
                        self.m[(i * d + k, j * d + k)]
                    } else {
                        self.m[(k * d + i, k * d + j)]
                    };
                }
                out[(i, j)] = acc;
            }
        }
        Ok(Self::from_parts(out, d, 1))
    }

    fn expect(&self, op: &DMatrix<Complex64>) -> Complex64 {
        (&self.m * op).trace() / self.trace()
    }

    /// `<a>` of a single-mode state.
    pub fn mean_amplitude(&self) -> Result<Complex64> {
        self.require_single()?;
        Ok(self.expect(&annihilation(self.dim)))
    }

    pub fn mean_photons(&self) -> Result<f64> {
        self.require_single()?;
        let a = annihilation(self.dim);
        Ok(self.expect(&(a.adjoint() * a)).re)
    }

    /// Complex-amplitude covariance from second moments about the mean:
    /// `a = <da^dag da> + 1/2`, `b = -<da^2>`.
    pub fn covariance_1m(&self) -> Result<CovMat1M> {
        self.require_single()?;
        let a_op = annihilation(self.dim);
        let mean = self.expect(&a_op);
        let n = self.expect(&(a_op.adjoint() * &a_op)).re - mean.norm_sqr();
        let a2 = self.expect(&(&a_op * &a_op)) - mean * mean;
        CovMat1M::new(n + 0.5, -a2)
    }

    fn require_single(&self) -> Result<()> {
        if self.modes != 1 {
            return Err(Error::Dimension("single-mode state expected".into()));
        }
        Ok(())
    }

    pub(crate) fn check_leakage(&self, cfg: &OracleConfig) -> Result<()> {
        let leakage = self.leakage();
        if leakage > cfg.tol_trace {
            return Err(Error::Truncation {
                dim: self.dim,
                leakage,
                tolerance: cfg.tol_trace,
            });
        }
        Ok(())
    }
}

fn hermitian_deviation(m: &DMatrix<Complex64>) -> f64 {
    let mut dev: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in r..m.ncols() {
            dev = dev.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    dev
}

fn thermal_diagonal(nbar: f64, dim: usize) -> DMatrix<Complex64> {
    let ratio = nbar / (1.0 + nbar);
    let p0 = 1.0 / (1.0 + nbar);
    let weights = DVector::from_fn(dim, |n, _| Complex64::new(p0 * ratio.powi(n as i32), 0.0));
    DMatrix::from_diagonal(&weights)
}

/// Thermal state `sum_n nbar^n / (1 + nbar)^{n+1} |n><n|`.
pub fn fock_thermal(nbar: f64, cfg: &OracleConfig) -> Result<FockDensityMatrix> {
    cfg.validate()?;
    crate::gaussian::ThermalParams::new(nbar)?;
    let rho = FockDensityMatrix::from_parts(thermal_diagonal(nbar, cfg.dim), cfg.dim, 1);
    rho.check_leakage(cfg)?;
    Ok(rho)
}

/// Squeezing `r` and thermal seed `n0` with `S(r) rho_th(n0) S(r)^dag`
/// matching the covariance of `spec`: the symplectic eigenvalue
/// `1/(2u) = n0 + 1/2` fixes the seed and the narrow variance
/// `(n0 + 1/2) e^{-2r} = (1 - 2 tau)/2` fixes `e^{-2r} = u (1 - 2 tau)`.
pub fn squeezed_thermal_seed(spec: &GaussianSpec) -> (f64, f64) {
    let u = spec.u();
    let r = -0.5 * (u * (1.0 - 2.0 * spec.tau())).ln();
    let n0 = (1.0 - u) / (2.0 * u);
    (r, n0)
}

/// Squeezed thermal state with the covariance of `spec`, squeezed along the
/// `phi_b` axis. Computed in a padded space so that cutoff artifacts of the
/// squeezing generator stay out of the kept `dim` levels.
pub fn fock_squeezed_thermal(spec: &GaussianSpec, cfg: &OracleConfig) -> Result<FockDensityMatrix> {
    cfg.validate()?;
    let (r, n0) = squeezed_thermal_seed(spec);
    let work = 4 * cfg.dim;
    let seed = thermal_diagonal(n0, work);
    let s = squeeze_operator(Complex64::from_polar(r, spec.phi_b()), work);
    let full = &s * seed * s.adjoint();
    let kept = full.view((0, 0), (cfg.dim, cfg.dim)).into_owned();
    let kept = (&kept + kept.adjoint()) * Complex64::new(0.5, 0.0);
    let rho = FockDensityMatrix::from_parts(kept, cfg.dim, 1);
    rho.check_leakage(cfg)?;
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_projector() {
        let spec = GaussianSpec::new(0.0, 1.0, 0.0).unwrap();
        let rho = fock_squeezed_thermal(&spec, &OracleConfig::default().with_dim(10)).unwrap();
        assert!((rho.matrix()[(0, 0)].re - 1.0).abs() < 1e-14);
        assert!(rho.matrix().iter().skip(1).all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn boundary_classical_state_is_squeezed_thermal() {
        // (tau = 0, u = 1/3) is the classical state whose narrow variance
        // sits exactly at the vacuum value: seed n0 = 1 squeezed by
        // e^{-2r} = 1/3, not the isotropic thermal state of the same purity.
        let spec = GaussianSpec::new(0.0, 1.0 / 3.0, 0.0).unwrap();
        let (r, n0) = squeezed_thermal_seed(&spec);
        assert!((r - 0.5 * 3f64.ln()).abs() < 1e-15);
        assert!((n0 - 1.0).abs() < 1e-15);
        let cfg = OracleConfig::new(80, 1e-6, 1e-3).unwrap();
        let v = fock_squeezed_thermal(&spec, &cfg)
            .unwrap()
            .covariance_1m()
            .unwrap();
        assert!((v.a() - 2.5).abs() < 1e-6);
        assert!((v.b().norm() - 2.0).abs() < 1e-6);
    }

    #[test]
    fn thermal_is_geometric() {
        let rho = fock_thermal(1.0, &OracleConfig::default()).unwrap();
        for n in 0..10 {
            assert!((rho.matrix()[(n, n)].re - 0.5f64.powi(n as i32 + 1)).abs() < 1e-15);
        }
    }

    #[test]
    fn moments_reproduce_covariance() {
        let spec = GaussianSpec::new(0.2, 0.8, 0.6).unwrap();
        let rho = fock_squeezed_thermal(&spec, &OracleConfig::default()).unwrap();
        let v = rho.covariance_1m().unwrap();
        let target = spec.covariance();
        assert!((v.a() - target.a()).abs() < 1e-6);
        assert!((v.b() - target.b()).norm() < 1e-6);
        assert!(rho.mean_amplitude().unwrap().norm() < 1e-12);
        assert!(rho.min_eigenvalue() > -1e-10);
    }

    #[test]
    fn thermal_weights_and_leakage() {
        let cfg = OracleConfig::default().with_dim(12);
        let rho = fock_thermal(1.0, &cfg).unwrap_err();
        assert!(matches!(rho, Error::Truncation { dim: 12, .. }));
        let rho = fock_thermal(0.2, &cfg).unwrap();
        assert!((rho.mean_photons().unwrap() - 0.2).abs() < 1e-8);
        assert!(fock_thermal(-0.1, &cfg).is_err());
    }

    #[test]
    fn tiny_cutoff_reports_truncation() {
        let spec = GaussianSpec::new(0.3, 1.0, 0.0).unwrap();
        let err = fock_squeezed_thermal(&spec, &OracleConfig::default().with_dim(4)).unwrap_err();
        assert!(matches!(err, Error::Truncation { dim: 4, .. }));
    }

    #[test]
    fn config_validation() {
        assert!(OracleConfig::new(3, 1e-8, 1e-3).is_err());
        assert!(OracleConfig::new(10, 0.0, 1e-3).is_err());
        assert!(OracleConfig::new(10, 1e-8, -1.0).is_err());
    }

    #[test]
    fn tensor_and_partial_trace() {
        let cfg = OracleConfig::new(8, 1e-3, 1e-3).unwrap();
        let a = fock_thermal(0.1, &cfg).unwrap();
        let b = fock_squeezed_thermal(&GaussianSpec::new(0.1, 1.0, 0.0).unwrap(), &cfg).unwrap();
        let ab = FockDensityMatrix::tensor(&a, &b).unwrap();
        let ra = ab.reduced(0).unwrap();
        let rb = ab.reduced(1).unwrap();
        let scale_a = Complex64::new(b.trace(), 0.0);
        let scale_b = Complex64::new(a.trace(), 0.0);
        assert!((ra.matrix() - a.matrix() * scale_a).norm() < 1e-14);
        assert!((rb.matrix() - b.matrix() * scale_b).norm() < 1e-14);
    }
}
