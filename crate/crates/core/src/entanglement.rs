//! Logarithmic negativity of the beam-splitter output and the thermal noise
//! at which it vanishes.
//!
//! Two routes to the negativity are provided. The generic pipeline builds the
//! output covariance, solves the partial-transpose characteristic equation
//! `xi^4 - (det A + det B - 2 det C) xi^2 + det V = 0` and takes
//! `max{0, -log2(2 xi_-)}`. The closed form expresses the same quantity
//! through
//!
//! ```text
//! S   = [(n - tau + 1) S+ - (n + tau) S- cos 4 theta] / 2
//! S+- = 1 / (u^2 (1 - 2 tau)) +- (2n + 1)
//! N   = max{0, -log2(S - sqrt(S^2 - (2n + 1)^2 / u^2)) / 2}
//! ```
//!
//! Output entanglement vanishes where `2S = 1 + (2n + 1)^2 / u^2`. That
//! condition is quadratic in `n`, which [`critical_noise`] solves directly.

use std::f64::consts::FRAC_PI_4;

use crate::error::{domain, Error, Result};
use crate::gaussian::{apply_beam_splitter, BeamSplitter, CovMat2M, GaussianSpec, ThermalParams};
use crate::roots::bisect;

/// Upper end of the thermal-noise bracket. Thresholds beyond it are reported
/// as [`Threshold::Unbounded`].
pub const NOISE_BRACKET: f64 = 1e3;
/// Bracket width at which the bisection fallback stops.
pub const NOISE_TOL: f64 = 1e-10;
/// Largest beam-splitter error `|e|` for which
/// [`critical_noise_near_optimal`] is considered reliable.
pub const NEAR_OPTIMAL_VALIDITY: f64 = 0.2;

/// Positive roots `xi_- <= xi_+` of the partial-transpose characteristic
/// equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticPTSpectrum {
    pub xi_minus: f64,
    pub xi_plus: f64,
}

impl SymplecticPTSpectrum {
    pub fn log_negativity(&self) -> f64 {
        (-(2.0 * self.xi_minus).log2()).max(0.0)
    }
}

/// Roots of the characteristic equation from the block determinants.
pub fn pt_symplectic_spectrum(v: &CovMat2M) -> Result<SymplecticPTSpectrum> {
    let delta = v.det_a() + v.det_b() - 2.0 * v.det_c();
    let det = v.det();
    let disc = delta * delta - 4.0 * det;
    if disc < -1e-10 * delta * delta || delta <= 0.0 || det <= 0.0 {
        return Err(Error::ComplexRoots { discriminant: disc });
    }
    let root = disc.max(0.0).sqrt();
    let plus_sq = 0.5 * (delta + root);
    // Vieta avoids cancellation in the smaller root.
    let minus_sq = det / plus_sq;
    Ok(SymplecticPTSpectrum {
        xi_minus: minus_sq.sqrt(),
        xi_plus: plus_sq.sqrt(),
    })
}

/// Same spectrum as the symplectic eigenvalues of the partially transposed
/// quadrature covariance.
pub fn pt_symplectic_spectrum_quadrature(v: &CovMat2M) -> Result<SymplecticPTSpectrum> {
    let nu = v
        .to_quadrature()
        .partial_transpose(1)
        .symplectic_eigenvalues()?;
    Ok(SymplecticPTSpectrum {
        xi_minus: nu[0],
        xi_plus: nu[1],
    })
}

/// `max{0, -log2(2 xi_-)}`.
pub fn log_negativity(v: &CovMat2M) -> Result<f64> {
    Ok(pt_symplectic_spectrum(v)?.log_negativity())
}

/// Full parameter set of the mixing scenario: nonclassical input, thermal
/// input and beam splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    pub spec: GaussianSpec,
    pub thermal: ThermalParams,
    pub bs: BeamSplitter,
}

/// Closed-form intermediates `S`, `S+` and `S-`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormTerms {
    pub s: f64,
    pub s_plus: f64,
    pub s_minus: f64,
}

impl ScenarioParams {
    pub fn new(tau: f64, u: f64, phi_b: f64, nbar: f64, theta: f64, phi: f64) -> Result<Self> {
        Ok(Self {
            spec: GaussianSpec::new(tau, u, phi_b)?,
            thermal: ThermalParams::new(nbar)?,
            bs: BeamSplitter::new(theta, phi)?,
        })
    }

    pub fn tau(&self) -> f64 {
        self.spec.tau()
    }

    pub fn u(&self) -> f64 {
        self.spec.u()
    }

    pub fn nbar(&self) -> f64 {
        self.thermal.nbar()
    }

    pub fn theta(&self) -> f64 {
        self.bs.theta()
    }

    pub fn with_nbar(&self, nbar: f64) -> Result<Self> {
        Ok(Self {
            thermal: ThermalParams::new(nbar)?,
            ..*self
        })
    }

    pub fn with_theta(&self, theta: f64) -> Result<Self> {
        Ok(Self {
            bs: BeamSplitter::new(theta, self.bs.phi())?,
            ..*self
        })
    }

    /// Output covariance `V_out`.
    pub fn output_covariance(&self) -> CovMat2M {
        apply_beam_splitter(
            &self.spec.covariance(),
            &self.thermal.covariance(),
            &self.bs,
        )
    }

    /// `det V_in = (2n + 1)^2 / (16 u^2)`.
    pub fn input_det(&self) -> f64 {
        let w = 2.0 * self.nbar() + 1.0;
        w * w / (16.0 * self.u() * self.u())
    }

    pub fn closed_form_terms(&self) -> ClosedFormTerms {
        let (tau, n) = (self.tau(), self.nbar());
        let k = squeeze_weight(tau, self.u());
        let w = 2.0 * n + 1.0;
        let s_plus = k + w;
        let s_minus = k - w;
        let c4 = (4.0 * self.theta()).cos();
        let s = 0.5 * ((n - tau + 1.0) * s_plus - (n + tau) * s_minus * c4);
        ClosedFormTerms { s, s_plus, s_minus }
    }
}

/// `1 / (u^2 (1 - 2 tau))`.
fn squeeze_weight(tau: f64, u: f64) -> f64 {
    1.0 / (u * u * (1.0 - 2.0 * tau))
}

/// `sin 2 theta` below this is treated as an unmixed (product) output.
const MIXING_FLOOR: f64 = 1e-12;

fn no_mixing(theta: f64) -> bool {
    (2.0 * theta).sin().abs() < MIXING_FLOOR
}

/// Logarithmic negativity from the closed form in `(tau, u, nbar, theta)`.
/// Depends on neither beam-splitter phase nor `phi_b`. At `theta = 0` or
/// `pi/2` the output is a product state and the result is exactly zero.
pub fn negativity_closed_form(p: &ScenarioParams) -> f64 {
    if no_mixing(p.theta()) {
        return 0.0;
    }
    let s = p.closed_form_terms().s;
    let w = 2.0 * p.nbar() + 1.0;
    let d = w * w / (p.u() * p.u());
    // S - sqrt(S^2 - D) rewritten without the subtraction
    let g = d / (s + (s * s - d).max(0.0).sqrt());
    (-0.5 * g.log2()).max(0.0)
}

fn check_tau(tau: f64) -> Result<()> {
    if !(0.0..0.5).contains(&tau) {
        return Err(domain("tau", tau, "0 <= tau < 1/2"));
    }
    Ok(())
}

fn check_nbar(nbar: f64) -> Result<()> {
    if !(nbar >= 0.0 && nbar.is_finite()) {
        return Err(domain("nbar", nbar, "0 <= nbar < inf"));
    }
    Ok(())
}

fn check_u(u: f64) -> Result<()> {
    if !(u > 0.0 && u <= 1.0) {
        return Err(domain("u", u, "0 < u <= 1"));
    }
    Ok(())
}

/// Negativity behind a 50:50 splitter:
/// `max{0, -log2 sqrt((2n + 1)(1 - 2 tau))}`, independent of purity.
pub fn negativity_5050(tau: f64, nbar: f64) -> Result<f64> {
    check_tau(tau)?;
    check_nbar(nbar)?;
    Ok((-0.5 * ((2.0 * nbar + 1.0) * (1.0 - 2.0 * tau)).log2()).max(0.0))
}

/// `tau / (1 - 2 tau)`: thermal noise at which a 50:50 splitter stops
/// producing entanglement.
pub fn critical_noise_5050(tau: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(tau / (1.0 - 2.0 * tau))
}

/// How the critical noise was classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    /// Entangled for `nbar < nbar_c`, separable above.
    Finite,
    /// `tau = 0`: a classical input never yields entanglement.
    ClassicalInput,
    /// `sin 2 theta = 0`: no mixing, the output is a product state.
    NoMixing,
    /// Threshold beyond [`NOISE_BRACKET`]; entanglement survives any
    /// practical noise level. `nbar_c` is `+inf`.
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalNoise {
    pub nbar_c: f64,
    pub kind: Threshold,
}

impl CriticalNoise {
    pub fn never_entangled(&self) -> bool {
        matches!(self.kind, Threshold::ClassicalInput | Threshold::NoMixing)
    }
}

/// Coefficients of `2S - 1 - (2n + 1)^2 / u^2 = q2 n^2 + q1 n + q0`.
/// The output is entangled exactly where this is positive.
fn threshold_quadratic(tau: f64, u: f64, theta: f64) -> (f64, f64, f64) {
    let k = squeeze_weight(tau, u);
    let c4 = (4.0 * theta).cos();
    let inv_u2 = 1.0 / (u * u);
    let q2 = 2.0 * (1.0 + c4) - 4.0 * inv_u2;
    let q1 = k + 3.0 - 2.0 * tau - c4 * (k - 1.0 - 2.0 * tau) - 4.0 * inv_u2;
    let q0 = (1.0 - tau) * (k + 1.0) - c4 * tau * (k - 1.0) - 1.0 - inv_u2;
    (q2, q1, q0)
}

fn entanglement_margin(tau: f64, u: f64, theta: f64, nbar: f64) -> f64 {
    let (q2, q1, q0) = threshold_quadratic(tau, u, theta);
    (q2 * nbar + q1) * nbar + q0
}

/// Critical thermal photon number for arbitrary `theta`, from the condition
/// `2S = 1 + (2n + 1)^2 / u^2`.
///
/// The analytic root of the quadratic is accepted only if the negativity is
/// positive just below it and zero just above; otherwise the threshold is
/// bracketed on `[0, NOISE_BRACKET]` and bisected.
pub fn critical_noise(tau: f64, u: f64, theta: f64) -> Result<CriticalNoise> {
    check_tau(tau)?;
    check_u(u)?;
    if !theta.is_finite() {
        return Err(domain("theta", theta, "finite"));
    }
    if tau == 0.0 {
        return Ok(CriticalNoise {
            nbar_c: 0.0,
            kind: Threshold::ClassicalInput,
        });
    }
    if no_mixing(theta) {
        return Ok(CriticalNoise {
            nbar_c: 0.0,
            kind: Threshold::NoMixing,
        });
    }

    let (q2, q1, q0) = threshold_quadratic(tau, u, theta);
    let analytic = positive_root(q2, q1, q0);
    let finite = |nbar_c: f64| {
        if nbar_c > NOISE_BRACKET {
            CriticalNoise {
                nbar_c: f64::INFINITY,
                kind: Threshold::Unbounded,
            }
        } else {
            CriticalNoise {
                nbar_c,
                kind: Threshold::Finite,
            }
        }
    };
    if let Some(root) = analytic {
        if root_is_threshold(tau, u, theta, root) {
            return Ok(finite(root));
        }
    }

    let margin = |n: f64| entanglement_margin(tau, u, theta, n);
    if margin(NOISE_BRACKET) > 0.0 {
        return Ok(finite(f64::INFINITY));
    }
    let root = bisect(margin, 0.0, NOISE_BRACKET, NOISE_TOL)?;
    Ok(finite(root))
}

/// Positive root of `q2 x^2 + q1 x + q0` for `q2 <= 0 < q0`.
fn positive_root(q2: f64, q1: f64, q0: f64) -> Option<f64> {
    if q0 <= 0.0 {
        return None;
    }
    if q2 == 0.0 {
        return (q1 < 0.0).then(|| -q0 / q1);
    }
    let disc = q1 * q1 - 4.0 * q2 * q0;
    if disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    let x = if q1 >= 0.0 {
        (q1 + root) / (-2.0 * q2)
    } else {
        2.0 * q0 / (root - q1)
    };
    (x.is_finite() && x >= 0.0).then_some(x)
}

fn root_is_threshold(tau: f64, u: f64, theta: f64, root: f64) -> bool {
    let step = 1e-7 * root.max(1.0);
    let at = |n: f64| {
        ScenarioParams::new(tau, u, 0.0, n, theta, 0.0).map(|p| negativity_closed_form(&p))
    };
    let below = if root > step {
        at(root - step)
    } else {
        Ok(1.0)
    };
    matches!((below, at(root + step)), (Ok(b), Ok(a)) if b > 0.0 && a == 0.0)
}

/// Beam-splitter angle `(pi + delta) / 4` for a fractional transmittance
/// error `e = delta / 2`.
pub fn theta_for_error(e: f64) -> f64 {
    FRAC_PI_4 + 0.5 * e
}

/// Second-order expansion of the critical noise around the 50:50 splitter,
///
/// `nbar_c ~ tau/(1-2tau) (1 - 2 e^2 (1-tau)(1-u^2) / (1 - u^2 (1-2tau)^2))`,
///
/// for an angle [`theta_for_error`]`(e)`. Reliable for
/// `|e| <=` [`NEAR_OPTIMAL_VALIDITY`]; the error against [`critical_noise`]
/// falls off as `e^4`.
pub fn critical_noise_near_optimal(tau: f64, u: f64, e: f64) -> Result<f64> {
    check_tau(tau)?;
    check_u(u)?;
    let base = critical_noise_5050(tau)?;
    let mixed = 1.0 - u * u;
    if mixed == 0.0 || tau == 0.0 {
        return Ok(base);
    }
    let s = 1.0 - 2.0 * tau;
    let correction = 2.0 * e * e * (1.0 - tau) * mixed / (1.0 - u * u * s * s);
    Ok(base * (1.0 - correction))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleDiagnosis {
    /// `S- > 0`: the 50:50 splitter maximizes the negativity.
    Entangling,
    /// `S- <= 0`: `S` peaks at `theta = 0` and no angle entangles.
    NoEntanglement,
}

/// Optimal beam-splitter angle together with the extremal values of `S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalAngle {
    pub theta: f64,
    pub diagnosis: AngleDiagnosis,
    /// `S` at `theta = 0`: `1/(2u^2) + (2n+1)^2/2`.
    pub s_zero: f64,
    /// `S` at `theta = pi/4`: `(2n+1)/2 (1/(u^2(1-2tau)) + 1 - 2tau)`.
    pub s_balanced: f64,
    pub s_minus: f64,
}

/// `S` is extremal at `theta = 0` and `pi/4`; which one is the maximum is
/// decided by the sign of `S-`.
pub fn optimal_angle(tau: f64, u: f64, nbar: f64) -> Result<OptimalAngle> {
    check_tau(tau)?;
    check_u(u)?;
    check_nbar(nbar)?;
    let w = 2.0 * nbar + 1.0;
    let k = squeeze_weight(tau, u);
    let s_minus = k - w;
    let s_zero = 0.5 / (u * u) + 0.5 * w * w;
    let s_balanced = 0.5 * w * (k + 1.0 - 2.0 * tau);
    let (theta, diagnosis) = if s_minus > 0.0 {
        (FRAC_PI_4, AngleDiagnosis::Entangling)
    } else {
        (0.0, AngleDiagnosis::NoEntanglement)
    };
    Ok(OptimalAngle {
        theta,
        diagnosis,
        s_zero,
        s_balanced,
        s_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::CovMat1M;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn scenario(tau: f64, u: f64, nbar: f64, theta: f64) -> ScenarioParams {
        ScenarioParams::new(tau, u, 0.0, nbar, theta, 0.0).unwrap()
    }

    #[test]
    fn unmixed_output_is_exactly_separable() {
        for theta in [0.0, FRAC_PI_2, PI] {
            assert_eq!(negativity_closed_form(&scenario(0.2, 1.0, 0.4, theta)), 0.0);
        }
    }

    #[test]
    fn two_mode_vacuum_spectrum() {
        let v = CovMat2M::product(&CovMat1M::vacuum(), &CovMat1M::vacuum());
        let sp = pt_symplectic_spectrum(&v).unwrap();
        assert_abs_diff_eq!(sp.xi_minus, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(sp.xi_plus, 0.5, epsilon = 1e-15);
        assert_eq!(log_negativity(&v).unwrap(), 0.0);
    }

    #[test]
    fn vacuum_thermal_product_spectrum() {
        let th = ThermalParams::new(1.0).unwrap().covariance();
        let v = CovMat2M::product(&CovMat1M::vacuum(), &th);
        let sp = pt_symplectic_spectrum(&v).unwrap();
        assert_abs_diff_eq!(sp.xi_minus, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(sp.xi_plus, 1.5, epsilon = 1e-14);
        let q = pt_symplectic_spectrum_quadrature(&v).unwrap();
        assert_abs_diff_eq!(q.xi_plus, 1.5, epsilon = 1e-12);
    }

    #[test]
    fn quarter_depth_balanced_pure() {
        // 2 xi_- = sqrt(1 - 2 tau) = sqrt(0.5), N = 1/2
        let p = scenario(0.25, 1.0, 0.0, FRAC_PI_4);
        let sp = pt_symplectic_spectrum(&p.output_covariance()).unwrap();
        assert_abs_diff_eq!(2.0 * sp.xi_minus, 0.5f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(sp.log_negativity(), 0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(negativity_closed_form(&p), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(negativity_5050(0.25, 0.0).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn both_spectrum_routes_agree() {
        let p = ScenarioParams::new(0.33, 0.6, 1.2, 0.4, 0.5, 2.2).unwrap();
        let v = p.output_covariance();
        let a = pt_symplectic_spectrum(&v).unwrap();
        let b = pt_symplectic_spectrum_quadrature(&v).unwrap();
        assert_abs_diff_eq!(a.xi_minus, b.xi_minus, epsilon = 1e-11);
        assert_abs_diff_eq!(a.xi_plus, b.xi_plus, epsilon = 1e-11);
        assert_abs_diff_eq!((a.xi_minus * a.xi_plus).powi(2), v.det(), epsilon = 1e-12);
    }

    #[test]
    fn pure_state_threshold_point_is_separable() {
        let p = scenario(0.3, 1.0, 0.75, PI / 12.0);
        assert!(log_negativity(&p.output_covariance()).unwrap() < 1e-12);
        assert_eq!(negativity_closed_form(&p), 0.0);
    }

    #[test]
    fn classical_and_unmixed_give_zero() {
        for &(tau, theta) in &[(0.0, 0.7), (0.3, 0.0), (0.3, FRAC_PI_2)] {
            let p = scenario(tau, 0.6, 0.2, theta);
            assert_eq!(negativity_closed_form(&p), 0.0);
        }
    }

    #[test]
    fn balanced_threshold_formula() {
        assert_eq!(critical_noise_5050(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(critical_noise_5050(0.3).unwrap(), 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(critical_noise_5050(0.45).unwrap(), 4.5, epsilon = 1e-13);
        assert!(critical_noise_5050(0.5).is_err());
        for &tau in &[0.05, 0.2, 0.45] {
            let nc = critical_noise_5050(tau).unwrap();
            assert!(negativity_5050(tau, nc).unwrap() < 1e-15);
        }
        assert_eq!(negativity_5050(0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn balanced_threshold_matches_bisection_on_pipeline() {
        let pipeline = |n: f64| {
            let p = scenario(0.45, 0.7, n, FRAC_PI_4);
            // positive while entangled
            0.5 - pt_symplectic_spectrum(&p.output_covariance())
                .unwrap()
                .xi_minus
        };
        let n = bisect(pipeline, 0.0, 10.0, 1e-12).unwrap();
        assert_abs_diff_eq!(n, 4.5, epsilon = 1e-9);
    }

    #[test]
    fn critical_noise_reference_points() {
        let c = critical_noise(0.3, 1.0, PI / 12.0).unwrap();
        assert_eq!(c.kind, Threshold::Finite);
        assert_abs_diff_eq!(c.nbar_c, 0.75, epsilon = 1e-12);
        let c = critical_noise(0.4, 0.2, PI / 12.0).unwrap();
        assert!((c.nbar_c - 0.36).abs() < 0.005, "got {}", c.nbar_c);
        let c = critical_noise(0.3, 1.0, PI / 3.0).unwrap();
        assert_abs_diff_eq!(c.nbar_c, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn critical_noise_flags() {
        let c = critical_noise(0.0, 0.5, FRAC_PI_4).unwrap();
        assert_eq!((c.nbar_c, c.kind), (0.0, Threshold::ClassicalInput));
        let c = critical_noise(0.3, 0.5, 0.0).unwrap();
        assert_eq!((c.nbar_c, c.kind), (0.0, Threshold::NoMixing));
        assert!(c.never_entangled());
        let c = critical_noise(0.3, 0.5, FRAC_PI_2).unwrap();
        assert_eq!(c.kind, Threshold::NoMixing);
        let c = critical_noise(0.4999, 1.0, FRAC_PI_4).unwrap();
        assert_eq!(c.kind, Threshold::Unbounded);
        assert!(c.nbar_c.is_infinite());
        assert!(critical_noise(0.6, 1.0, 0.3).is_err());
        assert!(critical_noise(0.3, 0.0, 0.3).is_err());
    }

    #[test]
    fn quadratic_root_selection() {
        assert_eq!(positive_root(-1.0, 0.0, 4.0), Some(2.0));
        assert_eq!(positive_root(-1.0, -3.0, 4.0), Some(1.0));
        assert_eq!(positive_root(0.0, -2.0, 4.0), Some(2.0));
        assert_eq!(positive_root(-1.0, 1.0, -1.0), None);
    }

    #[test]
    fn near_optimal_reductions() {
        assert_abs_diff_eq!(
            critical_noise_near_optimal(0.3, 0.4, 0.0).unwrap(),
            0.75,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            critical_noise_near_optimal(0.3, 1.0, 0.15).unwrap(),
            0.75,
            epsilon = 1e-15
        );
        let approx = critical_noise_near_optimal(0.4, 0.5, 0.1).unwrap();
        let exact = critical_noise(0.4, 0.5, theta_for_error(0.1))
            .unwrap()
            .nbar_c;
        assert!(((approx - exact) / exact).abs() < 0.01);
    }

    #[test]
    fn near_optimal_validity_range() {
        for &tau in &[0.05, 0.2, 0.35, 0.45] {
            for &u in &[0.1, 0.4, 0.7, 0.95] {
                let e = NEAR_OPTIMAL_VALIDITY;
                let approx = critical_noise_near_optimal(tau, u, e).unwrap();
                let exact = critical_noise(tau, u, theta_for_error(e)).unwrap().nbar_c;
                assert!(((approx - exact) / exact).abs() <= 0.05);
            }
        }
    }

    #[test]
    fn optimal_angle_cases() {
        let o = optimal_angle(0.3, 1.0, 0.0).unwrap();
        assert_eq!(o.diagnosis, AngleDiagnosis::Entangling);
        assert_eq!(o.theta, FRAC_PI_4);
        assert_abs_diff_eq!(o.s_minus, 1.0 / 0.4 - 1.0, epsilon = 1e-14);

        let o = optimal_angle(0.0, 1.0, 0.0).unwrap();
        assert_eq!(o.diagnosis, AngleDiagnosis::NoEntanglement);
        assert_eq!(o.theta, 0.0);

        // 1/(u^2 (1-2tau)) = 125 against 2n+1 = 101
        let o = optimal_angle(0.4, 0.2, 50.0).unwrap();
        assert_eq!(o.diagnosis, AngleDiagnosis::Entangling);
        // 125 against 141
        let o = optimal_angle(0.4, 0.2, 70.0).unwrap();
        assert_eq!(o.diagnosis, AngleDiagnosis::NoEntanglement);
        assert_eq!(o.theta, 0.0);
    }

    #[test]
    fn extremal_s_values_match_closed_form() {
        let (tau, u, n) = (0.35, 0.45, 0.8);
        let o = optimal_angle(tau, u, n).unwrap();
        let at = |theta| scenario(tau, u, n, theta).closed_form_terms().s;
        assert_abs_diff_eq!(o.s_zero, at(0.0), epsilon = 1e-12);
        assert_abs_diff_eq!(o.s_balanced, at(FRAC_PI_4), epsilon = 1e-12);
    }
}
