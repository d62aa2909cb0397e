use super::{fock_beam_splitter, fock_log_negativity, fock_squeezed_thermal, fock_thermal};
use super::{FockDensityMatrix, OracleConfig};
use crate::entanglement::{log_negativity, ScenarioParams};
use crate::error::{Error, Result};

/// Cutoff beyond which escalation gives up.
pub const MAX_ORACLE_DIM: usize = 120;
const DIM_STEP: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub n_gaussian: f64,
    pub n_fock: f64,
    /// Unclamped Fock value, see [`super::FockNegativity::raw`].
    pub n_fock_raw: f64,
    /// Probability outside the output cutoff, `1 - tr(rho_out)`.
    pub leakage: f64,
    /// Cutoff actually used after escalation.
    pub dim: usize,
    pub passed: bool,
}

impl OracleReport {
    pub fn difference(&self) -> f64 {
        (self.n_gaussian - self.n_fock).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleOutcome {
    Compared(OracleReport),
    Skipped { reason: String, last_dim: usize },
}

/// Inputs are built with `2 dim - 1` levels so that every output block
/// inside the cutoff receives its complete input support.
fn fock_output(p: &ScenarioParams, cfg: &OracleConfig) -> Result<FockDensityMatrix> {
    let wide = cfg.with_dim(2 * cfg.dim - 1);
    let squeezed = fock_squeezed_thermal(&p.spec, &wide)?;
    let thermal = fock_thermal(p.nbar(), &wide)?;
    fock_beam_splitter(&squeezed, &thermal, &p.bs, cfg)
}

/// Compares the Gaussian negativity of one scenario with the Fock oracle.
/// The inputs must fit their `2 dim - 1` levels to within `cfg.tol_trace`;
/// on truncation errors the cutoff grows in steps of 20 up to `max_dim`, and
/// if that is not enough the point is skipped with the last error as reason.
pub fn oracle_check_point(
    p: &ScenarioParams,
    cfg: &OracleConfig,
    max_dim: usize,
) -> Result<OracleOutcome> {
    cfg.validate()?;
    let n_gaussian = log_negativity(&p.output_covariance())?;
    let mut dim = cfg.dim;
    loop {
        let trial = cfg.with_dim(dim);
        match fock_output(p, &trial) {
            Ok(out) => {
                let neg = fock_log_negativity(&out)?;
                let report = OracleReport {
                    n_gaussian,
                    n_fock: neg.value,
                    n_fock_raw: neg.raw,
                    leakage: (1.0 - out.trace()).max(0.0),
                    dim,
                    passed: (n_gaussian - neg.value).abs() <= cfg.tol_compare,
                };
                return Ok(OracleOutcome::Compared(report));
            }
            Err(e @ Error::Truncation { .. }) => {
                if dim >= max_dim {
                    return Ok(OracleOutcome::Skipped {
                        reason: format!(
                            "output cutoff {dim}, inputs at {} levels: {e}",
                            2 * dim - 1
                        ),
                        last_dim: dim,
                    });
                }
                dim = (dim + DIM_STEP).min(max_dim);
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_point_agrees_at_zero() {
        let p = ScenarioParams::new(0.0, 0.8, 0.0, 0.5, 0.6, 0.0).unwrap();
        let cfg = OracleConfig::default().with_dim(20);
        match oracle_check_point(&p, &cfg, 40).unwrap() {
            OracleOutcome::Compared(r) => {
                assert_eq!(r.n_gaussian, 0.0);
                assert!(r.n_fock < 1e-9);
                assert!(r.passed);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tiny_cutoff_is_skipped_without_headroom() {
        let p = ScenarioParams::new(0.3, 1.0, 0.0, 0.0, 0.5, 0.0).unwrap();
        let cfg = OracleConfig::default().with_dim(4);
        let out = oracle_check_point(&p, &cfg, 4).unwrap();
        assert!(matches!(out, OracleOutcome::Skipped { last_dim: 4, .. }));
    }
}
