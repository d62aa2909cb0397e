//! Evaluation behind each subcommand. Every function returns records ready
//! for [`crate::record::render`].

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use bsent::entanglement::{
    critical_noise, negativity_closed_form, optimal_angle, pt_symplectic_spectrum, AngleDiagnosis,
    ScenarioParams, Threshold,
};
use bsent::fock::{oracle_check_point, OracleConfig, OracleOutcome};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::grid::{Axis, Fixed, Param, Point, SweepGrid};
use crate::record::{Record, Value};

pub const SCENARIO: [Param; 4] = [Param::Tau, Param::U, Param::Nbar, Param::Theta];
pub const THRESHOLD: [Param; 3] = [Param::Tau, Param::U, Param::Theta];

fn push_params(r: &mut Record, pt: &Point) {
    for p in Param::ALL {
        r.num(p.name(), pt.get(p));
    }
}

fn push_critical(r: &mut Record, tau: f64, u: f64, theta: f64) -> CliResult<()> {
    let c = critical_noise(tau, u, theta)?;
    r.num("nbar_c", c.nbar_c)
        .push("never_entangled", Value::Bool(c.never_entangled()))
        .push(
            "infinite_threshold",
            Value::Bool(c.kind == Threshold::Unbounded),
        );
    Ok(())
}

/// Full report for one scenario.
pub fn negativity(pt: &Point) -> CliResult<Record> {
    let p = pt.scenario()?;
    let out = p.output_covariance();
    let spectrum = pt_symplectic_spectrum(&out)?;
    let terms = p.closed_form_terms();
    let best = optimal_angle(p.tau(), p.u(), p.nbar())?;
    let mut r = Record::new();
    push_params(&mut r, pt);
    r.num("N", negativity_closed_form(&p))
        .num("xi_minus", spectrum.xi_minus)
        .num("xi_plus", spectrum.xi_plus)
        .num("det_v_out", out.det())
        .num("S", terms.s)
        .num("S_plus", terms.s_plus)
        .num("S_minus", terms.s_minus)
        .num("optimal_theta", best.theta)
        .push(
            "diagnosis",
            Value::Text(
                match best.diagnosis {
                    AngleDiagnosis::Entangling => "entangling",
                    AngleDiagnosis::NoEntanglement => "no entanglement achievable",
                }
                .into(),
            ),
        );
    Ok(r)
}

fn sweep_record(pt: &Point, p: &ScenarioParams, critical: bool) -> CliResult<Record> {
    let spectrum = pt_symplectic_spectrum(&p.output_covariance())?;
    let mut r = Record::new();
    push_params(&mut r, pt);
    r.num("N", negativity_closed_form(p))
        .num("xi_minus", spectrum.xi_minus);
    if critical {
        push_critical(&mut r, p.tau(), p.u(), p.theta())?;
    }
    Ok(r)
}

/// One record per grid point, row-major. All points are validated before
/// any is evaluated.
pub fn sweep(grid: &SweepGrid, critical: bool) -> CliResult<Vec<Record>> {
    let points = grid.points(&SCENARIO)?;
    let params = points
        .iter()
        .map(Point::scenario)
        .collect::<CliResult<Vec<_>>>()?;
    points
        .par_iter()
        .zip(params.par_iter())
        .map(|(pt, p)| sweep_record(pt, p, critical))
        .collect()
}

/// Critical noise over a grid of `(tau, u, theta)`; `nbar` is ignored.
pub fn critical(grid: &SweepGrid) -> CliResult<Vec<Record>> {
    if grid.axes.iter().any(|a| a.param == Param::Nbar) {
        return Err(CliError::Invalid("critical noise cannot sweep nbar".into()));
    }
    grid.points(&THRESHOLD)?
        .par_iter()
        .map(|pt| {
            let mut r = Record::new();
            for p in THRESHOLD {
                r.num(p.name(), pt.get(p));
            }
            push_critical(
                &mut r,
                pt.get(Param::Tau),
                pt.get(Param::U),
                pt.get(Param::Theta),
            )?;
            Ok(r)
        })
        .collect()
}

/// Grid of the oracle acceptance check: `tau in {0.1, 0.2, 0.3}`,
/// `u in {0.5, 1}`, `nbar in {0, 0.5, 1}`, `theta in {pi/8, pi/4}`.
pub fn default_oracle_axes() -> Vec<Axis> {
    let list = |p, v: &[f64]| Axis::list(p, v.to_vec()).expect("static axis");
    vec![
        list(Param::Tau, &[0.1, 0.2, 0.3]),
        list(Param::U, &[0.5, 1.0]),
        list(Param::Nbar, &[0.0, 0.5, 1.0]),
        list(Param::Theta, &[FRAC_PI_8, FRAC_PI_4]),
    ]
}

/// Oracle grid: the default axes, each replaced by a user axis of the same
/// parameter, plus extra user axes. A parameter given a fixed value drops
/// the corresponding default axis.
pub fn oracle_grid(user_axes: Vec<Axis>, fixed: Fixed) -> CliResult<SweepGrid> {
    let mut axes: Vec<Axis> = default_oracle_axes()
        .into_iter()
        .filter(|a| fixed.get(a.param).is_none())
        .map(|a| {
            user_axes
                .iter()
                .find(|b| b.param == a.param)
                .cloned()
                .unwrap_or(a)
        })
        .collect();
    for b in user_axes {
        if !axes.iter().any(|a| a.param == b.param) {
            axes.push(b);
        }
    }
    SweepGrid::new(axes, fixed)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub compared: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn oracle_check(
    grid: &SweepGrid,
    cfg: &OracleConfig,
    max_dim: usize,
) -> CliResult<(Vec<Record>, OracleSummary)> {
    cfg.validate()?;
    if max_dim < cfg.dim {
        return Err(CliError::Invalid(format!(
            "max-dim {max_dim} is below dim {}",
            cfg.dim
        )));
    }
    let points = grid.points(&SCENARIO)?;
    let params = points
        .iter()
        .map(Point::scenario)
        .collect::<CliResult<Vec<_>>>()?;
    let outcomes = params
        .par_iter()
        .map(|p| oracle_check_point(p, cfg, max_dim))
        .collect::<bsent::Result<Vec<_>>>()?;

    let mut summary = OracleSummary::default();
    let mut records = Vec::with_capacity(points.len());
    for (pt, outcome) in points.iter().zip(outcomes) {
        let mut r = Record::new();
        push_params(&mut r, pt);
        match outcome {
            OracleOutcome::Compared(rep) => {
                summary.compared += 1;
                summary.failed += usize::from(!rep.passed);
                r.push("status", Value::Text("compared".into()))
                    .push("dim", Value::Int(rep.dim as u64))
                    .num("n_gaussian", rep.n_gaussian)
                    .num("n_fock", rep.n_fock)
                    .num("difference", rep.difference())
                    .num("leakage", rep.leakage)
                    .push("passed", Value::Bool(rep.passed))
                    .push("reason", Value::Null);
            }
            OracleOutcome::Skipped { reason, last_dim } => {
                summary.skipped += 1;
                r.push("status", Value::Text("skipped".into()))
                    .push("dim", Value::Int(last_dim as u64))
                    .push("n_gaussian", Value::Null)
                    .push("n_fock", Value::Null)
                    .push("difference", Value::Null)
                    .push("leakage", Value::Null)
                    .push("passed", Value::Null)
                    .push("reason", Value::Text(reason));
            }
        }
        records.push(r);
    }
    Ok((records, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(pairs: &[(Param, f64)]) -> Fixed {
        let mut f = Fixed::default();
        for &(p, v) in pairs {
            f.set(p, v);
        }
        f
    }

    #[test]
    fn oracle_grid_merges_user_axes() {
        let g = oracle_grid(vec![], Fixed::default()).unwrap();
        assert_eq!(g.len(), 36);
        let g = oracle_grid(
            vec![Axis::list(Param::Tau, vec![0.0]).unwrap()],
            fixed(&[(Param::Nbar, 0.5)]),
        )
        .unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.axes[0].values, [0.0]);
    }

    #[test]
    fn sweep_rejects_bad_points_up_front() {
        let g = SweepGrid::new(
            vec![Axis::list(Param::Tau, vec![0.1, 0.6]).unwrap()],
            fixed(&[(Param::U, 1.0), (Param::Nbar, 0.0), (Param::Theta, 0.3)]),
        )
        .unwrap();
        let err = sweep(&g, false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("tau"));
    }

    #[test]
    fn critical_rejects_noise_axis() {
        let g = SweepGrid::new(
            vec![Axis::list(Param::Nbar, vec![0.0]).unwrap()],
            fixed(&[(Param::Tau, 0.1), (Param::U, 1.0), (Param::Theta, 0.3)]),
        )
        .unwrap();
        assert!(critical(&g).is_err());
    }
}
