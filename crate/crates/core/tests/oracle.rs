use std::f64::consts::{FRAC_PI_4, PI};

use bsent::entanglement::{negativity_closed_form, ScenarioParams};
use bsent::fock::{
    fock_beam_splitter, fock_log_negativity, fock_squeezed_thermal, fock_thermal,
    oracle_check_point, OracleConfig, OracleOutcome, OracleReport,
};
use bsent::gaussian::GaussianSpec;

fn compared(out: OracleOutcome) -> OracleReport {
    match out {
        OracleOutcome::Compared(r) => r,
        other => panic!("expected a comparison, got {other:?}"),
    }
}

#[test]
fn fock_moments_match_covariance() {
    let cfg = OracleConfig::default().with_dim(100);
    for tau in [0.1, 0.2, 0.3] {
        for u in [0.5, 1.0] {
            for phi_b in [0.0, 1.2] {
                let spec = GaussianSpec::new(tau, u, phi_b).unwrap();
                let v = fock_squeezed_thermal(&spec, &cfg)
                    .unwrap()
                    .covariance_1m()
                    .unwrap();
                let target = spec.covariance();
                assert!((v.a() - target.a()).abs() < 1e-6, "{tau} {u} {phi_b}");
                assert!((v.b() - target.b()).norm() < 1e-6, "{tau} {u} {phi_b}");
            }
        }
    }
}

#[test]
fn squeezed_vacuum_at_balanced_splitter() {
    let p = ScenarioParams::new(0.25, 1.0, 0.0, 0.0, FRAC_PI_4, 0.0).unwrap();
    let r = compared(oracle_check_point(&p, &OracleConfig::default().with_dim(30), 30).unwrap());
    assert!((r.n_fock - 0.5).abs() <= 1e-3, "{r:?}");
    assert!(r.passed);
}

#[test]
fn pure_input_at_its_critical_noise() {
    let p = ScenarioParams::new(0.3, 1.0, 0.0, 0.75, PI / 12.0, 0.0).unwrap();
    let r = compared(oracle_check_point(&p, &OracleConfig::default(), 40).unwrap());
    assert_eq!(r.dim, 40);
    assert!(r.n_fock <= 1e-3, "{r:?}");
    assert_eq!(negativity_closed_form(&p), 0.0);
}

#[test]
fn classical_input_gives_zero_on_both_sides() {
    for (u, nbar, theta) in [(1.0, 0.0, FRAC_PI_4), (0.4, 1.0, 0.3)] {
        let p = ScenarioParams::new(0.0, u, 0.7, nbar, theta, 2.0).unwrap();
        let r =
            compared(oracle_check_point(&p, &OracleConfig::default().with_dim(20), 40).unwrap());
        assert_eq!(r.n_gaussian, 0.0);
        assert!(r.n_fock < 1e-9, "{r:?}");
    }
}

#[test]
fn cutoff_escalates_until_inputs_fit() {
    // r = 0.8: the squeezed vacuum does not fit 39 levels to 1e-8
    let p = ScenarioParams::new(0.4, 1.0, 0.0, 0.0, FRAC_PI_4, 0.0).unwrap();
    let r = compared(oracle_check_point(&p, &OracleConfig::default().with_dim(20), 60).unwrap());
    assert!(r.dim > 20);
    assert!(r.passed, "{r:?}");
}

#[test]
fn tiny_cutoff_without_headroom_is_skipped() {
    let p = ScenarioParams::new(0.3, 1.0, 0.0, 0.5, FRAC_PI_4, 0.0).unwrap();
    match oracle_check_point(&p, &OracleConfig::default().with_dim(4), 4).unwrap() {
        OracleOutcome::Skipped { reason, last_dim } => {
            assert_eq!(last_dim, 4);
            assert!(
                reason.contains("leak") || reason.contains("trunc"),
                "{reason}"
            );
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn splitter_output_accounts_for_all_probability() {
    let (dim, wide) = (20, 39);
    let cfg = OracleConfig::default().with_dim(dim);
    let wide_cfg = cfg.with_dim(wide);
    let a = fock_squeezed_thermal(&GaussianSpec::new(0.2, 0.7, 0.4).unwrap(), &wide_cfg).unwrap();
    let b = fock_thermal(0.5, &wide_cfg).unwrap();
    let out = fock_beam_splitter(
        &a,
        &b,
        &bsent::gaussian::BeamSplitter::new(0.5, 0.3).unwrap(),
        &cfg,
    )
    .unwrap();
    // inputs are exact to 1e-8, so what is missing from the output left the box
    let missing = 1.0 - out.trace();
    assert!((out.leakage() - missing.max(0.0)).abs() < 1e-15);
    assert!(missing > 0.0 && missing < 1e-2);
    assert!(out.min_eigenvalue() > -1e-10);
    let n = fock_log_negativity(&out).unwrap();
    assert!(n.trace_norm >= n.trace - 1e-12);
}
