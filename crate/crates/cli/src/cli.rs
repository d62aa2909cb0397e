use std::io::Write;
use std::path::PathBuf;

use bsent::fock::{OracleConfig, MAX_ORACLE_DIM};
use clap::{Args, Parser, Subcommand};

use crate::commands::{self, OracleSummary};
use crate::config::Config;
use crate::error::{CliError, CliResult};
use crate::grid::{Axis, Fixed, Param, SweepGrid};
use crate::presets::{Figure, DEFAULT_RESOLUTION};
use crate::record::{render, Format, Record};

/// Entanglement of a nonclassical Gaussian state mixed with thermal noise
/// on a beam splitter.
#[derive(Debug, Parser)]
#[command(name = "bsent", version)]
pub struct Cli {
    /// Write results here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Output format [default: csv]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// `key = value` file; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Points on the first swept axis [default: 101 for figure presets]
    #[arg(long, global = true)]
    pub nx: Option<usize>,

    /// Points on the second swept axis [default: 101 for figure presets]
    #[arg(long, global = true)]
    pub ny: Option<usize>,

    /// Read angles (theta, phi, phi_b) in degrees. Output stays in radians.
    #[arg(long, global = true)]
    pub degrees: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Nonclassical depth, 0 <= tau < 1/2.
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,
    /// Purity, 0 < u <= 1.
    #[arg(long, allow_negative_numbers = true)]
    pub u: Option<f64>,
    /// Thermal photon number of the second input.
    #[arg(long, allow_negative_numbers = true)]
    pub nbar: Option<f64>,
    /// Beam-splitter angle; transmittance is cos^2(theta).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Beam-splitter phase [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Squeezing-axis phase of the nonclassical input [default: 0]
    #[arg(long = "phi-b", allow_negative_numbers = true)]
    pub phi_b: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Negativity, partial-transpose spectrum and optimal angle at one point.
    Negativity(ParamArgs),

    /// Negativity over a parameter grid.
    Sweep {
        #[command(flatten)]
        params: ParamArgs,
        /// Figure preset: 1a, 1b, 1c, 2a, 2b or 3.
        #[arg(long)]
        fig: Option<String>,
        /// Swept axis, `name=start:stop:count` or `name=v1,v2,...`; repeatable.
        /// The first axis varies slowest.
        #[arg(long = "axis", value_name = "AXIS")]
        axes: Vec<String>,
        /// Add critical-noise columns.
        #[arg(long)]
        critical: bool,
    },

    /// Critical thermal noise at a point or over a `(tau, u, theta)` grid.
    Critical {
        #[command(flatten)]
        params: ParamArgs,
        /// Swept axis over tau, u or theta; same syntax as `sweep --axis`.
        #[arg(long = "axis", value_name = "AXIS")]
        axes: Vec<String>,
    },

    /// Compare the Gaussian negativity with a truncated Fock-space
    /// calculation.
    OracleCheck {
        #[command(flatten)]
        params: ParamArgs,
        /// Replaces the default axis of the same parameter, or adds one.
        #[arg(long = "axis", value_name = "AXIS")]
        axes: Vec<String>,
        /// Fock levels per mode [default: 40]
        #[arg(long)]
        dim: Option<usize>,
        /// Escalation limit for the cutoff [default: 120]
        #[arg(long)]
        max_dim: Option<usize>,
        /// Largest probability the inputs may lose to truncation [default: 1e-8]
        #[arg(long)]
        tol_trace: Option<f64>,
        /// Required agreement of the two negativities [default: 1e-3]
        #[arg(long)]
        tol_compare: Option<f64>,
    },
}

struct Settings {
    config: Config,
    degrees: bool,
    format: Format,
    output: Option<PathBuf>,
    nx: Option<usize>,
    ny: Option<usize>,
}

impl Settings {
    fn new(cli: &Cli) -> CliResult<Self> {
        let config = match &cli.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let format = match (cli.format, config.raw("format")) {
            (Some(f), _) => f,
            (None, Some("csv")) | (None, None) => Format::Csv,
            (None, Some("jsonl")) => Format::Jsonl,
            (None, Some(other)) => {
                return Err(CliError::Invalid(format!(
                    "config: unknown format '{other}'"
                )))
            }
        };
        Ok(Self {
            degrees: cli.degrees || config.get("degrees")?.unwrap_or(false),
            format,
            output: cli.output.clone().or(config.get("output")?),
            nx: cli.nx.or(config.get("nx")?),
            ny: cli.ny.or(config.get("ny")?),
            config,
        })
    }

    fn scale(&self, p: Param) -> f64 {
        if self.degrees && p.is_angle() {
            std::f64::consts::PI / 180.0
        } else {
            1.0
        }
    }

    fn flag_values(&self, a: &ParamArgs) -> Fixed {
        let mut f = Fixed::default();
        let vals = [a.tau, a.u, a.nbar, a.theta, a.phi, a.phi_b];
        for (p, v) in Param::ALL.into_iter().zip(vals) {
            if let Some(v) = v {
                f.set(p, v * self.scale(p));
            }
        }
        f
    }

    fn config_values(&self) -> CliResult<Fixed> {
        let mut f = Fixed::default();
        for p in Param::ALL {
            if let Some(v) = self.config.get::<f64>(p.name())? {
                f.set(p, v * self.scale(p));
            }
        }
        Ok(f)
    }

    fn fixed(&self, a: &ParamArgs) -> CliResult<Fixed> {
        Ok(self.flag_values(a).or(&self.config_values()?))
    }

    fn axes(&self, specs: &[String]) -> CliResult<Vec<Axis>> {
        let mut axes = specs
            .iter()
            .map(|s| Axis::parse(s, self.degrees))
            .collect::<CliResult<Vec<_>>>()?;
        for (i, n) in [self.nx, self.ny].into_iter().enumerate() {
            if let (Some(n), Some(a)) = (n, axes.get_mut(i)) {
                *a = a.clone().with_count(n)?;
            }
        }
        Ok(axes)
    }

    fn emit(&self, records: &[Record]) -> CliResult<()> {
        let text = render(records, self.format);
        match &self.output {
            Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            }),
            None => std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                }),
        }
    }
}

fn preset_grid(
    s: &Settings,
    fig: &str,
    params: &ParamArgs,
    axes: &[String],
) -> CliResult<SweepGrid> {
    let fig: Figure = fig.parse()?;
    if !axes.is_empty() {
        return Err(CliError::Invalid(
            "--fig cannot be combined with --axis".into(),
        ));
    }
    let mut grid = fig.grid(
        s.nx.unwrap_or(DEFAULT_RESOLUTION),
        s.ny.unwrap_or(DEFAULT_RESOLUTION),
    )?;
    let flags = s.flag_values(params);
    for p in Param::ALL {
        let taken = grid.fixed.get(p).is_some() || grid.axes.iter().any(|a| a.param == p);
        if taken && flags.get(p).is_some() {
            return Err(CliError::Invalid(format!(
                "{p} is set by figure preset {fig:?}"
            )));
        }
    }
    // the preset wins over the config file; only free phases pass through
    grid.fixed = grid.fixed.or(&flags).or(&s.config_values()?);
    Ok(grid)
}

/// Runs one invocation. Output goes to `-o` or standard output; warnings
/// and the oracle summary go to standard error.
pub fn run(cli: Cli) -> CliResult<()> {
    let s = Settings::new(&cli)?;
    match &cli.command {
        Command::Negativity(params) => {
            let pt = s.fixed(params)?.point(&commands::SCENARIO)?;
            s.emit(&[commands::negativity(&pt)?])
        }
        Command::Sweep {
            params,
            fig,
            axes,
            critical,
        } => {
            let (grid, critical) = match fig {
                Some(f) => {
                    let g = preset_grid(&s, f, params, axes)?;
                    (g, *critical || f.parse::<Figure>()?.critical())
                }
                None => (SweepGrid::new(s.axes(axes)?, s.fixed(params)?)?, *critical),
            };
            s.emit(&commands::sweep(&grid, critical)?)
        }
        Command::Critical { params, axes } => {
            let grid = SweepGrid::new(s.axes(axes)?, s.fixed(params)?)?;
            s.emit(&commands::critical(&grid)?)
        }
        Command::OracleCheck {
            params,
            axes,
            dim,
            max_dim,
            tol_trace,
            tol_compare,
        } => {
            let base = OracleConfig::default();
            let cfg = OracleConfig::new(
                dim.or(s.config.get("dim")?).unwrap_or(base.dim),
                tol_trace
                    .or(s.config.get("tol_trace")?)
                    .unwrap_or(base.tol_trace),
                tol_compare
                    .or(s.config.get("tol_compare")?)
                    .unwrap_or(base.tol_compare),
            )?;
            let max_dim = max_dim
                .or(s.config.get("max_dim")?)
                .unwrap_or(MAX_ORACLE_DIM.max(cfg.dim));
            let grid = commands::oracle_grid(s.axes(axes)?, s.flag_values(params))?;
            let grid = SweepGrid {
                fixed: grid.fixed.or(&s.config_values()?),
                ..grid
            };
            let (records, summary) = commands::oracle_check(&grid, &cfg, max_dim)?;
            s.emit(&records)?;
            report_oracle(&records, summary, cfg.tol_compare)
        }
    }
}

fn report_oracle(records: &[Record], summary: OracleSummary, tol: f64) -> CliResult<()> {
    for r in records {
        if let Some(crate::record::Value::Text(reason)) = r.get("reason") {
            eprintln!("warning: point skipped: {reason}");
        }
    }
    eprintln!(
        "oracle-check: {} compared, {} failed, {} skipped",
        summary.compared, summary.failed, summary.skipped
    );
    if summary.failed > 0 {
        return Err(CliError::Verification(format!(
            "{} of {} points differ by more than {tol:e}",
            summary.failed, summary.compared
        )));
    }
    Ok(())
}
