//! Figure presets. Each fixes `tau` and one of `u`, `nbar`, and sweeps two
//! axes: `theta in [0, pi/2]` against either `u in [0.05, 1]` or, for the
//! pure-state maps, `nbar in [0, 2 tau/(1 - 2 tau)]` so that the common
//! critical noise sits mid-axis.

use std::f64::consts::FRAC_PI_2;
use std::str::FromStr;

use crate::error::{CliError, CliResult};
use crate::grid::{Axis, Fixed, Param, SweepGrid};

pub const DEFAULT_RESOLUTION: usize = 101;
/// Lower end of the purity axis; `u = 0` is not a state.
pub const U_MIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Negativity over `(nbar, theta)`, `u = 1`, `tau = 0.2`.
    F1a,
    /// As 1a with `tau = 0.4`.
    F1b,
    /// As 1a with `tau = 0.45`.
    F1c,
    /// Negativity over `(u, theta)`, `tau = 0.45`, `nbar = 1`.
    F2a,
    /// As 2a with `nbar = 4`.
    F2b,
    /// Critical noise over `(u, theta)`, `tau = 0.4`.
    F3,
}

impl FromStr for Figure {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Ok(match s {
            "1a" => Figure::F1a,
            "1b" => Figure::F1b,
            "1c" => Figure::F1c,
            "2a" => Figure::F2a,
            "2b" => Figure::F2b,
            "3" => Figure::F3,
            _ => {
                return Err(CliError::Invalid(format!(
                    "unknown figure '{s}' (expected 1a, 1b, 1c, 2a, 2b or 3)"
                )))
            }
        })
    }
}

impl Figure {
    pub const ALL: [Figure; 6] = [
        Figure::F1a,
        Figure::F1b,
        Figure::F1c,
        Figure::F2a,
        Figure::F2b,
        Figure::F3,
    ];

    /// Whether the preset records the critical-noise columns.
    pub fn critical(self) -> bool {
        self == Figure::F3
    }

    /// Parameters held fixed by the preset.
    pub fn fixed(self) -> Fixed {
        let mut f = Fixed::default();
        let (tau, rest): (f64, &[(Param, f64)]) = match self {
            Figure::F1a => (0.2, &[(Param::U, 1.0)]),
            Figure::F1b => (0.4, &[(Param::U, 1.0)]),
            Figure::F1c => (0.45, &[(Param::U, 1.0)]),
            Figure::F2a => (0.45, &[(Param::Nbar, 1.0)]),
            Figure::F2b => (0.45, &[(Param::Nbar, 4.0)]),
            Figure::F3 => (0.4, &[(Param::Nbar, 0.0)]),
        };
        f.set(Param::Tau, tau);
        for &(p, v) in rest {
            f.set(p, v);
        }
        f
    }

    /// Preset grid with `nx` points on the first axis and `ny` on `theta`.
    pub fn grid(self, nx: usize, ny: usize) -> CliResult<SweepGrid> {
        let fixed = self.fixed();
        let first = match self {
            Figure::F1a | Figure::F1b | Figure::F1c => {
                let tau = fixed.get(Param::Tau).expect("preset tau");
                Axis::linspace(Param::Nbar, 0.0, 2.0 * tau / (1.0 - 2.0 * tau), nx)?
            }
            _ => Axis::linspace(Param::U, U_MIN, 1.0, nx)?,
        };
        let theta = Axis::linspace(Param::Theta, 0.0, FRAC_PI_2, ny)?;
        SweepGrid::new(vec![first, theta], fixed)
    }
}
