//! Parameter grids. Points are enumerated row-major: the first declared axis
//! varies slowest.

use std::fmt;
use std::str::FromStr;

use bsent::entanglement::ScenarioParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Tau,
    U,
    Nbar,
    Theta,
    Phi,
    PhiB,
}

impl Param {
    pub const ALL: [Param; 6] = [
        Param::Tau,
        Param::U,
        Param::Nbar,
        Param::Theta,
        Param::Phi,
        Param::PhiB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Tau => "tau",
            Param::U => "u",
            Param::Nbar => "nbar",
            Param::Theta => "theta",
            Param::Phi => "phi",
            Param::PhiB => "phi_b",
        }
    }

    pub fn is_angle(self) -> bool {
        matches!(self, Param::Theta | Param::Phi | Param::PhiB)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                CliError::Invalid(format!(
                    "unknown parameter '{s}' (expected tau, u, nbar, theta, phi or phi_b)"
                ))
            })
    }
}

/// One value per [`Param`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point([f64; 6]);

impl Point {
    pub fn get(&self, p: Param) -> f64 {
        self.0[p.index()]
    }

    pub fn set(&mut self, p: Param, v: f64) {
        self.0[p.index()] = v;
    }

    pub fn scenario(&self) -> CliResult<ScenarioParams> {
        Ok(ScenarioParams::new(
            self.get(Param::Tau),
            self.get(Param::U),
            self.get(Param::PhiB),
            self.get(Param::Nbar),
            self.get(Param::Theta),
            self.get(Param::Phi),
        )?)
    }
}

/// Parameter values that are not swept. `phi` and `phi_b` default to zero.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Fixed([Option<f64>; 6]);

impl Fixed {
    pub fn get(&self, p: Param) -> Option<f64> {
        self.0[p.index()]
    }

    pub fn set(&mut self, p: Param, v: f64) {
        self.0[p.index()] = Some(v);
    }

    /// Fills unset entries from `other`.
    pub fn or(mut self, other: &Fixed) -> Fixed {
        for p in Param::ALL {
            if self.get(p).is_none() {
                self.0[p.index()] = other.get(p);
            }
        }
        self
    }

    fn resolve(&self, p: Param) -> Option<f64> {
        match (self.get(p), p) {
            (Some(v), _) => Some(v),
            (None, Param::Phi | Param::PhiB) => Some(0.0),
            (None, _) => None,
        }
    }

    /// Complete point, or an error naming the first missing parameter in
    /// `needed`.
    pub fn point(&self, needed: &[Param]) -> CliResult<Point> {
        let mut pt = Point([0.0; 6]);
        for p in Param::ALL {
            match self.resolve(p) {
                Some(v) => pt.set(p, v),
                None if needed.contains(&p) => {
                    return Err(CliError::Invalid(format!(
                        "missing value for --{}",
                        flag(p)
                    )));
                }
                None => {}
            }
        }
        Ok(pt)
    }
}

fn flag(p: Param) -> &'static str {
    match p {
        Param::PhiB => "phi-b",
        _ => p.name(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub values: Vec<f64>,
    /// `Some((start, stop))` for evenly spaced axes, which may be resampled.
    range: Option<(f64, f64)>,
}

impl Axis {
    pub fn linspace(param: Param, start: f64, stop: f64, count: usize) -> CliResult<Self> {
        if count == 0 {
            return Err(CliError::Invalid(format!(
                "axis {param}: count must be at least 1"
            )));
        }
        if !(start.is_finite() && stop.is_finite()) || start > stop {
            return Err(CliError::Invalid(format!(
                "axis {param}: need finite start <= stop, got {start}..{stop}"
            )));
        }
        let values = if count == 1 {
            vec![start]
        } else {
            let step = (stop - start) / (count - 1) as f64;
            let mut v: Vec<f64> = (0..count).map(|i| start + step * i as f64).collect();
            v[count - 1] = stop;
            v
        };
        Ok(Self {
            param,
            values,
            range: Some((start, stop)),
        })
    }

    pub fn list(param: Param, values: Vec<f64>) -> CliResult<Self> {
        if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Invalid(format!(
                "axis {param}: need finite values"
            )));
        }
        Ok(Self {
            param,
            values,
            range: None,
        })
    }

    /// `name=start:stop:count` or `name=v1,v2,...`. Angle values are read in
    /// degrees when `degrees` is set.
    pub fn parse(s: &str, degrees: bool) -> CliResult<Self> {
        let (name, spec) = s
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("axis '{s}': expected name=spec")))?;
        let param: Param = name.trim().parse()?;
        let scale = if degrees && param.is_angle() {
            std::f64::consts::PI / 180.0
        } else {
            1.0
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map(|v| v * scale)
                .map_err(|_| CliError::Invalid(format!("axis {param}: bad number '{t}'")))
        };
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            [start, stop, count] => {
                let count = count
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Invalid(format!("axis {param}: bad count '{count}'")))?;
                Axis::linspace(param, num(start)?, num(stop)?, count)
            }
            [list] => Axis::list(param, list.split(',').map(num).collect::<CliResult<_>>()?),
            _ => Err(CliError::Invalid(format!(
                "axis '{s}': expected start:stop:count or a comma-separated list"
            ))),
        }
    }

    /// Same range with a different number of points; lists are unchanged.
    pub fn with_count(self, count: usize) -> CliResult<Self> {
        match self.range {
            Some((start, stop)) => Axis::linspace(self.param, start, stop, count),
            None => Ok(self),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub axes: Vec<Axis>,
    pub fixed: Fixed,
}

impl SweepGrid {
    pub fn new(axes: Vec<Axis>, fixed: Fixed) -> CliResult<Self> {
        for (i, a) in axes.iter().enumerate() {
            if axes[..i].iter().any(|b| b.param == a.param) {
                return Err(CliError::Invalid(format!("axis {} given twice", a.param)));
            }
        }
        Ok(Self { axes, fixed })
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All grid points in row-major order. Every parameter in `needed` must
    /// be either swept or fixed.
    pub fn points(&self, needed: &[Param]) -> CliResult<Vec<Point>> {
        let mut fixed = self.fixed;
        for a in &self.axes {
            // placeholder so that swept parameters do not count as missing
            fixed.set(a.param, a.values[0]);
        }
        let base = fixed.point(needed)?;
        let mut out = Vec::with_capacity(self.len());
        let mut idx = vec![0usize; self.axes.len()];
        for _ in 0..self.len() {
            let mut pt = base;
            for (a, &i) in self.axes.iter().zip(&idx) {
                pt.set(a.param, a.values[i]);
            }
            out.push(pt);
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < self.axes[k].values.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
        Ok(out)
    }
}
