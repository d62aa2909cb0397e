//! `key = value` configuration files. Blank lines and lines starting with
//! `#` are ignored; keys use the long flag names with `_` or `-`.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{CliError, CliResult};

const KEYS: &[&str] = &[
    "tau",
    "u",
    "nbar",
    "theta",
    "phi",
    "phi_b",
    "output",
    "format",
    "nx",
    "ny",
    "degrees",
    "dim",
    "max_dim",
    "tol_trace",
    "tol_compare",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Invalid(format!("cannot read config {}: {e}", path.display()))
        })?;
        text.parse()
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        self.raw(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::Invalid(format!("config: bad value '{v}' for {key}")))
            })
            .transpose()
    }
}

impl FromStr for Config {
    type Err = CliError;

    fn from_str(text: &str) -> CliResult<Self> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Invalid(format!("config line {}: expected key = value", n + 1))
            })?;
            let key = k.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Invalid(format!(
                    "config line {}: unknown key '{}'",
                    n + 1,
                    k.trim()
                )));
            }
            entries.insert(key, v.trim().to_string());
        }
        Ok(Self { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_types() {
        let c: Config = "# sweep\ntau = 0.3\nphi-b=1\n\nnx = 11\ndegrees = true\n"
            .parse()
            .unwrap();
        assert_eq!(c.get::<f64>("tau").unwrap(), Some(0.3));
        assert_eq!(c.get::<f64>("phi_b").unwrap(), Some(1.0));
        assert_eq!(c.get::<usize>("nx").unwrap(), Some(11));
        assert_eq!(c.get::<bool>("degrees").unwrap(), Some(true));
        assert_eq!(c.get::<f64>("u").unwrap(), None);
        assert!(c.get::<usize>("tau").is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!("tau 0.3".parse::<Config>().is_err());
        assert!("colour = red".parse::<Config>().is_err());
    }
}
