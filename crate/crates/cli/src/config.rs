//! Flat `key = value` run-configuration files. Flags override whatever a
//! file supplies; the file only fills parameters the command line left out.

use std::collections::HashMap;
use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::Failure;

/// Every key a configuration file may set. Anything else is rejected, so a
/// typo fails loudly instead of being ignored.
const KNOWN_KEYS: [&str; 15] = [
    "theta1", "theta2", "gamma_l", "theta_min", "theta_max", "steps", "pairs", "levels", "seed",
    "bsm", "tol", "format", "output", "amps", "workers",
];

pub struct FileConfig {
    entries: HashMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> Self {
        Self {
            entries: HashMap::new(),
        }
    }

    /// Parses a file of `key = value` lines. Blank lines and lines starting
    /// with `#` are skipped; a repeated key keeps its last value.
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read config {}: {e}", path.display())))?;
        let mut entries = HashMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Failure::Validation(format!(
                    "config line {}: expected `key = value`, got `{line}`",
                    index + 1
                )));
            };
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(Failure::Validation(format!(
                    "config line {}: unknown key `{key}`",
                    index + 1
                )));
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>, Failure>
    where
        T::Err: Display,
    {
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|e| {
                Failure::Validation(format!("config key `{key}`: cannot parse `{raw}`: {e}"))
            }),
        }
    }

    pub fn real(&self, key: &str) -> Result<Option<f64>, Failure> {
        self.parsed(key)
    }

    pub fn integer(&self, key: &str) -> Result<Option<u64>, Failure> {
        self.parsed(key)
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }
}
