use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tunables shared by generation, auditing and solving. Read from a plain
/// `key = value` file; `#` starts a comment.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Config {
    /// Largest instance size handed to the quartic brute-force oracle.
    pub quartic_cutoff: usize,
    /// Largest instance size handed to the cubic brute-force oracles.
    pub cubic_cutoff: usize,
    /// Largest `n` accepted by `generate`.
    pub max_n: usize,
    /// Angular tolerance of the rotation solvers, in radians.
    pub rotation_tol: f64,
    /// Cell budget for Hausdorff certification.
    pub cell_limit: usize,
    /// Attempts before rejection sampling gives up.
    pub max_attempts: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            quartic_cutoff: 20,
            cubic_cutoff: 60,
            max_n: 100_000,
            rotation_tol: 1e-11,
            cell_limit: 2_000_000,
            max_attempts: 10_000,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Parse(format!("bad value {value:?} for {key}")))
}

impl Config {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "quartic_cutoff" => self.quartic_cutoff = parse(key, value)?,
            "cubic_cutoff" => self.cubic_cutoff = parse(key, value)?,
            "max_n" => self.max_n = parse(key, value)?,
            "rotation_tol" => self.rotation_tol = parse(key, value)?,
            "cell_limit" => self.cell_limit = parse(key, value)?,
            "max_attempts" => self.max_attempts = parse(key, value)?,
            _ => return Err(Error::Parse(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut config = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_key_values() {
        let c = Config::parse("# cutoffs\nquartic_cutoff = 12\n\nrotation_tol=1e-9 # tighter\n").unwrap();
        assert_eq!(c.quartic_cutoff, 12);
        assert_eq!(c.rotation_tol, 1e-9);
        assert_eq!(c.cubic_cutoff, Config::default().cubic_cutoff);
        assert!(Config::parse("nope = 1").is_err());
        assert!(Config::parse("max_n").is_err());
        assert!(Config::parse("max_n = x").is_err());
    }
}
