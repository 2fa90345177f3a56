//! `key = value` configuration for the command-line tool.

use std::path::PathBuf;

use crate::elliptic::{DEFAULT_CAP, HARD_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("format must be json or csv, got {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest residue field enumerated when counting points.
    pub cap: u64,
    pub n_max: usize,
    /// Exponent M of the 5-adic modulus 5^M.
    pub precision: u32,
    pub chi: Option<PathBuf>,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config { cap: DEFAULT_CAP, n_max: 200, precision: 3, chi: None, format: Format::Json }
    }
}

impl Config {
    /// Lines `key = value`; `#` starts a comment. Keys: cap, n_max,
    /// precision, chi, format. Relative `chi` paths are kept as written.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Config::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| Error::Config(format!("line {}: {m}", no + 1));
            let (k, v) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let (k, v) = (k.trim(), v.trim());
            let num = |v: &str| v.parse::<u64>().map_err(|_| err(format!("{k} must be a non-negative integer")));
            match k {
                "cap" => c.cap = num(v)?,
                "n_max" => c.n_max = num(v)? as usize,
                "precision" => c.precision = num(v)? as u32,
                "chi" => c.chi = Some(PathBuf::from(v)),
                "format" => c.format = Format::parse(v).map_err(|e| err(e.to_string()))?,
                // output order is canonical whatever this says
                "deterministic" => {}
                _ => return Err(err(format!("unknown key {k:?}"))),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Config::parse(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 || self.cap > HARD_CAP {
            return Err(Error::Config(format!("cap must be in 1..={HARD_CAP}")));
        }
        if !(1..=12).contains(&self.precision) {
            return Err(Error::Config("precision must be in 1..=12".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let c = Config::parse("# caps\ncap = 20000\nn_max=50\nformat = csv\nchi = data/chi.txt\n").unwrap();
        assert_eq!(c.cap, 20_000);
        assert_eq!(c.n_max, 50);
        assert_eq!(c.format, Format::Csv);
        assert_eq!(c.chi, Some(PathBuf::from("data/chi.txt")));
        assert_eq!(Config::parse("").unwrap(), Config::default());
        assert!(Config::parse("cap = 2000000").is_err());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("format = xml").is_err());
        assert!(Config::parse("precision = 0").is_err());
    }
}
