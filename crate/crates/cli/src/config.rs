//! Settings from a flat `key = value` file, overridden by flags.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use qiso_scalars::{parse_rational, BigRational, ParamConfig, QMode};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Config(format!("format must be text or json, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub t: BigRational,
    pub q: QMode,
    pub format: Format,
    /// Highest spectral level 2l that may be built.
    pub max_l2: i32,
    /// Highest spectral level 2l the spectral suite verifies.
    pub top_l2: i32,
    /// Degree bound for the Hopf-axiom and Haar-invariance sweeps.
    pub hopf_degree: usize,
    /// Degree bound for critical pairs and PBW counts.
    pub confluence_bound: usize,
    /// Suite run by `verify` when none is named.
    pub suite: Option<String>,
    /// Zero the timings so identical inputs give identical output.
    pub deterministic: bool,
    pub verbose: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            t: BigRational::new(1.into(), 2.into()),
            q: QMode::Symbolic,
            format: Format::Text,
            max_l2: qiso_spectral::DEFAULT_MAX_L2,
            top_l2: qiso_spectral::DEFAULT_TOP_L2,
            hopf_degree: 6,
            confluence_bound: 6,
            suite: None,
            deterministic: false,
            verbose: false,
        }
    }
}

pub fn parse_q(s: &str) -> Result<QMode, CliError> {
    match s.trim() {
        "symbolic" => Ok(QMode::Symbolic),
        v => Ok(QMode::Rational(parse_rational(v)?)),
    }
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T, CliError>
where
    T::Err: fmt::Display,
{
    v.parse().map_err(|e| CliError::Config(format!("{key}: {e}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, CliError> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Config(format!("{key}: expected true or false, got {v:?}"))),
    }
}

impl Settings {
    /// Apply `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        self.apply_text(&text)
    }

    pub fn set(&mut self, key: &str, v: &str) -> Result<(), CliError> {
        match key {
            "t" => self.t = parse_rational(v)?,
            "q" => self.q = parse_q(v)?,
            "format" => self.format = v.parse()?,
            "max_l2" => self.max_l2 = parse_num(key, v)?,
            "top_l2" => self.top_l2 = parse_num(key, v)?,
            "hopf_degree" => self.hopf_degree = parse_num(key, v)?,
            "confluence_bound" => self.confluence_bound = parse_num(key, v)?,
            "suite" => self.suite = Some(v.to_string()),
            "deterministic" => self.deterministic = parse_bool(key, v)?,
            "verbose" => self.verbose = parse_bool(key, v)?,
            _ => return Err(CliError::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn params(&self) -> Result<ParamConfig, CliError> {
        Ok(ParamConfig::new(self.q.clone(), self.t.clone())?)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.params()?;
        if self.max_l2 < 1 || self.max_l2 % 2 == 0 {
            return Err(CliError::Config(format!("max_l2 must be odd and positive, got {}", self.max_l2)));
        }
        if self.top_l2 < 1 || self.top_l2 % 2 == 0 || self.top_l2 > self.max_l2 {
            return Err(CliError::Config(format!("top_l2 must be odd, positive and at most max_l2 = {}", self.max_l2)));
        }
        if let Some(s) = &self.suite {
            crate::suites::Suite::from_name(s)?;
        }
        Ok(())
    }
}
