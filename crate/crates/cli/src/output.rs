use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use bellforge_core::{BipartiteState, CMatrix};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] bellforge_core::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// On-disk form of a bipartite state. Amplitudes are row-major `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateFile {
    pub kind: String,
    pub dim_a: usize,
    pub dim_b: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl From<&BipartiteState> for StateFile {
    fn from(b: &BipartiteState) -> Self {
        StateFile {
            kind: "bipartite".into(),
            dim_a: b.dim_a(),
            dim_b: b.dim_b(),
            amplitudes: b.amplitudes().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixFile {
    pub kind: String,
    pub name: String,
    pub n: usize,
    /// rows of `[re, im]` entries
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn new(name: &str, m: &CMatrix) -> Self {
        let entries = (0..m.nrows())
            .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
            .collect();
        MatrixFile { kind: "matrix".into(), name: name.into(), n: m.nrows(), entries }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// The identity being tested.
    pub identity: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, identity: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        // NaN residuals fail
        let pass = residual <= tolerance;
        CheckResult { name: name.into(), identity: identity.into(), residual, tolerance, pass }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<StateFile>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, config: &impl Serialize) -> CliResult<Self> {
        Ok(Report {
            command: command.into(),
            config: serde_json::to_value(config)?,
            values: BTreeMap::new(),
            state: None,
            checks: Vec::new(),
            passed: true,
        })
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) -> CliResult<()> {
        self.values.insert(key.into(), serde_json::to_value(v)?);
        Ok(())
    }

    pub fn check(&mut self, c: CheckResult) {
        self.passed &= c.pass;
        self.checks.push(c);
    }

    pub fn write_csv(&self, path: &Path) -> CliResult<()> {
        let mut w = csv::Writer::from_path(path)?;
        for c in &self.checks {
            w.serialize(c)?;
        }
        w.flush().map_err(|source| CliError::Io { path: path.into(), source })?;
        Ok(())
    }
}

pub fn write_json(path: &Path, v: &impl Serialize) -> CliResult<()> {
    let mut text = serde_json::to_string(v)?;
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}
