//! Command results: text lines, structured data and the exit status.

use std::path::PathBuf;

use serde_json::{json, Value};
use thiserror::Error;

use crate::cli::OutputFormat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Success, or every check passed.
    Verified,
    /// A check failed or a table differs from its golden copy.
    Diff,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Diff => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Verified => "ok",
            Status::Diff => "diff",
        }
    }
}

/// Input problems; these exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Ring(#[from] fusion_ring::RingError),
    #[error(transparent)]
    Quantum(#[from] quantum_group::QgError),
    #[error(transparent)]
    Bound(#[from] arith_bounds::BoundError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub const EXIT_CODE: u8 = 2;
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub status: Status,
    pub lines: Vec<String>,
    pub data: Value,
}

impl Outcome {
    pub fn new(command: &'static str) -> Self {
        Outcome { command, status: Status::Verified, lines: Vec::new(), data: json!({}) }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.data[key] = v;
    }

    pub fn fail(&mut self) {
        self.status = Status::Diff;
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut s = self.lines.join("\n");
                s.push('\n');
                s
            }
            OutputFormat::Structured => {
                let v = json!({ "command": self.command, "status": self.status.name(), "result": self.data });
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}
