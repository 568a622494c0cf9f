use std::path::PathBuf;

use serde::Serialize;

use crate::dsl::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid recurrence: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Solver(#[from] quasiconvex::Error),
    #[error("invalid input: {0}")]
    Input(String),
}

/// Machine-readable form written to stderr.
#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use quasiconvex::Error as E;
        match self {
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
            CliError::Parse(_) => "parse",
            CliError::Input(_) => "input",
            CliError::Solver(e) => match e {
                E::Infeasible | E::InfeasibleStart | E::AllCasesInfinite => "infeasible",
                E::NotStarShaped
                | E::Degenerate(_)
                | E::DegenerateRoot
                | E::ZeroSurrogate
                | E::InvalidPolygon(_)
                | E::InvalidMesh(_) => "degenerate",
                _ => "invalid",
            },
        }
    }

    pub fn report(&self) -> ErrorReport {
        let (line, column) = match self {
            CliError::Parse(p) => (Some(p.line), Some(p.column)),
            _ => (None, None),
        };
        ErrorReport {
            error: self.kind(),
            message: self.to_string(),
            line,
            column,
        }
    }
}
