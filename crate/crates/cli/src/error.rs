use std::path::Path;

use thiserror::Error;

use crate::input::DocKind;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Validation { path: String, message: String },
    #[error("{path}: expected a {expected} document, found a {found} document")]
    WrongKind { path: String, expected: DocKind, found: DocKind },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Paper(#[from] paper_models::PaperError),
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
    #[error(transparent)]
    Cohomology(#[from] cohomology::CohomologyError),
    #[error(transparent)]
    Flabby(#[from] flabby::FlabbyError),
    #[error(transparent)]
    Monomial(#[from] monomial_action::MonomialError),
}

impl CliError {
    pub(crate) fn parse(path: &Path, e: &serde_json::Error) -> CliError {
        CliError::Parse { path: path.display().to_string(), line: e.line(), column: e.column(), message: e.to_string() }
    }

    pub(crate) fn validation(path: &Path, e: impl ToString) -> CliError {
        CliError::Validation { path: path.display().to_string(), message: e.to_string() }
    }
}
