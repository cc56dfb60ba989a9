use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    NoSolution(poincare_rep::Error),
    #[error("{0}")]
    Core(poincare_rep::Error),
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NoSolution(_) => crate::EXIT_NO_SOLUTION,
            CliError::Core(_) => crate::EXIT_FAILURE,
            CliError::Io { .. } | CliError::Parse(_) => crate::EXIT_IO,
        }
    }
}

impl From<poincare_rep::Error> for CliError {
    fn from(e: poincare_rep::Error) -> Self {
        match e {
            poincare_rep::Error::NoSolution(_) => CliError::NoSolution(e),
            poincare_rep::Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::Core(other),
        }
    }
}
