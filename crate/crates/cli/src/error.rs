use std::path::PathBuf;

use datagrinder::classifier::ClassifierError;
use datagrinder::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag combination or value that clap could not catch.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}, line {line}: {message}")]
    Parse { path: PathBuf, line: u64, message: String },
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
    #[error("writing CSV: {0}")]
    CsvOutput(#[from] csv::Error),
    #[error("writing report: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
