use std::path::PathBuf;

use thiserror::Error;

use crate::tnorm::TNormKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{kind} requires alpha {constraint}, got {alpha}")]
    ParameterOutOfDomain {
        kind: TNormKind,
        alpha: f64,
        constraint: &'static str,
    },

    #[error("{what} must lie in [0, 1], got {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("cannot fold an empty list of membership grades")]
    EmptyInput,

    #[error("rule generation needs at least 2 attributes, dataset has {0}")]
    InsufficientAttributes(usize),

    #[error("pattern has {got} attributes, rule set expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{path}: row {row}: {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        message: String,
    },

    #[error("{path}: no usable rows ({dropped} dropped for missing values)")]
    EmptyDataset { path: PathBuf, dropped: usize },

    #[error("cross-validation needs at least 10 patterns, got {0}")]
    TooFewPatterns(usize),

    #[error("non-finite value in accuracy matrix at row {row}, column {column}")]
    NonFiniteInput { row: usize, column: usize },

    #[error("Friedman test needs N >= 2 datasets and k >= 2 algorithms, got N={datasets}, k={algorithms}")]
    DegenerateInput { datasets: usize, algorithms: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cell ({dataset}, {tnorm}): {source}")]
    Cell {
        dataset: String,
        tnorm: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Process exit code: 1 configuration, 2 data, 3 internal numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ParameterOutOfDomain { .. } | Error::Config(_) => 1,
            Error::Parse { .. }
            | Error::EmptyDataset { .. }
            | Error::Io { .. }
            | Error::TooFewPatterns(_)
            | Error::InsufficientAttributes(_)
            | Error::DimensionMismatch { .. } => 2,
            Error::Cell { source, .. } => source.exit_code(),
            Error::Domain { .. }
            | Error::EmptyInput
            | Error::NonFiniteInput { .. }
            | Error::DegenerateInput { .. } => 3,
        }
    }
}
