use std::path::PathBuf;

use locdirac_core::{GraphError, ParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exhaustive order {requested} exceeds the hard cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("unknown {kind} `{value}`")]
    UnknownId { kind: &'static str, value: String },
    #[error("failed to write report: {0}")]
    Report(#[from] std::io::Error),
}
