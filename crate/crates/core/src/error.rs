use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or evaluating a geometry.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("parse error at offset {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
    #[error("domain error in `{expr}` at point {point:?}: {reason}")]
    Domain {
        expr: String,
        point: [f64; 4],
        reason: String,
    },
    #[error("tetrad entry ({row},{col}) is complex at point {point:?}")]
    ComplexTetrad {
        row: usize,
        col: usize,
        point: [f64; 4],
    },
    #[error("singular tetrad at point {point:?} (condition number {condition:.3e})")]
    SingularTetrad { point: [f64; 4], condition: f64 },
    #[error("gauge matrix has det {det} (expected 1) at point {point:?}")]
    NotUnimodular { point: [f64; 4], det: String },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
