use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("frame error: {0}")]
    Frame(String),
    #[error("form error: {0}")]
    Form(String),
    #[error("degree cap exceeded: {0}")]
    Cap(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("scaling error: {0}")]
    Scaling(String),
    #[error("majorant error: {0}")]
    Majorant(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
