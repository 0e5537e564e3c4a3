use polygf_series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GfError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown generating function `{0}`")]
    UnknownName(String),
    #[error("bad argument: {0}")]
    BadArg(String),
    #[error("data file {file}: {msg}")]
    Data { file: String, msg: String },
    #[error("`{name}` produced the non-integer coefficient {coeff} at {exp:?}")]
    NonInteger { name: String, exp: Vec<u32>, coeff: String },
}

pub type Result<T> = std::result::Result<T, GfError>;
