use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum DslError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("undeclared variable `{0}`")]
    Undeclared(String),
    #[error("`{name}` takes {want} arguments, got {got}")]
    Arity { name: String, want: usize, got: usize },
    #[error("variable `{0}` is eliminated twice along one path")]
    DoubleElimination(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Series(#[from] polygf_series::SeriesError),
    #[error(transparent)]
    Library(#[from] polygf_gflib::GfError),
}

pub type Result<T> = std::result::Result<T, DslError>;
