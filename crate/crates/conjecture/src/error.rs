use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("insufficient data: {have} coefficients for {need} unknowns")]
    InsufficientData { need: usize, have: usize },
    #[error("no solution within the degree bounds; the system becomes inconsistent at order {order}")]
    Inconsistent { order: usize },
    #[error("series must be univariate, got {0} variables")]
    NotUnivariate(usize),
    #[error("bad ansatz: {0}")]
    BadAnsatz(String),
    #[error("bad series input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Series(#[from] polygf_series::SeriesError),
}

pub type Result<T> = std::result::Result<T, ConjectureError>;
