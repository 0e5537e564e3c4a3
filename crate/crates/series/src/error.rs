use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVar(String),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("constant term {0} has no rational square root")]
    NotASquare(String),
    #[error("exponent {0:?} lies outside the truncation region")]
    OutOfTruncation(Vec<u32>),
    #[error("substituted series for `{0}` has a nonzero constant term")]
    NonZeroConstant(String),
    #[error("substituted series for `{0}` still depends on `{0}`")]
    SelfReference(String),
    #[error("monomial division leaves a negative exponent")]
    NotDivisible,
    #[error("exponent tuple has length {got}, expected {want}")]
    Arity { got: usize, want: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;
