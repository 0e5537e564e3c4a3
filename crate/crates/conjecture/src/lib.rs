//! Exact fitting of a series to `[A(x) + B(x)√(1−4x)]/D(x)`, where `D` is a
//! product of a few fixed factors, with held-out validation and a search
//! over denominators.

mod ansatz;
mod error;
mod fit;
mod input;
pub mod linalg;
pub mod poly;
mod search;

pub use ansatz::{format_denominator, parse_denominator, Ansatz, Factor};
pub use error::{ConjectureError, Result};
pub use fit::{coefficients, expand, fit, fit_coeffs, sqrt_one_minus_4x, validate, FitResult, Validation};
pub use input::read_coefficients;
pub use search::{holdout, search_denominator, Candidate};
