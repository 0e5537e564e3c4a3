//! Exact truncated multivariate power series.
//!
//! A [`TruncatedSeries`] stores rational coefficients on a down-set of
//! exponent tuples described by a [`Truncation`]: per-variable caps and
//! optional weighted-degree bounds. Arithmetic never reports a coefficient
//! outside the common region of its operands.

mod error;
mod json;
pub mod laws;
mod ops;
mod rat;
mod series;
mod special;
mod trunc;
mod vars;

pub use error::{Result, SeriesError};
pub use rat::{format_rat, int, is_integer, parse_rat, rat_sqrt, ratio, Rat};
pub use series::{Exp, TruncatedSeries};
pub use special::JoinResult;
pub use trunc::{Bound, Truncation};
pub use vars::VarSet;
