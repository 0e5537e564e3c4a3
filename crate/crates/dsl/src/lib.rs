//! A small language for composite generating-function expressions: rational
//! operations, square roots, derivatives, the half-perimeter operator,
//! Hadamard joins and substitution, evaluated to exact truncated series.

mod ast;
mod error;
mod eval;
mod parse;
mod program;
mod shipped;

pub use ast::Expr;
pub use error::{DslError, Result};
pub use eval::{evaluate, evaluate_order, Bindings, Evaluation};
pub use parse::{parse, ParseError};
pub use program::Program;
pub use shipped::{shipped_program, shipped_programs};
