//! Exact weight-graded coefficient ring.

mod expr;
mod number;
mod symbol;
mod text;

pub use expr::{Monomial, SymbolicExpr, Weight};
pub use number::GaussianRational;
pub use symbol::{ConstSymbol, MultiIndex, RationalAngle, RealPoint};
pub use text::{parse_ast, parse_expr, Ast, Spanned};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid multi-index {0:?}")]
    InvalidIndex(Vec<u32>),
    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },
}
