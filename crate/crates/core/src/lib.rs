//! Symbolic and arbitrary-precision evaluation of generalized log-sine integrals.

pub mod algebra;
pub mod argument;
pub mod cli;
pub mod engine;
pub mod error;
pub mod general;
pub mod numerics;
pub mod pi;
pub mod query;
pub mod reduce;
pub mod series;

pub use algebra::{ConstSymbol, GaussianRational, Monomial, MultiIndex, RationalAngle, SymbolicExpr, Weight};
