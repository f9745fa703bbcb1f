//! Arbitrary-precision evaluation: quadrature, polylogarithms, expressions.

mod eval;
mod polylog;
mod quad;

pub use eval::{
    expr_numeric, expr_numeric_parts, log_golden, ls_numeric, ls_numeric_at, lsc_numeric, lsh_arg_value, lsh_numeric,
    query_numeric, symbol_numeric, verify, Bindings,
};
pub use polylog::{gl41_pi3_fast, mzv_nielsen, nielsen_at_unit, polylog_real, polylog_unit_circle, zeta};
pub use quad::{tanh_sinh, Node};

/// Target accuracy and derived working precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    pub digits: u32,
    /// Use closed-form fast paths where available.
    pub fast_paths: bool,
}

pub const GUARD_DIGITS: u32 = 15;

impl Budget {
    pub fn new(digits: u32) -> Self {
        Self { digits, fast_paths: true }
    }

    /// Working precision in bits.
    pub fn prec(&self) -> u32 {
        (((self.digits + GUARD_DIGITS) as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 16
    }
}
