//! Rewriting into minimal bases: proven rules plus an optional verified table.

mod analytic;
mod bernoulli;
mod derive;
mod pslq;
mod table;

pub use analytic::{
    analytic_rule, cl_is_real_part, cl_odd_depth1, cl_odd_pi3_reduce, gl_depth1_reduce, part_symbol, zeta_even,
};
pub use bernoulli::{bernoulli_numbers, bernoulli_poly, BernoulliPolynomial};
pub use derive::{
    alternating_family, derive, find_reduction, golden_family, is_odd_atom, monomials, mzv_family, pi_third_family,
    shipped_families, Derivation, DeriveConfig, Family,
};
pub use pslq::{pslq, required_digits};
pub use table::{default_table, verify_rule, Provenance, ReductionRule, ReductionTable, DEFAULT_TABLE};

use crate::algebra::SymbolicExpr;
use crate::error::Result;

/// Which rules `apply_reductions` may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReduceMode {
    Off,
    Analytic,
    Heuristic,
}

/// Rewrite to a fixed point using the shipped table in heuristic mode.
pub fn apply_reductions(e: &SymbolicExpr, mode: ReduceMode) -> Result<SymbolicExpr> {
    let table = match mode {
        ReduceMode::Heuristic => Some(default_table()?),
        _ => None,
    };
    Ok(apply_reductions_with(e, mode, table))
}

/// Rewrite to a fixed point; `table` is consulted only in heuristic mode.
pub fn apply_reductions_with(e: &SymbolicExpr, mode: ReduceMode, table: Option<&ReductionTable>) -> SymbolicExpr {
    if mode == ReduceMode::Off {
        return e.clone();
    }
    let table = table.filter(|_| mode == ReduceMode::Heuristic);
    let mut cur = e.clone();
    loop {
        let next = cur.substitute(|s| analytic_rule(s).or_else(|| table.and_then(|t| t.rewrite(s))));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}
