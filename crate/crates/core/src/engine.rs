//! Dispatch of integral requests to the symbolic routes.

use std::collections::HashMap;

use rug::Rational;

use crate::algebra::{RationalAngle, SymbolicExpr};
use crate::argument::{ls_2mpi, reduce_query};
use crate::error::{Error, Result};
use crate::general::{at_two_log_golden, lsh, ClausenSolver};
use crate::pi::{ls_pi, ls_pi_basic, lsc_pi};
use crate::query::{LsQuery, LscQuery, LshArg, LshQuery, Query};
use crate::reduce::{apply_reductions_with, default_table, ReduceMode, ReductionTable};

/// How to evaluate and simplify.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions<'a> {
    pub mode: ReduceMode,
    /// Solve angles in `(pi, 2*pi)` directly instead of reducing them to `[0, pi]` first.
    pub extended_angle: bool,
    /// Heuristic rules; the shipped table when `None`.
    pub table: Option<&'a ReductionTable>,
}

impl Default for EvalOptions<'_> {
    fn default() -> Self {
        Self { mode: ReduceMode::Analytic, extended_angle: false, table: None }
    }
}

impl<'a> EvalOptions<'a> {
    pub fn with_mode(mode: ReduceMode) -> Self {
        Self { mode, ..Self::default() }
    }

    pub fn reduce(&self, e: &SymbolicExpr) -> Result<SymbolicExpr> {
        let table = match (self.mode, self.table) {
            (ReduceMode::Heuristic, None) => Some(default_table()?),
            (_, t) => t,
        };
        Ok(apply_reductions_with(e, self.mode, table))
    }
}

/// Evaluator with per-angle memoization.
#[derive(Debug, Default)]
pub struct Engine {
    solvers: HashMap<(RationalAngle, bool), ClausenSolver>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    fn canonical_value(&mut self, q: &LsQuery, extended: bool) -> Result<SymbolicExpr> {
        let s = q.sigma.q();
        if s.is_zero() {
            return Ok(SymbolicExpr::zero());
        }
        if q.sigma.is_integer() && s.numer().is_even() {
            let m = Rational::from(s / 2u32).numer().to_u32().ok_or_else(|| Error::Domain("angle too large".into()))?;
            return ls_2mpi(q.n, q.k, m);
        }
        if *s == 1 {
            return if q.k == 0 { ls_pi_basic(q.n) } else { ls_pi(q.n, q.k) };
        }
        let solver = match self.solvers.entry((q.sigma.clone(), extended)) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => e.insert(ClausenSolver::new(q.sigma.clone(), extended)?),
        };
        Ok(solver.solve(q.n, q.k)?.value)
    }

    /// `Ls_n^(k)(sigma)` before reductions.
    pub fn ls_raw(&mut self, q: &LsQuery, extended_angle: bool) -> Result<SymbolicExpr> {
        let s = q.sigma.q();
        if extended_angle && *s > 1 && *s < 2 {
            return self.canonical_value(q, true);
        }
        let combo = reduce_query(q)?;
        combo.evaluate(|t| self.canonical_value(t, false))
    }

    /// Any single integral before reductions.
    pub fn raw(&mut self, q: &Query, extended_angle: bool) -> Result<SymbolicExpr> {
        match q {
            Query::Ls(q) => self.ls_raw(q, extended_angle),
            Query::Lsh(LshQuery { n, k, t }) => {
                let e = lsh(*n, *k)?;
                Ok(match t {
                    LshArg::Formal => e,
                    LshArg::TwoLogGolden => at_two_log_golden(&e),
                })
            }
            Query::Lsc(LscQuery { m, n }) => lsc_pi(*m, *n),
        }
    }

    /// Evaluate and reduce; the result is real and free of transient symbols.
    pub fn evaluate(&mut self, q: &Query, opts: &EvalOptions) -> Result<SymbolicExpr> {
        let raw = self.raw(q, opts.extended_angle)?;
        let e = opts.reduce(&raw)?;
        if !e.is_real() {
            return Err(Error::Numeric(format!("{q}: result has a nonzero imaginary part")));
        }
        if e.has_transient() {
            return Err(Error::Numeric(format!("{q}: transient symbol in result")));
        }
        Ok(e)
    }
}

/// One-shot evaluation with default options.
pub fn evaluate(q: &Query, mode: ReduceMode) -> Result<SymbolicExpr> {
    Engine::new().evaluate(q, &EvalOptions::with_mode(mode))
}
