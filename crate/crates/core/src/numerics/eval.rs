//! Numeric values of symbols, expressions and the integrals themselves.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

use super::polylog::{gl41_pi3_fast, mzv_nielsen, polylog_real, polylog_unit_circle};
use super::quad::tanh_sinh;
use super::{Budget, GUARD_DIGITS};
use crate::algebra::{ConstSymbol, MultiIndex, RationalAngle, RealPoint, SymbolicExpr};
use crate::error::{check_nk, Error, Result};
use crate::query::{LsQuery, LscQuery, LshArg, LshQuery, Query};
use crate::reduce::cl_is_real_part;

/// Values for free parameters.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub t: Option<Float>,
}

impl Bindings {
    pub fn with_t(t: Float) -> Self {
        Self { t: Some(t) }
    }
}

type CacheKey = (ConstSymbol, u32, bool);

fn cache() -> &'static Mutex<HashMap<CacheKey, Float>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Float>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `log(rho)` with `rho = (1 + sqrt 5) / 2`.
pub fn log_golden(prec: u32) -> Float {
    let rho = (Float::with_val(prec, 5u32).sqrt() + 1u32) / 2u32;
    rho.ln()
}

fn angle_part(ix: &MultiIndex, q: &RationalAngle, want_cl: bool, budget: &Budget) -> Result<Float> {
    let prec = budget.prec();
    let real = want_cl == cl_is_real_part(ix);
    let r = q.q() - Rational::from(q.q() / 2u32).floor() * 2u32;
    if r == 0 {
        if !real {
            return Ok(Float::new(prec));
        }
        let (a, b) = ix.as_nielsen().ok_or_else(|| Error::Numeric(format!("no numeric route for Zeta[{ix}]")))?;
        return mzv_nielsen(a, b, budget);
    }
    if budget.fast_paths && !want_cl && ix.entries() == [4, 1] && r == Rational::from((1, 3)) {
        return Ok(gl41_pi3_fast(budget));
    }
    let (re, im) = polylog_unit_circle(ix, &RationalAngle::new(r), budget)?;
    Ok(if real { re } else { im })
}

fn symbol_uncached(s: &ConstSymbol, budget: &Budget) -> Result<Float> {
    let prec = budget.prec();
    Ok(match s {
        ConstSymbol::Pi => Float::with_val(prec, Constant::Pi),
        ConstSymbol::Log2 => Float::with_val(prec, Constant::Log2),
        ConstSymbol::LogPi => Float::with_val(prec, Constant::Pi).ln(),
        ConstSymbol::EulerGamma => Float::with_val(prec, Constant::Euler),
        ConstSymbol::LogGolden => log_golden(prec),
        ConstSymbol::Zeta(ix) => {
            let (a, b) = ix.as_nielsen().ok_or_else(|| Error::Numeric(format!("no numeric route for Zeta[{ix}]")))?;
            mzv_nielsen(a, b, budget)?
        }
        ConstSymbol::LiMinusOne(ix) => polylog_unit_circle(ix, &RationalAngle::pi(), budget)?.0,
        ConstSymbol::LiRealPoint(ix, RealPoint::GoldenInvSquared) => {
            let x = (Float::with_val(prec, 3u32) - Float::with_val(prec, 5u32).sqrt()) / 2u32;
            polylog_real(ix, &x, budget)?
        }
        ConstSymbol::Cl(ix, q) => angle_part(ix, q, true, budget)?,
        ConstSymbol::Gl(ix, q) => angle_part(ix, q, false, budget)?,
        ConstSymbol::FormalT | ConstSymbol::LiRealPoint(_, RealPoint::ExpMinusT) => {
            unreachable!("parameter-dependent symbols are not cached")
        }
    })
}

/// Numeric value of one symbol.
pub fn symbol_numeric(s: &ConstSymbol, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    let prec = budget.prec();
    match s {
        ConstSymbol::FormalT => {
            let t = bindings.t.as_ref().ok_or_else(|| Error::Numeric("unbound parameter t".into()))?;
            return Ok(Float::with_val(prec, t));
        }
        ConstSymbol::LiRealPoint(ix, RealPoint::ExpMinusT) => {
            let t = bindings.t.as_ref().ok_or_else(|| Error::Numeric("unbound parameter t".into()))?;
            let x = Float::with_val(prec, -t).exp();
            return polylog_real(ix, &x, budget);
        }
        _ => {}
    }
    let key = (s.clone(), budget.digits, budget.fast_paths);
    if let Some(v) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = symbol_uncached(s, budget)?;
    cache().lock().expect("cache poisoned").insert(key, v.clone());
    Ok(v)
}

/// Real and imaginary parts of `e`.
pub fn expr_numeric_parts(e: &SymbolicExpr, budget: &Budget, bindings: &Bindings) -> Result<(Float, Float)> {
    let prec = budget.prec();
    let mut re = Float::new(prec);
    let mut im = Float::new(prec);
    for (m, c) in e.terms() {
        if let Some((s, _)) = m.factors().iter().find(|(s, _)| s.is_transient()) {
            return Err(Error::Numeric(format!("transient symbol {s} in expression")));
        }
        let mut v = Float::with_val(prec, 1u32);
        for (s, p) in m.factors() {
            v *= symbol_numeric(s, budget, bindings)?.pow(*p);
        }
        re += Float::with_val(prec, &v * &c.re);
        im += v * &c.im;
    }
    Ok((re, im))
}

/// Value of a real expression.
pub fn expr_numeric(e: &SymbolicExpr, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    if !e.is_real() {
        return Err(Error::Numeric(format!("expression has non-real coefficients: {e}")));
    }
    Ok(expr_numeric_parts(e, budget, bindings)?.0)
}

/// `int_0^(r*pi) f(theta, d_even, d_odd)` where `d_even`, `d_odd` are the distances
/// from `theta` to the nearest even and odd multiple of `pi`.
fn trig_panels(
    r: &Float,
    budget: &Budget,
    power: u32,
    mut f: impl FnMut(&Float, &Float, &Float) -> Float,
) -> Result<Float> {
    let prec = budget.prec();
    let digits = budget.digits + GUARD_DIGITS - 5;
    let pi = Float::with_val(prec, Constant::Pi);
    let full = r.to_f64().floor().max(0.0) as u32;
    let mut total = Float::new(prec);
    for j in 0..=full {
        let upper = if j < full { Float::with_val(prec, j + 1) } else { Float::with_val(prec, r) };
        let gap_turns = Float::with_val(prec, j + 1) - &upper;
        if j == full && gap_turns >= 1u32 {
            break;
        }
        let a = Float::with_val(prec, &pi * j);
        let b = Float::with_val(prec, &pi * &upper);
        let gap = gap_turns * &pi;
        let piece = tanh_sinh(&a, &b, digits, power, |node| {
            let to_next = Float::with_val(prec, node.from_b + &gap);
            let (d_even, d_odd) = if j % 2 == 0 { (node.from_a, &to_next) } else { (&to_next, node.from_a) };
            f(node.x, d_even, d_odd)
        })?;
        total += piece;
    }
    Ok(total)
}

/// `log(2 sin(d/2))` for `0 < d <= pi`.
fn log_chord(d: &Float) -> Float {
    let s = Float::with_val(d.prec(), d / 2u32).sin() * 2u32;
    s.ln()
}

fn ls_over_pi(n: u32, k: u32, r: &Float, budget: &Budget) -> Result<Float> {
    check_nk(n, k)?;
    let prec = budget.prec();
    if r.is_zero() {
        return Ok(Float::new(prec));
    }
    if r.is_sign_negative() {
        let v = ls_over_pi(n, k, &Float::with_val(prec, -r), budget)?;
        return Ok(if k.is_multiple_of(2) { -v } else { v });
    }
    let p = n - 1 - k;
    let v = trig_panels(r, budget, p, |theta, d_even, _| {
        let mut y = Float::with_val(prec, theta).pow(k);
        if p > 0 {
            y *= log_chord(d_even).pow(p);
        }
        y
    })?;
    Ok(-v)
}

/// `Ls_n^(k)(sigma) = -int_0^sigma theta^k log^(n-1-k)|2 sin(theta/2)| dtheta`.
pub fn ls_numeric(n: u32, k: u32, sigma: &Float, budget: &Budget) -> Result<Float> {
    let prec = budget.prec();
    let r = Float::with_val(prec, sigma / Float::with_val(prec, Constant::Pi));
    ls_over_pi(n, k, &r, budget)
}

/// `Ls_n^(k)(q*pi)`.
pub fn ls_numeric_at(n: u32, k: u32, sigma: &RationalAngle, budget: &Budget) -> Result<Float> {
    ls_over_pi(n, k, &Float::with_val(budget.prec(), sigma.q()), budget)
}

/// `Lsc_{m,n}(sigma) = -int_0^sigma log^(m-1)|2 sin(theta/2)| log^(n-1)|2 cos(theta/2)| dtheta`.
pub fn lsc_numeric(m: u32, n: u32, sigma: &RationalAngle, budget: &Budget) -> Result<Float> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("Lsc indices must be positive, got ({m}, {n})")));
    }
    let prec = budget.prec();
    let r = Float::with_val(prec, sigma.q());
    if r.is_sign_negative() {
        return Err(Error::Domain("Lsc needs a nonnegative angle".into()));
    }
    let v = trig_panels(&r, budget, (m - 1).max(n - 1), |_, d_even, d_odd| {
        let mut y = Float::with_val(prec, 1u32);
        if m > 1 {
            y *= log_chord(d_even).pow(m - 1);
        }
        if n > 1 {
            y *= log_chord(d_odd).pow(n - 1);
        }
        y
    })?;
    Ok(-v)
}

/// `Lsh_n^(k)(t) = -int_0^t theta^k log^(n-1-k)|2 sinh(theta/2)| dtheta` for `t > 0`.
pub fn lsh_numeric(n: u32, k: u32, t: &Float, budget: &Budget) -> Result<Float> {
    check_nk(n, k)?;
    let prec = budget.prec();
    if !t.is_sign_positive() || t.is_zero() {
        return Err(Error::Domain("Lsh needs t > 0".into()));
    }
    let p = n - 1 - k;
    let zero = Float::new(prec);
    let t = Float::with_val(prec, t);
    let v = tanh_sinh(&zero, &t, budget.digits + GUARD_DIGITS - 5, p, |node| {
        let theta = node.x;
        let mut y = Float::with_val(prec, theta).pow(k);
        if p > 0 {
            let s = Float::with_val(prec, theta / 2u32).sinh() * 2u32;
            y *= s.abs().ln().pow(p);
        }
        y
    })?;
    Ok(-v)
}

/// The argument of an `Lsh` request as a number.
pub fn lsh_arg_value(t: LshArg, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    match t {
        LshArg::TwoLogGolden => Ok(log_golden(budget.prec()) * 2u32),
        LshArg::Formal => bindings
            .t
            .as_ref()
            .map(|t| Float::with_val(budget.prec(), t))
            .ok_or_else(|| Error::Numeric("unbound parameter t".into())),
    }
}

/// The integral named by `q`.
pub fn query_numeric(q: &Query, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    match q {
        Query::Ls(LsQuery { n, k, sigma }) => ls_numeric_at(*n, *k, sigma, budget),
        Query::Lsh(LshQuery { n, k, t }) => lsh_numeric(*n, *k, &lsh_arg_value(*t, budget, bindings)?, budget),
        Query::Lsc(LscQuery { m, n }) => lsc_numeric(*m, *n, &RationalAngle::pi(), budget),
    }
}

/// `|integral(q) - e|`.
pub fn verify(q: &Query, e: &SymbolicExpr, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    let lhs = query_numeric(q, budget, bindings)?;
    let bindings = match q {
        Query::Lsh(LshQuery { t: LshArg::TwoLogGolden, .. }) => Bindings::with_t(lhs_t(budget)),
        _ => bindings.clone(),
    };
    let rhs = expr_numeric(e, budget, &bindings)?;
    Ok((lhs - rhs).abs())
}

fn lhs_t(budget: &Budget) -> Float {
    log_golden(budget.prec()) * 2u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    fn tol(d: i32) -> Float {
        Float::with_val(64, 10f64).pow(-d)
    }

    #[test]
    fn basic_values_at_pi() {
        let b = Budget::new(30);
        let v2 = ls_numeric_at(2, 0, &RationalAngle::pi(), &b).unwrap();
        assert!(v2.abs() < tol(30));
        let v3 = ls_numeric_at(3, 0, &RationalAngle::pi(), &b).unwrap();
        let e = expr_numeric(&parse_expr("-1/12*Pi^3").unwrap(), &b, &Bindings::default()).unwrap();
        assert!((v3 - e).abs() < tol(30));
    }

    #[test]
    fn order_one_is_the_angle() {
        let b = Budget::new(25);
        let s = Float::with_val(b.prec(), 4.5);
        let v = ls_numeric(1, 0, &s, &b).unwrap();
        assert!(Float::with_val(b.prec(), &v + 4.5).abs() < tol(25));
    }

    #[test]
    fn ls2_is_clausen() {
        let b = Budget::new(30);
        for (p, q) in [(1, 3), (1, 2), (2, 3)] {
            let a = RationalAngle::from_ratio(p, q);
            let quad = ls_numeric_at(2, 0, &a, &b).unwrap();
            let series =
                symbol_numeric(&ConstSymbol::Cl(MultiIndex::nielsen(2, 0), a), &b, &Bindings::default()).unwrap();
            assert!((quad - series).abs() < tol(30));
        }
    }

    #[test]
    fn lsc_against_closed_form() {
        let b = Budget::new(30);
        let v = lsc_numeric(2, 2, &RationalAngle::pi(), &b).unwrap();
        let e = expr_numeric(&parse_expr("1/24*Pi^3").unwrap(), &b, &Bindings::default()).unwrap();
        assert!((v - e).abs() < tol(30));
    }

    #[test]
    fn lsh_top_order() {
        let b = Budget::new(25);
        let t = Float::with_val(b.prec(), 1.25);
        let v = lsh_numeric(3, 2, &t, &b).unwrap();
        let exact = -Float::with_val(b.prec(), (&t).pow(3u32)) / 3u32;
        assert!((v - exact).abs() < tol(25));
    }

    #[test]
    fn golden_log_sinh() {
        let b = Budget::new(30);
        let q = Query::Lsh(LshQuery::new(3, 1, LshArg::TwoLogGolden).unwrap());
        let r = verify(&q, &parse_expr("1/5*Zeta[3]").unwrap(), &b, &Bindings::default()).unwrap();
        assert!(r < tol(30));
    }

    #[test]
    fn unbound_parameter() {
        let b = Budget::new(20);
        assert!(expr_numeric(&SymbolicExpr::symbol(ConstSymbol::FormalT), &b, &Bindings::default()).is_err());
    }
}
