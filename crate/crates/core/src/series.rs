//! Truncated power series in one or two variables over [`SymbolicExpr`].

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Integer, Rational};
use thiserror::Error;

use crate::algebra::{ConstSymbol, GaussianRational, MultiIndex, SymbolicExpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series in {0} and {1} variables cannot be combined")]
    VariableMismatch(usize, usize),
    #[error("series truncated at orders {0} and {1} cannot be combined")]
    OrderMismatch(u32, u32),
    #[error("constant term must vanish")]
    NonzeroConstant,
}

/// Power series in `x` (and optionally `y`) modulo total degree `order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: usize,
    order: u32,
    coeffs: BTreeMap<(u32, u32), SymbolicExpr>,
}

impl TruncatedSeries {
    pub fn zero(vars: usize, order: u32) -> Self {
        assert!(vars == 1 || vars == 2, "one or two variables");
        Self { vars, order, coeffs: BTreeMap::new() }
    }

    pub fn constant(vars: usize, order: u32, c: SymbolicExpr) -> Self {
        let mut s = Self::zero(vars, order);
        s.set((0, 0), c);
        s
    }

    /// The variable `x` (index 0) or `y` (index 1).
    pub fn var(vars: usize, order: u32, which: usize) -> Self {
        assert!(which < vars);
        let e = if which == 0 { (1, 0) } else { (0, 1) };
        let mut s = Self::zero(vars, order);
        s.set(e, SymbolicExpr::one());
        s
    }

    /// Linear form `a*x + b*y` with rational coefficients.
    pub fn linear(vars: usize, order: u32, a: Rational, b: Rational) -> Self {
        let mut s = Self::zero(vars, order);
        s.set((1, 0), SymbolicExpr::rational(a));
        if vars == 2 {
            s.set((0, 1), SymbolicExpr::rational(b));
        }
        s
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> SymbolicExpr {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &SymbolicExpr)> {
        self.coeffs.iter()
    }

    /// Set a coefficient; exponents beyond the order are dropped.
    pub fn set(&mut self, e: (u32, u32), c: SymbolicExpr) {
        assert!(self.vars == 2 || e.1 == 0);
        if e.0 + e.1 > self.order || c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, c);
        }
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::VariableMismatch(self.vars, other.vars));
        }
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            let v = &out.coeff(e.0, e.1) + c;
            out.set(*e, v);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let mut acc: BTreeMap<(u32, u32), SymbolicExpr> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let e = (a.0 + b.0, a.1 + b.1);
                if e.0 + e.1 <= self.order {
                    let slot = acc.entry(e).or_default();
                    *slot = &*slot + &(ca * cb);
                }
            }
        }
        let mut out = Self::zero(self.vars, self.order);
        for (e, c) in acc {
            out.set(e, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &SymbolicExpr) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        for (e, v) in &self.coeffs {
            out.set(*e, v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&SymbolicExpr::rational(r.clone()))
    }

    fn require_no_constant(&self) -> Result<(), SeriesError> {
        if self.coeff(0, 0).is_zero() {
            Ok(())
        } else {
            Err(SeriesError::NonzeroConstant)
        }
    }

    /// `sum_j c_j s^j` for `s` without constant term.
    pub fn compose(&self, c: impl Fn(u32) -> SymbolicExpr) -> Result<Self, SeriesError> {
        self.require_no_constant()?;
        let mut out = Self::constant(self.vars, self.order, c(0));
        let mut power = Self::constant(self.vars, self.order, SymbolicExpr::one());
        for j in 1..=self.order {
            power = &power * self;
            if power.coeffs.is_empty() {
                break;
            }
            out = &out + &power.scale(&c(j));
        }
        Ok(out)
    }

    /// `exp(s)` for `s` without constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        let mut fact = Integer::from(1);
        let inv: Vec<Rational> = (0..=self.order)
            .map(|j| {
                if j > 0 {
                    fact *= j;
                }
                Rational::from((Integer::from(1), fact.clone()))
            })
            .collect();
        self.compose(|j| SymbolicExpr::rational(inv[j as usize].clone()))
    }

    /// True if no coefficient mentions `s`.
    pub fn is_free_of(&self, s: &ConstSymbol) -> bool {
        self.coeffs.values().all(|c| !c.contains_symbol(s))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("series shapes agree")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.try_add(&-rhs).expect("series shapes agree")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.try_mul(rhs).expect("series shapes agree")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale_rational(&Rational::from(-1))
    }
}

fn zeta(j: u32) -> SymbolicExpr {
    SymbolicExpr::zeta(MultiIndex::nielsen(j, 0))
}

fn gamma() -> SymbolicExpr {
    SymbolicExpr::symbol(ConstSymbol::EulerGamma)
}

/// `log Gamma(1 + s)`.
pub fn loggamma_at_1(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    s.compose(|j| match j {
        0 => SymbolicExpr::zero(),
        1 => -gamma(),
        _ => zeta(j).scale_rational(&Rational::from((if j % 2 == 0 { 1 } else { -1 }, j))),
    })
}

/// `log Gamma(1/2 + s)`.
pub fn loggamma_at_half(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    s.compose(|j| match j {
        0 => SymbolicExpr::symbol(ConstSymbol::LogPi).scale_rational(&Rational::from((1, 2))),
        1 => -gamma() - SymbolicExpr::symbol(ConstSymbol::Log2).scale_rational(&Rational::from(2)),
        _ => {
            let num = (Integer::from(1) << j) - 1u32;
            let sign = if j % 2 == 0 { num } else { -num };
            zeta(j).scale_rational(&Rational::from((sign, Integer::from(j))))
        }
    })
}

/// `Gamma(1+x) / (Gamma(1+x/2+y) Gamma(1+x/2-y))` in `(x, y)`.
pub fn binom_central_series(order: u32) -> TruncatedSeries {
    let half = Rational::from((1, 2));
    let x = TruncatedSeries::var(2, order, 0);
    let plus = TruncatedSeries::linear(2, order, half.clone(), Rational::from(1));
    let minus = TruncatedSeries::linear(2, order, half, Rational::from(-1));
    let log = &(&loggamma_at_1(&x).unwrap() - &loggamma_at_1(&plus).unwrap()) - &loggamma_at_1(&minus).unwrap();
    let out = log.exp().unwrap();
    assert!(out.is_free_of(&ConstSymbol::EulerGamma), "Euler's constant must cancel");
    out
}

/// Series coefficient helper: `(i*pi)^j / j!` as an expression.
pub(crate) fn ipi_power_over_factorial(j: u32, scale: &Rational) -> SymbolicExpr {
    let mut fact = Integer::from(1);
    for t in 2..=j {
        fact *= t;
    }
    let c = GaussianRational::i_pow(j as i64).scale(&(Rational::from(scale.pow(j as i32)) / Rational::from(fact)));
    SymbolicExpr::constant(c) * SymbolicExpr::pi_pow(j)
}

/// `exp(i*c*pi*y)` as a series in the variable `which`.
pub(crate) fn exp_ipi(vars: usize, order: u32, which: usize, c: &Rational) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(vars, order);
    for j in 0..=order {
        let e = if which == 0 { (j, 0) } else { (0, j) };
        s.set(e, ipi_power_over_factorial(j, c));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    fn p(s: &str) -> SymbolicExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn arithmetic() {
        let one = TruncatedSeries::constant(1, 2, SymbolicExpr::one());
        let x = TruncatedSeries::var(1, 2, 0);
        let prod = &(&one + &x) * &(&one - &x);
        assert_eq!(prod.coeff(0, 0), SymbolicExpr::one());
        assert!(prod.coeff(1, 0).is_zero());
        assert_eq!(prod.coeff(2, 0), SymbolicExpr::int(-1));

        let x1 = TruncatedSeries::var(1, 1, 0);
        assert_eq!(&x1 * &x1, TruncatedSeries::zero(1, 1));

        let a = x.scale(&p("Zeta[2]"));
        let b = x.scale(&p("Pi"));
        assert_eq!((&a * &b).coeff(2, 0), p("Pi*Zeta[2]"));
    }

    #[test]
    fn mismatch_errors() {
        let a = TruncatedSeries::var(1, 2, 0);
        assert_eq!(a.try_add(&TruncatedSeries::var(1, 3, 0)), Err(SeriesError::OrderMismatch(2, 3)));
        assert_eq!(a.try_mul(&TruncatedSeries::var(2, 2, 0)), Err(SeriesError::VariableMismatch(1, 2)));
        let c = TruncatedSeries::constant(1, 2, SymbolicExpr::one());
        assert_eq!(c.exp(), Err(SeriesError::NonzeroConstant));
        assert_eq!(loggamma_at_1(&c), Err(SeriesError::NonzeroConstant));
    }

    #[test]
    fn exponential() {
        let z = TruncatedSeries::zero(1, 4);
        assert_eq!(z.exp().unwrap(), TruncatedSeries::constant(1, 4, SymbolicExpr::one()));
        let s = TruncatedSeries::var(1, 2, 0).scale(&p("Log[2]"));
        let e = s.exp().unwrap();
        assert_eq!(e.coeff(1, 0), p("Log[2]"));
        assert_eq!(e.coeff(2, 0), p("1/2*Log[2]^2"));
        let x = TruncatedSeries::var(2, 5, 0).scale(&p("Pi + Zeta[3]"));
        assert_eq!(&x.exp().unwrap() * &(-&x).exp().unwrap(), TruncatedSeries::constant(2, 5, SymbolicExpr::one()));
    }

    #[test]
    fn loggamma_kernels() {
        let s = TruncatedSeries::var(1, 3, 0);
        let g = loggamma_at_1(&s).unwrap();
        assert_eq!(g.coeff(1, 0), p("-EulerGamma"));
        assert_eq!(g.coeff(2, 0), p("1/2*Zeta[2]"));
        let h = loggamma_at_half(&s).unwrap();
        assert_eq!(h.coeff(0, 0), p("1/2*Log[Pi]"));
        assert_eq!(h.coeff(1, 0), p("-EulerGamma - 2*Log[2]"));
        assert_eq!(h.coeff(2, 0), p("3/2*Zeta[2]"));
    }

    #[test]
    fn central_binomial_is_even_in_y() {
        let b = binom_central_series(6);
        assert_eq!(b.coeff(0, 0), SymbolicExpr::one());
        for ((_, j), _) in b.terms() {
            assert_eq!(j % 2, 0);
        }
        assert!(b.is_free_of(&ConstSymbol::EulerGamma));
    }
}
