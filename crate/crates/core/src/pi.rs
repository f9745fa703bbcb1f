//! Closed forms at `pi` and `2*pi` from their generating functions.

use rug::{Integer, Rational};

use crate::algebra::{GaussianRational, MultiIndex, SymbolicExpr};
use crate::error::{check_nk, Error, Result};
use crate::series::{binom_central_series, exp_ipi, loggamma_at_1, loggamma_at_half, TruncatedSeries};

pub(crate) fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

fn frac(p: impl Into<Integer>, q: impl Into<Integer>) -> Rational {
    Rational::from((p.into(), q.into()))
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Ls_n^(k)(pi)` as a raw expression over `Pi`, `Zeta`, `Li(-1)`.
pub fn ls_pi(n: u32, k: u32) -> Result<SymbolicExpr> {
    check_nk(n, k)?;
    let m = n - 1 - k;

    let d0 = {
        let r = frac(factorial(m) * factorial(k), factorial(m + k + 1) << m);
        SymbolicExpr::constant(GaussianRational::i_pow((m + k) as i64).scale(&r)) * SymbolicExpr::pi_pow(m + k + 1)
    };

    let mut sum = SymbolicExpr::zero();
    for alpha in 1..=m {
        for beta in 0..=(m - alpha) {
            let gamma = m - alpha - beta;
            for delta in 0..=k {
                if beta > 0 && delta > 0 {
                    continue;
                }
                let eps = k - delta;
                let multinom = frac(
                    factorial(m) * factorial(k),
                    factorial(alpha) * factorial(beta) * factorial(gamma) * factorial(delta) * factorial(eps),
                );
                let f1 = Rational::from(factorial(alpha) * sign(alpha));
                let f3 = frac(factorial(gamma + eps) * sign(eps), Integer::from(1) << gamma);
                let c = multinom * f1 * f3;

                let s = gamma + eps + 2;
                let ix = MultiIndex::nielsen(s, alpha - 1);
                let zeta = SymbolicExpr::zeta(ix.clone());
                let alt = SymbolicExpr::li_at_minus_one(ix);
                let (f2, power, symbol) = if beta > 0 {
                    let r = frac(1, Integer::from(1) << beta);
                    (GaussianRational::i_pow(beta as i64).scale(&r), beta, zeta)
                } else if delta > 0 {
                    (-GaussianRational::i_pow(delta as i64), delta, alt)
                } else {
                    (GaussianRational::one(), 0, &zeta - &alt)
                };
                let f2 = SymbolicExpr::constant(f2) * SymbolicExpr::pi_pow(power);
                sum = sum + (f2 * symbol).scale_rational(&c);
            }
        }
    }

    let d = d0 + SymbolicExpr::i() * sum;
    let ls = -d.scale(&GaussianRational::i_pow(-(k as i64)));
    Ok(ls.real_component())
}

fn alpha(j: u32) -> SymbolicExpr {
    let c = Rational::from(1) - frac(1, Integer::from(1) << (j - 1));
    SymbolicExpr::zeta(MultiIndex::nielsen(j, 0)).scale_rational(&c)
}

/// `Ls_n(pi)` from the classical recurrence.
pub fn ls_pi_basic(n: u32) -> Result<SymbolicExpr> {
    check_nk(n, 0)?;
    let mut ls = vec![SymbolicExpr::zero(), -SymbolicExpr::pi(), SymbolicExpr::zero()];
    for big in 1..=n.saturating_sub(2) {
        let mut rhs = SymbolicExpr::pi() * alpha(big + 1);
        for k in 1..big.saturating_sub(1) {
            let c = frac(sign(k), factorial(k + 1));
            rhs = rhs + (alpha(big - k) * ls[(k + 2) as usize].clone()).scale_rational(&c);
        }
        ls.push(rhs.scale_rational(&Rational::from(factorial(big) * sign(big))));
    }
    Ok(ls[n as usize].clone())
}

/// `Ls_n^(k)(2*pi)`, a polynomial in `Pi` and zeta values.
pub fn ls_2pi(n: u32, k: u32) -> Result<SymbolicExpr> {
    check_nk(n, k)?;
    let m = n - 1 - k;
    let order = n - 1;
    let gf = &binom_central_series(order) * &exp_ipi(2, order, 1, &Rational::from(1));
    let c = gf.coeff(m, k).scale_rational(&Rational::from(2)) * SymbolicExpr::pi();
    let ls = -c.scale(&GaussianRational::i_pow(-(k as i64)).scale(&Rational::from(factorial(m) * factorial(k))));
    if !ls.imag_component().is_zero() {
        return Err(Error::Domain(format!("nonreal coefficient for Ls_{n}^({k})(2pi)")));
    }
    Ok(ls)
}

/// `Lsc_{a,b}(pi)` over `Pi`, `Log[2]` and zeta values.
pub fn lsc_pi(a: u32, b: u32) -> Result<SymbolicExpr> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!("Lsc indices must be positive, got ({a}, {b})")));
    }
    let order = a + b - 2;
    let half = frac(1, 2);
    let x = TruncatedSeries::linear(2, order, half.clone(), Rational::new());
    let y = TruncatedSeries::linear(2, order, Rational::new(), half.clone());
    let xy = TruncatedSeries::linear(2, order, half.clone(), half);
    let log2 = TruncatedSeries::linear(2, order, Rational::from(1), Rational::from(1))
        .scale(&SymbolicExpr::symbol(crate::algebra::ConstSymbol::Log2));
    let log_pi = TruncatedSeries::constant(2, order, SymbolicExpr::symbol(crate::algebra::ConstSymbol::LogPi));
    let log = &(&(&(&log2 + &loggamma_at_half(&x)?) + &loggamma_at_half(&y)?) - &loggamma_at_1(&xy)?) - &log_pi;
    let gf = log.exp()?;
    let c = gf.coeff(a - 1, b - 1);
    if c.has_transient() {
        return Err(Error::Domain("transient constants survived in Lsc generating function".into()));
    }
    Ok((c * SymbolicExpr::pi()).scale_rational(&-Rational::from(factorial(a - 1) * factorial(b - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    fn p(s: &str) -> SymbolicExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn ls42_at_pi() {
        assert_eq!(ls_pi(4, 2).unwrap(), p("2*Pi*Li[{3},-1]"));
    }

    #[test]
    fn top_k_is_pure_power() {
        for k in 0..6 {
            let expected = SymbolicExpr::pi_pow(k + 1).scale_rational(&frac(-1, k + 1));
            assert_eq!(ls_pi(k + 1, k).unwrap(), expected);
        }
    }

    #[test]
    fn basic_recurrence_seeds() {
        assert_eq!(ls_pi_basic(1).unwrap(), -SymbolicExpr::pi());
        assert!(ls_pi_basic(2).unwrap().is_zero());
        assert_eq!(ls_pi_basic(3).unwrap(), p("-1/2*Pi*Zeta[2]"));
        assert_eq!(ls_pi_basic(4).unwrap(), p("3/2*Pi*Zeta[3]"));
    }

    #[test]
    fn at_two_pi() {
        assert_eq!(ls_2pi(2, 1).unwrap(), p("-2*Pi^2"));
        assert_eq!(ls_2pi(1, 0).unwrap(), p("-2*Pi"));
    }

    #[test]
    fn lsc_small() {
        assert_eq!(lsc_pi(1, 1).unwrap(), -SymbolicExpr::pi());
        assert!(lsc_pi(2, 1).unwrap().is_zero());
        assert!(lsc_pi(1, 2).unwrap().is_zero());
    }

    #[test]
    fn domain_errors() {
        assert!(ls_pi(3, 5).is_err());
        assert!(ls_2pi(0, 0).is_err());
        assert!(lsc_pi(0, 1).is_err());
    }
}
