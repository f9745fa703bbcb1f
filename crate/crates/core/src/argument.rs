//! Reduction of arbitrary rational-multiple-of-pi arguments to `[0, pi]` and multiples of `2*pi`.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::algebra::{RationalAngle, SymbolicExpr};
use crate::error::{check_nk, Result};
use crate::pi::ls_2pi;
use crate::query::LsQuery;

/// `sum_{i=1}^m i^j`.
pub fn power_sum(m: u32, j: u32) -> Rational {
    (1..=m).map(|i| Integer::from(i).pow(j)).sum::<Integer>().into()
}

fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(n).binomial(k)
}

/// `constant + sum coefficient * Ls(query)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LsCombination {
    pub terms: Vec<(SymbolicExpr, LsQuery)>,
    pub constant: SymbolicExpr,
}

impl LsCombination {
    pub fn single(q: LsQuery) -> Self {
        Self { terms: vec![(SymbolicExpr::one(), q)], constant: SymbolicExpr::zero() }
    }

    /// Add `c * other`, merging equal queries.
    pub fn add_scaled(&mut self, c: &SymbolicExpr, other: &LsCombination) {
        self.constant = &self.constant + &(c * &other.constant);
        for (oc, q) in &other.terms {
            let add = c * oc;
            match self.terms.iter_mut().find(|(_, sq)| sq == q) {
                Some((sc, _)) => *sc = &*sc + &add,
                None => self.terms.push((add, q.clone())),
            }
        }
        self.terms.retain(|(c, _)| !c.is_zero());
    }

    pub fn scaled(&self, c: &SymbolicExpr) -> Self {
        let mut out = Self::default();
        out.add_scaled(c, self);
        out
    }

    /// Every query has `0 <= sigma <= pi` or `sigma = 2*m*pi`.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(_, q)| is_canonical_angle(&q.sigma))
    }

    /// Sum with each query replaced by `value(query)`.
    pub fn evaluate(&self, mut value: impl FnMut(&LsQuery) -> Result<SymbolicExpr>) -> Result<SymbolicExpr> {
        let mut acc = self.constant.clone();
        for (c, q) in &self.terms {
            acc = acc + c * &value(q)?;
        }
        Ok(acc)
    }
}

/// `0 <= q <= 1`, or `q` a positive even integer.
pub fn is_canonical_angle(a: &RationalAngle) -> bool {
    let q = a.q();
    (*q >= 0 && *q <= 1) || (a.is_integer() && q.numer().is_even() && *q > 0)
}

/// `Ls_n^(k)(2*m*pi +- sigma0)` in terms of `Ls(2*m*pi)` and values at `sigma0`.
pub fn quasiperiod_shift(n: u32, k: u32, m: u32, sigma0: &RationalAngle, plus: bool) -> Result<LsCombination> {
    check_nk(n, k)?;
    let mut out = LsCombination::default();
    if m > 0 {
        out.terms.push((SymbolicExpr::one(), LsQuery::new(n, k, RationalAngle::new(2 * m))?));
    }
    if sigma0.q().is_zero() {
        return Ok(out);
    }
    for j in 0..=k {
        let mut c = Rational::from(binomial(k, j) * Integer::from(2 * m).pow(j));
        if !plus {
            c = -c;
            if (k - j) % 2 == 1 {
                c = -c;
            }
        }
        if c == 0 {
            continue;
        }
        let coeff = SymbolicExpr::pi_pow(j).scale_rational(&c);
        out.add_scaled(&coeff, &LsCombination::single(LsQuery::new(n - j, k - j, sigma0.clone())?));
    }
    Ok(out)
}

/// `Ls_n^(k)(2*m*pi)` in zeta values and `pi`.
pub fn ls_2mpi(n: u32, k: u32, m: u32) -> Result<SymbolicExpr> {
    check_nk(n, k)?;
    let mut acc = SymbolicExpr::zero();
    for j in 0..=k {
        let mut c = Rational::from(binomial(k, j) * (Integer::from(1) << j)) * power_sum(m, j);
        if (k - j) % 2 == 1 {
            c = -c;
        }
        if c == 0 {
            continue;
        }
        acc = acc + SymbolicExpr::pi_pow(j).scale_rational(&c) * ls_2pi(n - j, k - j)?;
    }
    Ok(acc)
}

/// Rewrite `Ls_n^(k)(sigma)` for any rational-multiple-of-pi `sigma` as a canonical combination.
pub fn reduce_query(q: &LsQuery) -> Result<LsCombination> {
    let s = q.sigma.q();
    if s.is_zero() {
        return Ok(LsCombination::default());
    }
    if *s < 0 {
        let flipped = LsQuery::new(q.n, q.k, RationalAngle::new(Rational::from(-s)))?;
        let sign = if q.k.is_multiple_of(2) { -1 } else { 1 };
        return Ok(reduce_query(&flipped)?.scaled(&SymbolicExpr::int(sign)));
    }
    if is_canonical_angle(&q.sigma) {
        return Ok(LsCombination::single(q.clone()));
    }
    let m = Rational::from(s / 2u32).floor();
    let rem = s - &m * Rational::from(2);
    let m = m.numer().to_u32().expect("angle too large");
    let (m, plus, sigma0) = if rem <= 1 { (m, true, rem) } else { (m + 1, false, Rational::from(2) - rem) };
    quasiperiod_shift(q.n, q.k, m, &RationalAngle::new(sigma0), plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;
    use crate::pi::{ls_pi, ls_pi_basic};
    use crate::reduce::{apply_reductions, ReduceMode};

    fn p(s: &str) -> SymbolicExpr {
        parse_expr(s).unwrap()
    }

    fn red(e: SymbolicExpr) -> SymbolicExpr {
        apply_reductions(&e, ReduceMode::Analytic).unwrap()
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(3, 0), 3);
        assert_eq!(power_sum(3, 1), 6);
        assert_eq!(power_sum(4, 2), 30);
    }

    #[test]
    fn shift_at_two_pi_minus_pi() {
        let c = quasiperiod_shift(5, 2, 1, &RationalAngle::pi(), false).unwrap();
        let pi = RationalAngle::pi();
        let q = |n, k, a: &RationalAngle| LsQuery::new(n, k, a.clone()).unwrap();
        let two = RationalAngle::new(2);
        assert_eq!(c.terms.len(), 4);
        assert!(c.terms.contains(&(SymbolicExpr::one(), q(5, 2, &two))));
        assert!(c.terms.contains(&(SymbolicExpr::int(-1), q(5, 2, &pi))));
        assert!(c.terms.contains(&(p("4*Pi"), q(4, 1, &pi))));
        assert!(c.terms.contains(&(p("-4*Pi^2"), q(3, 0, &pi))));
    }

    #[test]
    fn multiples_of_two_pi() {
        for n in 1..=6 {
            for m in 0..=3u32 {
                let lhs = red(ls_2mpi(n, 0, m).unwrap());
                assert_eq!(lhs, red(ls_pi_basic(n).unwrap().scale_rational(&Rational::from(2 * m))));
                if n >= 2 {
                    let lhs = red(ls_2mpi(n, 1, m).unwrap());
                    let rhs = red(ls_pi_basic(n - 1).unwrap() * p("Pi").scale_rational(&Rational::from(2 * m * m)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn reduction_cases() {
        let q = |n, k, a: i64, b: i64| LsQuery::new(n, k, RationalAngle::from_ratio(a, b)).unwrap();
        let c = reduce_query(&q(4, 1, 5, 3)).unwrap();
        assert!(c.is_canonical());
        assert!(c.terms.iter().any(|(_, t)| t.sigma == RationalAngle::new(2)));
        assert!(c.terms.iter().any(|(_, t)| t.sigma == RationalAngle::from_ratio(1, 3)));
        let c = reduce_query(&q(4, 1, -1, 3)).unwrap();
        assert_eq!(c.terms, vec![(SymbolicExpr::one(), q(4, 1, 1, 3))]);
        let c = reduce_query(&q(4, 2, -1, 3)).unwrap();
        assert_eq!(c.terms, vec![(SymbolicExpr::int(-1), q(4, 2, 1, 3))]);
        let same = q(5, 2, 1, 1);
        assert_eq!(reduce_query(&same).unwrap(), LsCombination::single(same));
        let c = reduce_query(&q(3, 1, 3, 1)).unwrap();
        assert!(c.terms.iter().all(|(_, t)| t.sigma == RationalAngle::new(2) || t.sigma == RationalAngle::pi()));
        let five_pi = red(c
            .evaluate(|t| if t.sigma == RationalAngle::pi() { ls_pi(t.n, t.k) } else { ls_2pi(t.n, t.k) })
            .unwrap());
        assert!(five_pi.is_homogeneous_of(3));
    }
}
