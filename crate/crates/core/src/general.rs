//! Log-sine integrals at rational multiples of pi via multiple Clausen and Glaisher values,
//! and log-sinh integrals via polylogarithms at `exp(-t)`.

use std::collections::HashMap;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::algebra::{ConstSymbol, GaussianRational, MultiIndex, RationalAngle, RealPoint, SymbolicExpr};
use crate::error::{check_nk, Error, Result};
use crate::pi::factorial;
use crate::query::LsQuery;
use crate::reduce::part_symbol;

/// `(real-part symbol, imaginary-part symbol)` of `Li_ix(exp(i*q*pi))`.
pub fn split_cl_gl(ix: &MultiIndex, q: &RationalAngle) -> (ConstSymbol, ConstSymbol) {
    (part_symbol(ix, q, true), part_symbol(ix, q, false))
}

/// `Li_ix(exp(i*q*pi))` as `Re + i*Im` in Clausen/Glaisher symbols.
pub fn li_on_circle(ix: &MultiIndex, q: &RationalAngle) -> SymbolicExpr {
    let (re, im) = split_cl_gl(ix, q);
    SymbolicExpr::symbol(re) + SymbolicExpr::i() * SymbolicExpr::symbol(im)
}

/// `(q*pi)^j`.
fn tau_pow(q: &RationalAngle, j: u32) -> SymbolicExpr {
    let c = Rational::from(q.q().pow(j));
    SymbolicExpr::pi_pow(j).scale_rational(&c)
}

fn multinomial(n: u32, parts: &[u32]) -> Integer {
    let rest = n - parts.iter().sum::<u32>();
    let den = parts.iter().chain([&rest]).fold(Integer::from(1), |acc, &p| acc * factorial(p));
    factorial(n) / den
}

fn rq(x: impl Into<Rational>) -> GaussianRational {
    GaussianRational::real(x)
}

/// Both sides of the polylogarithmic identity for `Ls_n^(k)(q*pi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClausenEquation {
    /// `zeta(n-k, {1}^k) - sum_j (-i*tau)^j/j! Li_{2+k-j,{1}^(n-k-2)}(exp(i*tau))`.
    pub lhs: SymbolicExpr,
    /// Terms `coefficient * Ls(query)` whose sum equals `lhs`.
    pub rhs: Vec<(SymbolicExpr, LsQuery)>,
}

/// The identity linking `Ls_n^(k)(tau)` to polylogarithms at `exp(i*tau)`, `tau = q*pi`.
pub fn clausen_equation(n: u32, k: u32, q: &RationalAngle) -> Result<ClausenEquation> {
    check_nk(n, k)?;
    if n - k < 2 {
        return Err(Error::Domain(format!("need n - k >= 2, got n={n}, k={k}")));
    }
    let mut lhs = SymbolicExpr::zeta(MultiIndex::nielsen(n - k, k));
    for j in 0..=k {
        let ix = MultiIndex::nielsen(2 + k - j, n - k - 2);
        let c = GaussianRational::i_pow(-(j as i64)).scale(&Rational::from((1, factorial(j))));
        lhs = lhs - (tau_pow(q, j) * li_on_circle(&ix, q)).scale(&c);
    }
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let front = GaussianRational::i_pow(k as i64 + 1).scale(&Rational::from((sign, factorial(n - 1))));
    let mut rhs = Vec::new();
    for r in 0..n - k {
        for m in 0..=r {
            let half_i = GaussianRational::i_pow(r as i64).scale(&Rational::from((1, Integer::from(1) << r)));
            let c = &front.scale(&Rational::from(multinomial(n - 1, &[k, m, r - m]))) * &half_i;
            let c = if (r - m) % 2 == 1 { -c } else { c };
            let coeff = SymbolicExpr::constant(c) * SymbolicExpr::pi_pow(r - m);
            rhs.push((coeff, LsQuery::new(n - (r - m), k + m, q.clone())?));
        }
    }
    Ok(ClausenEquation { lhs, rhs })
}

/// Result of solving the identity for one integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSolution {
    pub value: SymbolicExpr,
    /// The other component of the solved identity, zero as a number.
    pub complementary: SymbolicExpr,
}

/// Recursive evaluator at a fixed angle, memoized by `(n, k)`.
#[derive(Debug)]
pub struct ClausenSolver {
    q: RationalAngle,
    memo: HashMap<(u32, u32), GeneralSolution>,
}

impl ClausenSolver {
    /// Solver for `tau = q*pi`; `0 < q <= 1`, or `0 < q <= 2` when `extended_angle` is set.
    pub fn new(q: RationalAngle, extended_angle: bool) -> Result<Self> {
        let upper = if extended_angle { 2 } else { 1 };
        if *q.q() <= 0 || *q.q() > upper {
            return Err(Error::Domain(format!(
                "angle {q} outside (0, {}]; reduce the argument first",
                if extended_angle { "2*Pi" } else { "Pi" }
            )));
        }
        Ok(Self { q, memo: HashMap::new() })
    }

    pub fn angle(&self) -> &RationalAngle {
        &self.q
    }

    pub fn solve(&mut self, n: u32, k: u32) -> Result<GeneralSolution> {
        check_nk(n, k)?;
        if let Some(s) = self.memo.get(&(n, k)) {
            return Ok(s.clone());
        }
        let sol = if n - k == 1 {
            let value = tau_pow(&self.q, n).scale_rational(&Rational::from((-1, n)));
            GeneralSolution { value, complementary: SymbolicExpr::zero() }
        } else {
            let eq = clausen_equation(n, k, &self.q)?;
            let mut rest = eq.lhs;
            let mut unknown = None;
            for (c, query) in eq.rhs {
                if query.n == n && query.k == k {
                    unknown = Some(c);
                    continue;
                }
                let v = self.solve(query.n, query.k)?.value;
                rest = rest - c * v;
            }
            let c = unknown.expect("leading term present");
            let c = c.as_constant().expect("leading coefficient is a number");
            let x = rest.scale(&c.inv().expect("nonzero"));
            GeneralSolution { value: x.real_component(), complementary: x.imag_component() }
        };
        self.memo.insert((n, k), sol.clone());
        Ok(sol)
    }
}

/// `Ls_n^(k)(q*pi)` for `0 < q <= 1` in zeta values and Clausen/Glaisher values at `q*pi`.
pub fn ls_general(n: u32, k: u32, q: &RationalAngle) -> Result<SymbolicExpr> {
    Ok(ClausenSolver::new(q.clone(), false)?.solve(n, k)?.value)
}

/// `Lsh_n^(k)(t)` in `t`, zeta values and `Li(exp(-t))`.
pub fn lsh(n: u32, k: u32) -> Result<SymbolicExpr> {
    LshSolver::default().solve(n, k)
}

#[derive(Debug, Default)]
struct LshSolver {
    memo: HashMap<(u32, u32), SymbolicExpr>,
}

impl LshSolver {
    fn solve(&mut self, n: u32, k: u32) -> Result<SymbolicExpr> {
        check_nk(n, k)?;
        if let Some(v) = self.memo.get(&(n, k)) {
            return Ok(v.clone());
        }
        let t = SymbolicExpr::symbol(ConstSymbol::FormalT);
        let value = if n - k == 1 {
            t.pow(n).scale_rational(&Rational::from((-1, n)))
        } else {
            let mut lhs = SymbolicExpr::zeta(MultiIndex::nielsen(n - k, k));
            for j in 0..=k {
                let li = SymbolicExpr::symbol(ConstSymbol::LiRealPoint(
                    MultiIndex::nielsen(2 + k - j, n - k - 2),
                    RealPoint::ExpMinusT,
                ));
                lhs = lhs - (t.pow(j) * li).scale_rational(&Rational::from((1, factorial(j))));
            }
            let sign = if (n + k).is_multiple_of(2) { 1 } else { -1 };
            let front = Rational::from((sign, factorial(n - 1)));
            let mut rest = lhs;
            for r in 1..n - k {
                let c = Rational::from(&front * multinomial(n - 1, &[k, r]))
                    * Rational::from((if r % 2 == 0 { 1 } else { -1 }, Integer::from(1) << r));
                rest = rest - self.solve(n, k + r)?.scale(&rq(c));
            }
            let lead = front * multinomial(n - 1, &[k, 0]);
            rest.scale_rational(&lead.recip())
        };
        self.memo.insert((n, k), value.clone());
        Ok(value)
    }
}

/// Substitute `t = 2 log(rho)`.
pub fn at_two_log_golden(e: &SymbolicExpr) -> SymbolicExpr {
    e.substitute(|s| match s {
        ConstSymbol::FormalT => Some(SymbolicExpr::symbol(ConstSymbol::LogGolden).scale(&rq(2))),
        ConstSymbol::LiRealPoint(ix, RealPoint::ExpMinusT) => {
            Some(SymbolicExpr::symbol(ConstSymbol::LiRealPoint(ix.clone(), RealPoint::GoldenInvSquared)))
        }
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;
    use crate::reduce::{apply_reductions, ReduceMode};

    fn p(s: &str) -> SymbolicExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn parity_split() {
        let q = RationalAngle::from_ratio(1, 3);
        let (re, im) = split_cl_gl(&MultiIndex::nielsen(2, 0), &q);
        assert_eq!((re.kind_name(), im.kind_name()), ("Gl", "Cl"));
        let (re, im) = split_cl_gl(&MultiIndex::nielsen(3, 0), &q);
        assert_eq!((re.kind_name(), im.kind_name()), ("Cl", "Gl"));
        let (re, im) = split_cl_gl(&MultiIndex::nielsen(2, 1), &q);
        assert_eq!((re.kind_name(), im.kind_name()), ("Cl", "Gl"));
    }

    #[test]
    fn top_order_is_power_of_angle() {
        let q = RationalAngle::from_ratio(1, 3);
        assert_eq!(ls_general(3, 2, &q).unwrap(), p("-1/81*Pi^3"));
    }

    #[test]
    fn ls41_general_angle() {
        let q = RationalAngle::from_ratio(1, 2);
        let v = apply_reductions(&ls_general(4, 1, &q).unwrap(), ReduceMode::Analytic).unwrap();
        let expected = p("2*Zeta[3,1] - 2*Gl[{3,1},Pi/2] - Pi*Gl[{2,1},Pi/2] - 1/256*Pi^4 + 1/48*Pi^4 - 1/32*Pi^4");
        assert_eq!(v, expected);
    }

    #[test]
    fn equation_shape() {
        let eq = clausen_equation(5, 1, &RationalAngle::from_ratio(1, 3)).unwrap();
        assert_eq!(eq.rhs.len(), 10);
        let cl = ConstSymbol::Cl(MultiIndex::nielsen(3, 2), RationalAngle::from_ratio(1, 3));
        assert!(eq.lhs.contains_symbol(&cl));
        let z = ConstSymbol::Zeta(MultiIndex::nielsen(4, 1));
        assert!(eq.lhs.contains_symbol(&z));
        assert!(clausen_equation(3, 2, &RationalAngle::pi()).is_err());
    }

    #[test]
    fn golden_log_sinh_before_table() {
        let v = at_two_log_golden(&lsh(3, 1).unwrap());
        let v = apply_reductions(&v, ReduceMode::Analytic).unwrap();
        assert_eq!(v, p("Zeta[3] - 4/3*Log[rho]^3 - Li[{3},rho^-2] - 2*Log[rho]*Li[{2},rho^-2]"));
    }

    #[test]
    fn log_sinh_top_order() {
        assert_eq!(lsh(4, 3).unwrap(), p("-1/4*t^4"));
    }

    #[test]
    fn angle_range() {
        assert!(ClausenSolver::new(RationalAngle::from_ratio(3, 2), false).is_err());
        assert!(ClausenSolver::new(RationalAngle::from_ratio(3, 2), true).is_ok());
        assert!(ClausenSolver::new(RationalAngle::new(0), true).is_err());
    }
}
