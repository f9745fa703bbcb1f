//! Building reduction rules by integer relation search over monomial bases.

use rug::{Float, Integer, Rational};

use super::analytic::{analytic_rule, cl_is_real_part};
use super::pslq::pslq;
use super::table::{Provenance, ReductionRule};
use crate::algebra::{ConstSymbol, GaussianRational, Monomial, MultiIndex, RationalAngle, RealPoint, SymbolicExpr};
use crate::error::{Error, Result};
use crate::numerics::{symbol_numeric, Bindings, Budget};

/// Whether `s` changes sign under `tau -> -tau` (counting `pi` as odd).
pub fn is_odd_atom(s: &ConstSymbol) -> bool {
    match s {
        ConstSymbol::Pi => true,
        ConstSymbol::Cl(ix, _) => !cl_is_real_part(ix),
        ConstSymbol::Gl(ix, _) => cl_is_real_part(ix),
        _ => false,
    }
}

fn parity(m: &Monomial) -> u32 {
    m.factors().iter().filter(|(s, _)| is_odd_atom(s)).map(|(_, e)| e).sum::<u32>() % 2
}

/// All monomials of weight `w` in `atoms` whose parity matches `odd`.
pub fn monomials(atoms: &[ConstSymbol], w: u32, odd: bool) -> Vec<Monomial> {
    fn go(atoms: &[ConstSymbol], w: u32, acc: &mut Vec<(ConstSymbol, u32)>, out: &mut Vec<Monomial>) {
        if w == 0 {
            out.push(Monomial::from_factors(acc.iter().cloned()));
            return;
        }
        let Some((first, rest)) = atoms.split_first() else { return };
        let aw = first.weight();
        let mut e = 0;
        while e * aw <= w {
            if e > 0 {
                acc.push((first.clone(), e));
            }
            go(rest, w - e * aw, acc, out);
            if e > 0 {
                acc.pop();
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(atoms, w, &mut Vec::new(), &mut out);
    out.retain(|m| (parity(m) == 1) == odd);
    out.sort();
    out
}

/// A set of targets reduced against a growing list of irreducible atoms.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub atoms: Vec<ConstSymbol>,
    pub targets: Vec<ConstSymbol>,
}

/// Outcome of a derivation run.
#[derive(Clone, Debug, Default)]
pub struct Derivation {
    pub rules: Vec<ReductionRule>,
    /// Targets for which no relation was found; they join the atoms.
    pub new_heads: Vec<ConstSymbol>,
}

/// Precision settings for [`derive`].
#[derive(Clone, Copy, Debug)]
pub struct DeriveConfig {
    pub work_digits: u32,
    pub verify_digits: u32,
}

impl Default for DeriveConfig {
    fn default() -> Self {
        Self { work_digits: 200, verify_digits: 60 }
    }
}

/// Try to express one symbol in `basis`; `None` when no relation is found.
pub fn find_reduction(target: &ConstSymbol, basis: &[Monomial], digits: u32) -> Result<Option<SymbolicExpr>> {
    let budget = Budget::new(digits);
    let bindings = Bindings::default();
    let prec = budget.prec();
    let mut v = vec![symbol_numeric(target, &budget, &bindings)?];
    for m in basis {
        let mut x = Float::with_val(prec, 1u32);
        for (s, e) in m.factors() {
            x *= Float::with_val(prec, symbol_numeric(s, &budget, &bindings)?.pow_u(*e));
        }
        v.push(x);
    }
    let work = ((prec as f64) * std::f64::consts::LOG10_2) as u32;
    let max_coeff = ((work.saturating_sub(10)) / v.len() as u32).clamp(1, 30);
    let Some(rel) = pslq(&v, max_coeff)? else { return Ok(None) };
    if rel[0] == 0 {
        return Err(Error::Table(format!("basis for {target} is linearly dependent: {rel:?}")));
    }
    let lead = Integer::from(-&rel[0]);
    let mut rhs = SymbolicExpr::zero();
    for (c, m) in rel[1..].iter().zip(basis) {
        if *c != 0 {
            rhs =
                rhs + SymbolicExpr::term(GaussianRational::real(Rational::from((c.clone(), lead.clone()))), m.clone());
        }
    }
    Ok(Some(rhs))
}

trait PowU {
    fn pow_u(self, e: u32) -> Float;
}

impl PowU for Float {
    fn pow_u(self, e: u32) -> Float {
        use rug::ops::Pow;
        self.pow(e)
    }
}

/// Reduce the family's targets in order, adding irreducible ones as atoms.
pub fn derive(family: &Family, config: DeriveConfig) -> Result<Derivation> {
    let mut atoms = family.atoms.clone();
    let mut out = Derivation::default();
    for t in &family.targets {
        if analytic_rule(t).is_some() || atoms.contains(t) {
            continue;
        }
        let basis = monomials(&atoms, t.weight(), is_odd_atom(t));
        match find_reduction(t, &basis, config.work_digits)? {
            Some(rhs) => {
                let rule = ReductionRule {
                    lhs: t.clone(),
                    rhs,
                    provenance: Provenance::Pslq,
                    digits: config.verify_digits,
                    source: format!(
                        "{} basis of {} monomials at {} digits",
                        family.name,
                        basis.len(),
                        config.work_digits
                    ),
                };
                let r = rule.residual(config.verify_digits)?;
                let limit = Float::with_val(r.prec(), 10u32).pow_u(config.verify_digits - 10).recip();
                if r > limit {
                    return Err(Error::Table(format!("{t}: derived rule fails re-verification")));
                }
                out.rules.push(rule);
            }
            None => {
                atoms.push(t.clone());
                out.new_heads.push(t.clone());
            }
        }
    }
    Ok(out)
}

fn nielsen_by_weight(
    weights: std::ops::RangeInclusive<u32>,
    min_ones: u32,
    mut keep: impl FnMut(u32, u32) -> bool,
) -> Vec<MultiIndex> {
    let mut v = Vec::new();
    for w in weights {
        for b in min_ones..w {
            let a = w - b;
            if a >= 2 && keep(a, b) {
                v.push(MultiIndex::nielsen(a, b));
            }
        }
    }
    v.sort_by_key(|ix| (ix.weight(), ix.depth()));
    v
}

fn zetas(ws: &[u32]) -> Vec<ConstSymbol> {
    ws.iter().map(|&w| ConstSymbol::Zeta(MultiIndex::nielsen(w, 0))).collect()
}

/// Nielsen multiple zeta values `zeta(a, {1}^b)` up to weight `max_w`.
pub fn mzv_family(max_w: u32) -> Family {
    let odd: Vec<u32> = (3..=max_w).step_by(2).collect();
    let mut atoms = vec![ConstSymbol::Pi];
    atoms.extend(zetas(&odd));
    let targets = nielsen_by_weight(4..=max_w, 1, |a, b| b + 2 <= a).into_iter().map(ConstSymbol::Zeta).collect();
    Family { name: "mzv".into(), atoms, targets }
}

/// Alternating Nielsen sums `Li_{a,{1}^b}(-1)` up to weight `max_w`.
pub fn alternating_family(max_w: u32) -> Family {
    let li = |a, b| ConstSymbol::LiMinusOne(MultiIndex::nielsen(a, b));
    let mut atoms = vec![ConstSymbol::Pi, ConstSymbol::Log2];
    atoms.extend(zetas(&(3..=max_w).step_by(2).collect::<Vec<_>>()));
    atoms.extend([li(3, 1), li(3, 2), li(5, 1), li(3, 3)].into_iter().filter(|s| s.weight() <= max_w));
    let targets = nielsen_by_weight(3..=max_w, 1, |_, _| true).into_iter().map(ConstSymbol::LiMinusOne).collect();
    Family { name: "alternating".into(), atoms, targets }
}

/// Clausen and Glaisher values of Nielsen index at `pi/3` up to weight `max_w`.
pub fn pi_third_family(max_w: u32) -> Family {
    let q = RationalAngle::from_ratio(1, 3);
    let cl = |a| ConstSymbol::Cl(MultiIndex::nielsen(a, 0), q.clone());
    let gl = |a, b| ConstSymbol::Gl(MultiIndex::nielsen(a, b), q.clone());
    let mut atoms = vec![ConstSymbol::Pi];
    atoms.extend(zetas(&(3..=max_w).step_by(2).collect::<Vec<_>>()));
    atoms.extend([cl(2), cl(4), cl(6), gl(4, 1), gl(6, 1)].into_iter().filter(|s| s.weight() <= max_w));
    let mut targets = Vec::new();
    for ix in nielsen_by_weight(2..=max_w, 0, |_, _| true) {
        targets.push(ConstSymbol::Cl(ix.clone(), q.clone()));
        targets.push(ConstSymbol::Gl(ix, q.clone()));
    }
    Family { name: "pi/3".into(), atoms, targets }
}

/// `Li_2` and `Li_3` at `rho^-2`.
pub fn golden_family() -> Family {
    let at = |a| ConstSymbol::LiRealPoint(MultiIndex::nielsen(a, 0), RealPoint::GoldenInvSquared);
    Family {
        name: "golden".into(),
        atoms: vec![ConstSymbol::Pi, ConstSymbol::LogGolden, ConstSymbol::Zeta(MultiIndex::nielsen(3, 0))],
        targets: vec![at(2), at(3)],
    }
}

/// The families behind the shipped table, each with its working precision.
pub fn shipped_families() -> Vec<(Family, u32)> {
    vec![(mzv_family(8), 120), (alternating_family(6), 160), (pi_third_family(7), 320), (golden_family(), 80)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    #[test]
    fn monomial_enumeration() {
        let atoms = [ConstSymbol::Pi, ConstSymbol::Zeta(MultiIndex::nielsen(3, 0))];
        assert_eq!(monomials(&atoms, 6, false).len(), 2);
        assert_eq!(monomials(&atoms, 4, true).len(), 1);
        assert_eq!(monomials(&atoms, 4, false).len(), 1);
    }

    #[test]
    fn golden_dilog() {
        let fam = golden_family();
        let d = derive(&fam, DeriveConfig { work_digits: 60, verify_digits: 40 }).unwrap();
        assert!(d.new_heads.is_empty());
        assert_eq!(d.rules[0].rhs, parse_expr("1/15*Pi^2 - Log[rho]^2").unwrap());
    }
}
