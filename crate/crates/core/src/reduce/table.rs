//! Verified reduction rules and their line-record file format.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rug::ops::Pow;
use rug::Float;

use super::analytic::analytic_rule;
use crate::algebra::{parse_expr, ConstSymbol, SymbolicExpr};
use crate::error::{Error, Result};
use crate::numerics::{expr_numeric, symbol_numeric, Bindings, Budget};

const HEADER: &str = "# logsine reduction table v1";

/// How a rule was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Analytic,
    Pslq,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Analytic => "analytic",
            Provenance::Pslq => "pslq",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Provenance::Analytic),
            "pslq" => Ok(Provenance::Pslq),
            _ => Err(Error::Table(format!("unknown provenance {s:?}"))),
        }
    }
}

/// One rewrite `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionRule {
    pub lhs: ConstSymbol,
    pub rhs: SymbolicExpr,
    pub provenance: Provenance,
    /// Digits to which the rule was checked numerically; 0 for analytic rules.
    pub digits: u32,
    pub source: String,
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} := {} ; provenance={} ; digits={} ; source={}",
            self.lhs, self.rhs, self.provenance, self.digits, self.source
        )
    }
}

fn field<'a>(part: Option<&'a str>, key: &str, line: usize) -> Result<&'a str> {
    part.map(str::trim)
        .and_then(|p| p.strip_prefix(key))
        .and_then(|p| p.strip_prefix('='))
        .ok_or_else(|| Error::Table(format!("line {line}: expected `{key}=...`")))
}

impl ReductionRule {
    /// Parse one record; `line` is only used in messages.
    pub fn parse(text: &str, line: usize) -> Result<Self> {
        let mut parts = text.split(" ; ");
        let head = parts.next().unwrap_or_default();
        let (lhs, rhs) =
            head.split_once(" := ").ok_or_else(|| Error::Table(format!("line {line}: expected `lhs := rhs`")))?;
        let lhs_expr = parse_expr(lhs).map_err(|e| Error::Table(format!("line {line}: {e}")))?;
        let lhs_sym = match lhs_expr.symbols().into_iter().collect::<Vec<_>>().as_slice() {
            [s] if lhs_expr == SymbolicExpr::symbol(s.clone()) => s.clone(),
            _ => return Err(Error::Table(format!("line {line}: left side must be a single symbol, got {lhs}"))),
        };
        let rhs = parse_expr(rhs).map_err(|e| Error::Table(format!("line {line}: {e}")))?;
        let provenance = field(parts.next(), "provenance", line)?.parse()?;
        let digits = field(parts.next(), "digits", line)?
            .parse()
            .map_err(|_| Error::Table(format!("line {line}: bad digits")))?;
        let source = field(parts.next(), "source", line)?.to_string();
        if parts.next().is_some() {
            return Err(Error::Table(format!("line {line}: trailing fields")));
        }
        Ok(Self { lhs: lhs_sym, rhs, provenance, digits, source })
    }

    /// `|lhs - rhs|` evaluated at `digits`.
    pub fn residual(&self, digits: u32) -> Result<Float> {
        let budget = Budget::new(digits);
        let bindings = Bindings::default();
        let l = symbol_numeric(&self.lhs, &budget, &bindings)?;
        let r = expr_numeric(&self.rhs, &budget, &bindings)?;
        Ok((l - r).abs())
    }
}

/// `|numeric(lhs) - numeric(rhs)|` at `digits`.
pub fn verify_rule(rule: &ReductionRule, digits: u32) -> Result<Float> {
    rule.residual(digits)
}

/// A closed set of rules, at most one per symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTable {
    comments: Vec<String>,
    rules: BTreeMap<ConstSymbol, ReductionRule>,
}

impl ReductionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, s: &ConstSymbol) -> Option<&ReductionRule> {
        self.rules.get(s)
    }

    pub fn rules(&self) -> impl Iterator<Item = &ReductionRule> {
        self.rules.values()
    }

    pub fn add_comment(&mut self, c: impl Into<String>) {
        self.comments.push(c.into());
    }

    /// Insert without checks; see [`ReductionTable::check`].
    pub fn insert(&mut self, rule: ReductionRule) {
        self.rules.insert(rule.lhs.clone(), rule);
    }

    /// Parse records without numeric verification.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => return Err(Error::Table(format!("missing header `{HEADER}`"))),
        }
        let mut table = Self::new();
        for (i, line) in lines {
            if let Some(c) = line.strip_prefix("# ") {
                table.comments.push(c.to_string());
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let rule = ReductionRule::parse(line, i + 1)?;
            if table.rules.contains_key(&rule.lhs) {
                return Err(Error::Table(format!("line {}: duplicate rule for {}", i + 1, rule.lhs)));
            }
            table.insert(rule);
        }
        table.check()?;
        Ok(table)
    }

    /// Parse, check closure, and re-verify every pslq rule at its recorded precision.
    pub fn load(text: &str) -> Result<Self> {
        let table = Self::parse(text)?;
        table.verify()?;
        Ok(table)
    }

    /// Structural checks: weights, transient symbols, closure.
    pub fn check(&self) -> Result<()> {
        for rule in self.rules.values() {
            let w = rule.lhs.weight();
            if !rule.rhs.is_zero() && !rule.rhs.is_homogeneous_of(w) {
                return Err(Error::Table(format!("{}: right side is not of weight {w}", rule.lhs)));
            }
            if rule.rhs.has_transient() || rule.lhs.is_transient() {
                return Err(Error::Table(format!("{}: transient symbol", rule.lhs)));
            }
            if !rule.rhs.is_real() {
                return Err(Error::Table(format!("{}: complex coefficient", rule.lhs)));
            }
            if analytic_rule(&rule.lhs).is_some() {
                return Err(Error::Table(format!("{}: already reduced by a proven rule", rule.lhs)));
            }
            for s in rule.rhs.symbols() {
                if self.rules.contains_key(&s) || analytic_rule(&s).is_some() {
                    return Err(Error::Table(format!("{}: right side symbol {s} is itself reducible", rule.lhs)));
                }
            }
        }
        Ok(())
    }

    /// Numeric re-verification of every pslq rule.
    pub fn verify(&self) -> Result<()> {
        for rule in self.rules.values().filter(|r| r.provenance == Provenance::Pslq) {
            if rule.digits < 20 {
                return Err(Error::Table(format!("{}: recorded precision {} too low", rule.lhs, rule.digits)));
            }
            let residual = rule.residual(rule.digits)?;
            let limit = Float::with_val(residual.prec(), 10u32).pow(-((rule.digits - 10) as i32));
            if residual > limit {
                return Err(Error::Table(format!(
                    "{}: residual {} exceeds 1e-{}",
                    rule.lhs,
                    residual.to_string_radix(10, Some(6)),
                    rule.digits - 10
                )));
            }
        }
        Ok(())
    }

    /// One rewrite step for `s`.
    pub fn rewrite(&self, s: &ConstSymbol) -> Option<SymbolicExpr> {
        self.rules.get(s).map(|r| r.rhs.clone())
    }
}

impl fmt::Display for ReductionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        for c in &self.comments {
            writeln!(f, "# {c}")?;
        }
        for rule in self.rules.values() {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// The shipped table text.
pub const DEFAULT_TABLE: &str = include_str!("../../data/reductions.table");

/// The shipped table, verified on first use.
pub fn default_table() -> Result<&'static ReductionTable> {
    static TABLE: OnceLock<Result<ReductionTable>> = OnceLock::new();
    TABLE.get_or_init(|| ReductionTable::load(DEFAULT_TABLE)).as_ref().map_err(Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MultiIndex, RationalAngle};

    fn p(s: &str) -> SymbolicExpr {
        parse_expr(s).unwrap()
    }

    fn rule(text: &str) -> ReductionRule {
        ReductionRule::parse(text, 1).unwrap()
    }

    #[test]
    fn shipped_table_round_trips() {
        let t = ReductionTable::parse(DEFAULT_TABLE).unwrap();
        assert_eq!(t.to_string(), DEFAULT_TABLE);
        for r in t.rules() {
            assert_eq!(rule(&r.to_string()), *r);
        }
    }

    #[test]
    fn shipped_entries() {
        let t = default_table().unwrap();
        let third = RationalAngle::from_ratio(1, 3);
        let cases = [
            (ConstSymbol::Zeta(MultiIndex::nielsen(3, 1)), "Pi^4/360"),
            (ConstSymbol::Zeta(MultiIndex::nielsen(5, 1)), "Pi^6/1260 - Zeta[3]^2/2"),
            (ConstSymbol::Zeta(MultiIndex::nielsen(4, 1)), "2*Zeta[5] - Pi^2*Zeta[3]/6"),
            (ConstSymbol::Gl(MultiIndex::nielsen(2, 1), third.clone()), "Pi^3/324"),
            (ConstSymbol::Gl(MultiIndex::nielsen(3, 1), third), "-23/19440*Pi^4"),
            (ConstSymbol::LiMinusOne(MultiIndex::nielsen(4, 1)), "Pi^2*Zeta[3]/12 - 29/32*Zeta[5]"),
            (
                ConstSymbol::LiRealPoint(MultiIndex::nielsen(2, 0), crate::algebra::RealPoint::GoldenInvSquared),
                "Pi^2/15 - Log[rho]^2",
            ),
            (
                ConstSymbol::LiRealPoint(MultiIndex::nielsen(3, 0), crate::algebra::RealPoint::GoldenInvSquared),
                "4/5*Zeta[3] - 2/15*Pi^2*Log[rho] + 2/3*Log[rho]^3",
            ),
        ];
        for (s, v) in cases {
            assert_eq!(t.rewrite(&s), Some(p(v)), "{s}");
        }
        for head in
            ["Li[{3,1,1},-1]", "Li[{5,1},-1]", "Li[{3,1,1,1},-1]", "Gl[{4,1},Pi/3]", "Gl[{6,1},Pi/3]", "Cl[{2},Pi/3]"]
        {
            let s = p(head).symbols().into_iter().next().unwrap();
            assert!(t.get(&s).is_none(), "{head}");
        }
    }

    #[test]
    fn gl31_residual() {
        let r = rule("Gl[{3,1},Pi/3] := -23/19440*Pi^4 ; provenance=pslq ; digits=60 ; source=test");
        let res = verify_rule(&r, 60).unwrap();
        assert!(res < Float::with_val(64, 1e-50));
    }

    #[test]
    fn corrupted_rule_is_rejected() {
        let good = "Zeta[3,1] := 1/360*Pi^4 ; provenance=pslq ; digits=60 ; source=test";
        let bad = "Zeta[3,1] := 361/360*Pi^4 ; provenance=pslq ; digits=60 ; source=test";
        assert!(verify_rule(&rule(good), 60).unwrap() < Float::with_val(64, 1e-50));
        assert!(verify_rule(&rule(bad), 60).unwrap() > Float::with_val(64, 1e-3));
        let text = format!("{HEADER}\n{bad}\n");
        assert!(ReductionTable::parse(&text).is_ok());
        assert!(matches!(ReductionTable::load(&text), Err(Error::Table(_))));
        let low = format!("{HEADER}\nZeta[3,1] := 1/360*Pi^4 ; provenance=pslq ; digits=12 ; source=test\n");
        assert!(ReductionTable::load(&low).is_err());
    }

    #[test]
    fn structural_violations() {
        let bad = [
            "Zeta[3,1] := 1/360*Pi^3 ; provenance=pslq ; digits=60 ; source=x",
            "Zeta[3,1] := 1/360*Pi^4 + Zeta[5,1] ; provenance=pslq ; digits=60 ; source=x\nZeta[5,1] := 1/1260*Pi^6 - 1/2*Zeta[3]^2 ; provenance=pslq ; digits=60 ; source=x",
            "Zeta[4] := 1/90*Pi^4 ; provenance=analytic ; digits=0 ; source=x",
            "Zeta[3,1] := 1/360*Pi^4 + Zeta[4] - 1/90*Pi^4 ; provenance=pslq ; digits=60 ; source=x",
            "Zeta[3,1] := 1/360*I*Pi^4 ; provenance=pslq ; digits=60 ; source=x",
            "Zeta[3,1] := 1/360*Pi^4 ; provenance=guess ; digits=60 ; source=x",
            "Zeta[3,1] + Pi := 1/360*Pi^4 ; provenance=pslq ; digits=60 ; source=x",
            "Zeta[3,1] := 1/360*Pi^4 ; digits=60 ; source=x",
        ];
        for b in bad {
            assert!(ReductionTable::parse(&format!("{HEADER}\n{b}\n")).is_err(), "{b}");
        }
        assert!(ReductionTable::parse("Zeta[3,1] := 1/360*Pi^4 ; provenance=pslq ; digits=60 ; source=x").is_err());
    }

    #[test]
    fn confluence_under_random_order() {
        use crate::reduce::{analytic_rule, apply_reductions_with, ReduceMode};
        let t = default_table().unwrap();
        let mut seed = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move |n: usize| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % n as u64) as usize
        };
        let step = |s: &ConstSymbol| analytic_rule(s).or_else(|| t.rewrite(s));
        for r in t.rules().filter(|r| r.lhs.weight() <= 7) {
            let start = SymbolicExpr::symbol(r.lhs.clone()) + r.rhs.clone() * SymbolicExpr::pi();
            let canonical = apply_reductions_with(&start, ReduceMode::Heuristic, Some(t));
            for _ in 0..4 {
                let mut e = start.clone();
                loop {
                    let live: Vec<ConstSymbol> = e.symbols().into_iter().filter(|s| step(s).is_some()).collect();
                    if live.is_empty() {
                        break;
                    }
                    let pick = live[next(live.len())].clone();
                    let v = step(&pick).unwrap();
                    e = e.substitute(|s| (*s == pick).then(|| v.clone()));
                }
                assert_eq!(e, canonical, "{}", r.lhs);
            }
        }
    }
}
