//! Command-line front end: parse a query, evaluate, reduce, verify, print.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::Parser;
use rug::ops::Pow;
use rug::{Float, Rational};
use serde::Serialize;

use crate::algebra::{parse_ast, AlgebraError, Ast, ConstSymbol, Spanned, SymbolicExpr, Weight};
use crate::engine::{Engine, EvalOptions};
use crate::error::{Error, Result};
use crate::numerics::{expr_numeric, query_numeric, Bindings, Budget};
use crate::query::{LsQuery, LscQuery, LshArg, LshQuery, Query};
use crate::reduce::{ReduceMode, ReductionTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_TABLE: i32 = 4;

/// A rational combination of integrals plus a constant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryExpr {
    pub terms: Vec<(Rational, Query)>,
    pub constant: SymbolicExpr,
}

impl QueryExpr {
    fn single(q: Query) -> Self {
        Self { terms: vec![(Rational::from(1), q)], constant: SymbolicExpr::zero() }
    }

    fn constant(e: SymbolicExpr) -> Self {
        Self { terms: Vec::new(), constant: e }
    }

    fn scaled(mut self, c: &Rational) -> Self {
        for (tc, _) in &mut self.terms {
            *tc *= c;
        }
        self.constant = self.constant.scale_rational(c);
        self.terms.retain(|(c, _)| *c != 0);
        self
    }

    fn plus(mut self, other: QueryExpr) -> Self {
        for (c, q) in other.terms {
            match self.terms.iter_mut().find(|(_, sq)| *sq == q) {
                Some((sc, _)) => *sc += c,
                None => self.terms.push((c, q)),
            }
        }
        self.terms.retain(|(c, _)| *c != 0);
        self.constant = self.constant + other.constant;
        self
    }

    /// A bare expression with no integrals.
    pub fn is_expr(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for QueryExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, q) in &self.terms {
            let (sign, mag) = if *c < 0 { ("-", Rational::from(-c)) } else { ("+", c.clone()) };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{q}")?;
            first = false;
        }
        if !self.constant.is_zero() || first {
            if first {
                write!(f, "{}", self.constant)?;
            } else {
                write!(f, " + ({})", self.constant)?;
            }
        }
        Ok(())
    }
}

fn perr(pos: usize, message: impl Into<String>) -> Error {
    Error::Algebra(AlgebraError::Parse { pos, message: message.into() })
}

fn arity(args: &[Spanned], allowed: &[usize], name: &str, pos: usize) -> Result<()> {
    if allowed.contains(&args.len()) {
        Ok(())
    } else {
        Err(perr(
            pos,
            format!(
                "{name} takes {} arguments",
                allowed.iter().map(ToString::to_string).collect::<Vec<_>>().join(" or ")
            ),
        ))
    }
}

fn lsh_arg(a: &Spanned) -> Result<LshArg> {
    if matches!(&a.node, Ast::Ident(s) if s.eq_ignore_ascii_case("t")) {
        return Ok(LshArg::Formal);
    }
    let e = a.to_expr()?;
    let two_log_rho = SymbolicExpr::symbol(ConstSymbol::LogGolden).scale_rational(&Rational::from(2));
    if e == two_log_rho {
        Ok(LshArg::TwoLogGolden)
    } else {
        Err(perr(a.pos, "Lsh argument must be t or 2*Log[rho]"))
    }
}

fn integral(name: &str, args: &[Spanned], pos: usize) -> Result<Query> {
    match name {
        "ls" => {
            arity(args, &[3], "Ls", pos)?;
            Ok(Query::Ls(LsQuery::new(args[0].to_u32()?, args[1].to_u32()?, args[2].to_angle()?)?))
        }
        "lsh" => {
            arity(args, &[2, 3], "Lsh", pos)?;
            let t = args.get(2).map(lsh_arg).transpose()?.unwrap_or(LshArg::Formal);
            Ok(Query::Lsh(LshQuery::new(args[0].to_u32()?, args[1].to_u32()?, t)?))
        }
        _ => {
            arity(args, &[2, 3], "Lsc", pos)?;
            if let Some(a) = args.get(2) {
                if *a.to_angle()?.q() != 1 {
                    return Err(Error::Domain("Lsc is only available at Pi".into()));
                }
            }
            Ok(Query::Lsc(LscQuery::new(args[0].to_u32()?, args[1].to_u32()?)?))
        }
    }
}

fn linear(s: &Spanned) -> Result<QueryExpr> {
    Ok(match &s.node {
        Ast::Call(name, args) if matches!(name.as_str(), "ls" | "lsh" | "lsc") => {
            QueryExpr::single(integral(name, args, s.pos)?)
        }
        Ast::Neg(a) => linear(a)?.scaled(&Rational::from(-1)),
        Ast::Add(a, b) => linear(a)?.plus(linear(b)?),
        Ast::Sub(a, b) => linear(a)?.plus(linear(b)?.scaled(&Rational::from(-1))),
        Ast::Mul(a, b) => {
            let (l, r) = (linear(a)?, linear(b)?);
            match (l.is_expr(), r.is_expr()) {
                (true, true) => QueryExpr::constant(l.constant * r.constant),
                (true, false) => {
                    r.scaled(&a.to_rational().map_err(|_| perr(a.pos, "integrals may only be scaled by rationals"))?)
                }
                (false, true) => {
                    l.scaled(&b.to_rational().map_err(|_| perr(b.pos, "integrals may only be scaled by rationals"))?)
                }
                (false, false) => return Err(perr(s.pos, "product of integrals")),
            }
        }
        Ast::Div(a, b) => {
            let l = linear(a)?;
            if l.is_expr() {
                QueryExpr::constant(s.to_expr()?)
            } else {
                let d = b.to_rational()?;
                if d == 0 {
                    return Err(perr(b.pos, "division by zero"));
                }
                l.scaled(&d.recip())
            }
        }
        _ => QueryExpr::constant(s.to_expr()?),
    })
}

/// Parse `Ls(n,k,angle)`, `Lsh(n,k[,t])`, `Lsc(m,n,pi)` and rational combinations of them.
pub fn parse_query(s: &str) -> Result<QueryExpr> {
    linear(&parse_ast(s)?)
}

/// Evaluate a combination with a shared engine.
pub fn evaluate_query(q: &QueryExpr, engine: &mut Engine, opts: &EvalOptions) -> Result<SymbolicExpr> {
    let mut acc = opts.reduce(&q.constant)?;
    for (c, t) in &q.terms {
        acc = acc + engine.evaluate(t, opts)?.scale_rational(c);
    }
    Ok(acc)
}

/// `|numeric(query) - numeric(result)|`.
pub fn residual(q: &QueryExpr, result: &SymbolicExpr, budget: &Budget, bindings: &Bindings) -> Result<Float> {
    let prec = budget.prec();
    let mut lhs = expr_numeric(&q.constant, budget, bindings)?;
    for (c, t) in &q.terms {
        lhs += query_numeric(t, budget, bindings)? * Float::with_val(prec, c);
    }
    Ok((lhs - expr_numeric(result, budget, bindings)?).abs())
}

/// Verification passes when the residual is at most `10^-(digits-5)`.
pub fn within_tolerance(residual: &Float, digits: u32) -> bool {
    *residual <= Float::with_val(residual.prec(), 10u32).pow(-(digits.saturating_sub(5) as i32))
}

#[derive(Debug, Serialize)]
pub struct JsonFactor {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angle: Option<String>,
    pub power: u32,
}

#[derive(Debug, Serialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub factors: Vec<JsonFactor>,
}

#[derive(Debug, Serialize)]
pub struct JsonVerify {
    pub digits: u32,
    pub residual: String,
}

/// Machine-readable result.
#[derive(Debug, Serialize)]
pub struct JsonOutput {
    pub query: String,
    pub expression: Vec<JsonTerm>,
    pub weight: serde_json::Value,
    pub reduced_mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<JsonVerify>,
}

fn factor_json(s: &ConstSymbol, power: u32) -> JsonFactor {
    let angle = match s {
        ConstSymbol::Cl(_, a) | ConstSymbol::Gl(_, a) => Some(a.to_string()),
        _ => None,
    };
    JsonFactor { kind: s.kind_name(), index: s.index().map(|ix| ix.entries().to_vec()), angle, power }
}

/// `expression` field of the JSON output.
pub fn expression_json(e: &SymbolicExpr) -> Vec<JsonTerm> {
    e.terms()
        .map(|(m, c)| JsonTerm {
            coeff: c.to_string(),
            factors: m.factors().iter().map(|(s, p)| factor_json(s, *p)).collect(),
        })
        .collect()
}

pub fn mode_name(mode: ReduceMode) -> &'static str {
    match mode {
        ReduceMode::Off => "off",
        ReduceMode::Analytic => "analytic",
        ReduceMode::Heuristic => "heuristic",
    }
}

fn weight_json(w: Weight) -> serde_json::Value {
    match w {
        Weight::Any => serde_json::Value::Null,
        Weight::Homogeneous(w) => w.into(),
        Weight::Mixed => "mixed".into(),
    }
}

/// Evaluate generalized log-sine integrals in closed form.
#[derive(Debug, Parser)]
#[command(name = "lstoli", version)]
pub struct Args {
    /// e.g. "Ls(5,2,2pi)" or "Ls(6,3,pi/3) - 2*Ls(6,1,pi/3)"
    #[arg(allow_hyphen_values = true)]
    pub query: String,
    /// Apply the verified heuristic reduction table.
    #[arg(long, conflicts_with = "no_reduce")]
    pub heuristic: bool,
    /// Print the unreduced result.
    #[arg(long)]
    pub no_reduce: bool,
    /// Check the result numerically against quadrature.
    #[arg(long)]
    pub verify: bool,
    /// Verification precision in decimal digits.
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    /// Value of the formal parameter t during verification.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    /// Emit JSON on stdout.
    #[arg(long)]
    pub json: bool,
    /// Reduction table file replacing the shipped one.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Solve angles in (pi, 2pi) directly.
    #[arg(long)]
    pub extended_angle: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Algebra(_) | Error::Domain(_) => EXIT_PARSE,
        Error::Table(_) => EXIT_TABLE,
        _ => EXIT_FAILURE,
    }
}

/// Run with parsed arguments, writing to `out`; returns the exit status.
pub fn run(args: &Args, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32 {
    match run_inner(args, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn run_inner(args: &Args, out: &mut impl std::io::Write) -> Result<i32> {
    let query = parse_query(&args.query)?;
    let mode = match (args.no_reduce, args.heuristic) {
        (true, _) => ReduceMode::Off,
        (false, true) => ReduceMode::Heuristic,
        (false, false) => ReduceMode::Analytic,
    };
    let table = match &args.table {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Table(format!("{}: {e}", p.display())))?;
            Some(ReductionTable::load(&text)?)
        }
        None => None,
    };
    let opts = EvalOptions { mode, extended_angle: args.extended_angle, table: table.as_ref() };
    let result = evaluate_query(&query, &mut Engine::new(), &opts)?;
    let mut code = EXIT_OK;
    let verify = if args.verify {
        let budget = Budget::new(args.digits);
        let bindings = Bindings::with_t(Float::with_val(budget.prec(), args.t));
        let r = residual(&query, &result, &budget, &bindings)?;
        if !within_tolerance(&r, args.digits) {
            code = EXIT_VERIFY;
        }
        Some(JsonVerify { digits: args.digits, residual: r.to_string_radix(10, Some(6)) })
    } else {
        None
    };
    let io = |e: std::io::Error| Error::Numeric(format!("write failed: {e}"));
    if args.json {
        let j = JsonOutput {
            query: query.to_string(),
            expression: expression_json(&result),
            weight: weight_json(result.weight()),
            reduced_mode: mode_name(mode),
            verify,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("serializable")).map_err(io)?;
    } else {
        writeln!(out, "{result}").map_err(io)?;
        if let Some(v) = verify {
            writeln!(
                out,
                "residual {} at {} digits{}",
                v.residual,
                v.digits,
                if code == EXIT_VERIFY { " (FAILED)" } else { "" }
            )
            .map_err(io)?;
        }
    }
    Ok(code)
}

/// Parse process arguments and run; the exit status is returned.
pub fn main_with_args<I, T>(it: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(it) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    run(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RationalAngle;

    #[test]
    fn parses_combinations() {
        let q = parse_query("Ls(6,3,pi/3) - 2*Ls(6,1,pi/3)").unwrap();
        assert_eq!(q.terms.len(), 2);
        assert_eq!(q.terms[1].0, -2);
        assert_eq!(q.to_string(), "Ls[6,3,Pi/3] - 2*Ls[6,1,Pi/3]");
        let q = parse_query("Ls(5,2,2pi)").unwrap();
        assert_eq!(q.terms[0].1, Query::Ls(LsQuery::new(5, 2, RationalAngle::new(2)).unwrap()));
        let q = parse_query("LS[4,1,1/3*PI]/2").unwrap();
        assert_eq!(q.terms[0].0, Rational::from((1, 2)));
        let q = parse_query("Lsh(3,1,2log(rho))").unwrap();
        assert_eq!(q.terms[0].1, Query::Lsh(LshQuery::new(3, 1, LshArg::TwoLogGolden).unwrap()));
    }

    #[test]
    fn tolerance() {
        assert!(within_tolerance(&Float::with_val(64, 1e-26), 30));
        assert!(!within_tolerance(&Float::with_val(64, 1e-24), 30));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_query("Ls(3,5,pi)"), Err(Error::Domain(_))));
        assert!(matches!(parse_query("Ls(3,1,pi"), Err(Error::Algebra(_))));
        assert!(matches!(parse_query("Ls(3,1,pi)*Ls(2,0,pi)"), Err(Error::Algebra(_))));
        assert!(matches!(parse_query("Lsc(2,2,pi/2)"), Err(Error::Domain(_))));
    }
}
