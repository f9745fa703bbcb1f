//! Canonical text input: a small expression grammar shared by table files and queries.

use rug::{Integer, Rational};

use super::expr::SymbolicExpr;
use super::number::GaussianRational;
use super::symbol::{ConstSymbol, MultiIndex, RationalAngle, RealPoint};
use super::AlgebraError;

/// Parsed but uninterpreted syntax tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Num(Integer),
    Ident(String),
    Call(String, Vec<Spanned>),
    List(Vec<Spanned>),
    Neg(Box<Spanned>),
    Add(Box<Spanned>, Box<Spanned>),
    Sub(Box<Spanned>, Box<Spanned>),
    Mul(Box<Spanned>, Box<Spanned>),
    Div(Box<Spanned>, Box<Spanned>),
    Pow(Box<Spanned>, Box<Spanned>),
}

/// An AST node with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Spanned {
    pub pos: usize,
    pub node: Ast,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Integer),
    Ident(String),
    Sym(char),
    End,
}

const FUNCTIONS: &[&str] = &["zeta", "li", "cl", "gl", "log", "exp", "ls", "lsh", "lsc"];

fn err(pos: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { pos, message: message.into() }
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: Integer = s[start..i].parse().map_err(|_| err(start, "bad integer"))?;
            out.push((start, Tok::Num(v)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()[]{},".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character '{c}'")));
        }
    }
    out.push((s.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), AlgebraError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected '{c}'")))
        }
    }

    fn sum(&mut self) -> Result<Spanned, AlgebraError> {
        let pos = self.pos();
        let mut lhs = if self.eat('-') {
            let t = self.product()?;
            Spanned { pos, node: Ast::Neg(Box::new(t)) }
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                let rhs = self.product()?;
                lhs = Spanned { pos, node: Ast::Add(Box::new(lhs), Box::new(rhs)) };
            } else if self.eat('-') {
                let rhs = self.product()?;
                lhs = Spanned { pos, node: Ast::Sub(Box::new(lhs), Box::new(rhs)) };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn product(&mut self) -> Result<Spanned, AlgebraError> {
        let pos = self.pos();
        let mut lhs = self.power()?;
        loop {
            if self.eat('*') {
                let rhs = self.power()?;
                lhs = Spanned { pos, node: Ast::Mul(Box::new(lhs), Box::new(rhs)) };
            } else if self.eat('/') {
                let rhs = self.power()?;
                lhs = Spanned { pos, node: Ast::Div(Box::new(lhs), Box::new(rhs)) };
            } else if self.starts_primary() {
                let rhs = self.power()?;
                lhs = Spanned { pos, node: Ast::Mul(Box::new(lhs), Box::new(rhs)) };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Spanned, AlgebraError> {
        let pos = self.pos();
        let base = self.primary()?;
        if self.eat('^') {
            let epos = self.pos();
            let exp = if self.eat('-') {
                let e = self.primary()?;
                Spanned { pos: epos, node: Ast::Neg(Box::new(e)) }
            } else {
                self.primary()?
            };
            return Ok(Spanned { pos, node: Ast::Pow(Box::new(base), Box::new(exp)) });
        }
        Ok(base)
    }

    fn args(&mut self, close: char) -> Result<Vec<Spanned>, AlgebraError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.sum()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn primary(&mut self) -> Result<Spanned, AlgebraError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v) => Ok(Spanned { pos, node: Ast::Num(v) }),
            Tok::Ident(name) => {
                let lower = name.to_ascii_lowercase();
                if FUNCTIONS.contains(&lower.as_str()) {
                    let close = if self.eat('[') {
                        ']'
                    } else if self.eat('(') {
                        ')'
                    } else {
                        return Err(err(self.pos(), format!("expected arguments after {name}")));
                    };
                    let args = self.args(close)?;
                    return Ok(Spanned { pos, node: Ast::Call(lower, args) });
                }
                Ok(Spanned { pos, node: Ast::Ident(name) })
            }
            Tok::Sym('(') => {
                let inner = self.sum()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::Sym('{') => {
                let items = self.args('}')?;
                Ok(Spanned { pos, node: Ast::List(items) })
            }
            Tok::End => Err(err(pos, "unexpected end of input")),
            Tok::Sym(c) => Err(err(pos, format!("unexpected '{c}'"))),
        }
    }
}

/// Parse text into an uninterpreted syntax tree.
pub fn parse_ast(s: &str) -> Result<Spanned, AlgebraError> {
    let mut p = Parser { toks: lex(s)?, at: 0 };
    let out = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(err(p.pos(), "trailing input"));
    }
    Ok(out)
}

/// Parse canonical (or hand-written) expression text.
pub fn parse_expr(s: &str) -> Result<SymbolicExpr, AlgebraError> {
    to_expr(&parse_ast(s)?)
}

impl Spanned {
    /// Interpret as a symbolic expression.
    pub fn to_expr(&self) -> Result<SymbolicExpr, AlgebraError> {
        to_expr(self)
    }

    /// Interpret as a nonnegative machine integer.
    pub fn to_u32(&self) -> Result<u32, AlgebraError> {
        let c = self.to_rational()?;
        if *c.denom() != 1 {
            return Err(err(self.pos, "expected an integer"));
        }
        c.numer().to_u32().ok_or_else(|| err(self.pos, "expected a nonnegative integer"))
    }

    /// Interpret as an exact rational constant.
    pub fn to_rational(&self) -> Result<Rational, AlgebraError> {
        let c = to_expr(self)?
            .as_constant()
            .filter(GaussianRational::is_real)
            .ok_or_else(|| err(self.pos, "expected a rational number"))?;
        Ok(c.re)
    }

    /// Interpret as `q*Pi`, returning `q`.
    pub fn to_angle(&self) -> Result<RationalAngle, AlgebraError> {
        let e = to_expr(self)?;
        if e.is_zero() {
            return Ok(RationalAngle::new(0));
        }
        let (coeff, rest) =
            e.linear_in(&ConstSymbol::Pi).ok_or_else(|| err(self.pos, "expected a rational multiple of Pi"))?;
        match coeff.as_constant() {
            Some(c) if rest.is_zero() && c.is_real() => Ok(RationalAngle::new(c.re)),
            _ => Err(err(self.pos, "expected a rational multiple of Pi")),
        }
    }

    fn index(&self) -> Result<MultiIndex, AlgebraError> {
        let items: Vec<&Spanned> = match &self.node {
            Ast::List(items) => items.iter().collect(),
            _ => vec![self],
        };
        let v = items.iter().map(|x| x.to_u32()).collect::<Result<Vec<_>, _>>()?;
        MultiIndex::new(v).map_err(|e| err(self.pos, e.to_string()))
    }

    fn ident_is(&self, name: &str) -> bool {
        matches!(&self.node, Ast::Ident(s) if s.eq_ignore_ascii_case(name))
    }
}

fn constant_divisor(e: &SymbolicExpr, pos: usize) -> Result<GaussianRational, AlgebraError> {
    e.as_constant().and_then(|c| c.inv()).ok_or_else(|| err(pos, "division only by nonzero numbers"))
}

fn real_point(arg: &Spanned) -> Option<RealPoint> {
    match &arg.node {
        Ast::Call(f, a) if f == "exp" && a.len() == 1 => match &a[0].node {
            Ast::Neg(inner) if inner.ident_is("t") => Some(RealPoint::ExpMinusT),
            _ => None,
        },
        Ast::Pow(b, e) if b.ident_is("rho") => match &e.node {
            Ast::Neg(inner) if matches!(&inner.node, Ast::Num(v) if *v == 2) => Some(RealPoint::GoldenInvSquared),
            _ => None,
        },
        _ => None,
    }
}

fn call(name: &str, args: &[Spanned], pos: usize) -> Result<SymbolicExpr, AlgebraError> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(err(pos, format!("{name} expects {n} argument(s)")))
        }
    };
    match name {
        "zeta" => {
            let ix = if args.len() == 1 {
                args[0].index()?
            } else {
                let v = args.iter().map(Spanned::to_u32).collect::<Result<Vec<_>, _>>()?;
                MultiIndex::new(v).map_err(|e| err(pos, e.to_string()))?
            };
            if !ix.is_admissible() {
                return Err(err(pos, "divergent zeta value"));
            }
            Ok(SymbolicExpr::zeta(ix))
        }
        "li" => {
            arity(2)?;
            let ix = args[0].index()?;
            if let Some(point) = real_point(&args[1]) {
                return Ok(SymbolicExpr::symbol(ConstSymbol::LiRealPoint(ix, point)));
            }
            let z = args[1].to_rational().map_err(|_| err(args[1].pos, "unsupported Li argument"))?;
            if z == -1 {
                Ok(SymbolicExpr::li_at_minus_one(ix))
            } else if z == 1 && ix.is_admissible() {
                Ok(SymbolicExpr::li_at_one(ix))
            } else {
                Err(err(args[1].pos, "unsupported Li argument"))
            }
        }
        "cl" | "gl" => {
            arity(2)?;
            let ix = args[0].index()?;
            let a = args[1].to_angle()?;
            Ok(SymbolicExpr::symbol(if name == "cl" { ConstSymbol::Cl(ix, a) } else { ConstSymbol::Gl(ix, a) }))
        }
        "log" => {
            arity(1)?;
            let a = &args[0];
            if a.ident_is("pi") {
                Ok(SymbolicExpr::symbol(ConstSymbol::LogPi))
            } else if a.ident_is("rho") {
                Ok(SymbolicExpr::symbol(ConstSymbol::LogGolden))
            } else if matches!(&a.node, Ast::Num(v) if *v == 2) {
                Ok(SymbolicExpr::symbol(ConstSymbol::Log2))
            } else {
                Err(err(a.pos, "unsupported logarithm"))
            }
        }
        _ => Err(err(pos, format!("{name} is not a constant"))),
    }
}

fn to_expr(s: &Spanned) -> Result<SymbolicExpr, AlgebraError> {
    Ok(match &s.node {
        Ast::Num(v) => SymbolicExpr::rational(Rational::from(v.clone())),
        Ast::Ident(name) => match name.to_ascii_lowercase().as_str() {
            "pi" => SymbolicExpr::pi(),
            "i" => SymbolicExpr::i(),
            "t" => SymbolicExpr::symbol(ConstSymbol::FormalT),
            "eulergamma" => SymbolicExpr::symbol(ConstSymbol::EulerGamma),
            _ => return Err(err(s.pos, format!("unknown symbol {name}"))),
        },
        Ast::Call(name, args) => call(name, args, s.pos)?,
        Ast::List(_) => return Err(err(s.pos, "unexpected list")),
        Ast::Neg(a) => -to_expr(a)?,
        Ast::Add(a, b) => to_expr(a)? + to_expr(b)?,
        Ast::Sub(a, b) => to_expr(a)? - to_expr(b)?,
        Ast::Mul(a, b) => to_expr(a)? * to_expr(b)?,
        Ast::Div(a, b) => {
            let d = constant_divisor(&to_expr(b)?, b.pos)?;
            to_expr(a)?.scale(&d)
        }
        Ast::Pow(a, b) => {
            let base = to_expr(a)?;
            let e = b.to_rational()?;
            if *e.denom() != 1 {
                return Err(err(b.pos, "exponent must be an integer"));
            }
            let n = e.numer().to_i32().ok_or_else(|| err(b.pos, "exponent too large"))?;
            if n >= 0 {
                base.pow(n as u32)
            } else {
                let inv = constant_divisor(&base, a.pos)?;
                SymbolicExpr::constant(inv.pow(n.unsigned_abs()))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        let e = parse_expr("1543/19440*Pi^5 - 6*Gl[{4,1},Pi/3]").unwrap();
        assert_eq!(e.to_string(), "1543/19440*Pi^5 - 6*Gl[{4,1},Pi/3]");
        let e = parse_expr("6*Li[{3,1,1},-1] + (Pi^2*Zeta[3])/4 - (105*Zeta[5])/32").unwrap();
        assert_eq!(e.to_string(), "1/4*Pi^2*Zeta[3] - 105/32*Zeta[5] + 6*Li[{3,1,1},-1]");
    }

    #[test]
    fn angle_spellings_agree() {
        let a = parse_expr("Gl[{4,1},1/3*Pi]").unwrap();
        let b = parse_expr("gl[{4,1},pi/3]").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_expr("Cl[{2},2pi/3]").unwrap(), parse_expr("Cl[{2},2*Pi/3]").unwrap());
    }

    #[test]
    fn special_points() {
        assert_eq!(parse_expr("Li[{1},-1]").unwrap(), -SymbolicExpr::symbol(ConstSymbol::Log2));
        assert_eq!(parse_expr("Li[{3},1]").unwrap(), parse_expr("Zeta[3]").unwrap());
        let e = parse_expr("Li[{2},rho^-2] + Li[{3},Exp[-t]]").unwrap();
        assert_eq!(e.to_string(), "Li[{2},rho^-2] + Li[{3},Exp[-t]]");
    }

    #[test]
    fn complex_coefficients_round_trip() {
        let e = parse_expr("(1/2 - 3*I)*Pi^2 + (5/7*I)*Zeta[3]").unwrap();
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("Pi + Zeta[1]") {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_expr("Pi +").is_err());
        assert!(parse_expr("Pi / Zeta[3]").is_err());
        assert!(parse_expr("Cl[{2},Zeta[3]]").is_err());
    }
}
