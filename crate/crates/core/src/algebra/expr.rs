use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

use super::number::GaussianRational;
use super::symbol::{ConstSymbol, MultiIndex};

/// Product of constant symbols with positive exponents, sorted canonically.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(ConstSymbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn symbol(s: ConstSymbol) -> Self {
        Self(vec![(s, 1)])
    }

    pub fn power(s: ConstSymbol, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self(vec![(s, e)])
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (ConstSymbol, u32)>) -> Self {
        let mut map: BTreeMap<ConstSymbol, u32> = BTreeMap::new();
        for (s, e) in factors {
            if e > 0 {
                *map.entry(s).or_insert(0) += e;
            }
        }
        Self(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(ConstSymbol, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(s, e)| s.weight() * e).sum()
    }

    pub fn exponent_of(&self, s: &ConstSymbol) -> u32 {
        self.0.iter().find(|(t, _)| t == s).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        for (s, e) in &self.0 {
            let d = other.exponent_of(s);
            if d > *e {
                return None;
            }
            if e - d > 0 {
                out.push((s.clone(), e - d));
            }
        }
        if other.0.iter().any(|(s, _)| self.exponent_of(s) == 0) {
            return None;
        }
        Some(Monomial(out))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Grading of an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// The zero expression is homogeneous of every weight.
    Any,
    Homogeneous(u32),
    Mixed,
}

/// Finite linear combination of monomials with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality in the free ring on the symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolicExpr {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl SymbolicExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn rational(r: impl Into<Rational>) -> Self {
        Self::constant(GaussianRational::real(r.into()))
    }

    pub fn int(v: i64) -> Self {
        Self::rational(v)
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn symbol(s: ConstSymbol) -> Self {
        Self::term(GaussianRational::one(), Monomial::symbol(s))
    }

    pub fn pi() -> Self {
        Self::symbol(ConstSymbol::Pi)
    }

    pub fn pi_pow(e: u32) -> Self {
        Self::term(GaussianRational::one(), Monomial::power(ConstSymbol::Pi, e))
    }

    pub fn zeta(ix: MultiIndex) -> Self {
        Self::symbol(ConstSymbol::Zeta(ix))
    }

    /// `Li_ix(1)`, stored as a zeta value.
    pub fn li_at_one(ix: MultiIndex) -> Self {
        Self::zeta(ix)
    }

    /// `Li_ix(-1)`; `Li_1(-1)` is stored as `-log 2`.
    pub fn li_at_minus_one(ix: MultiIndex) -> Self {
        if ix.entries() == [1] {
            -Self::symbol(ConstSymbol::Log2)
        } else {
            Self::symbol(ConstSymbol::LiMinusOne(ix))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The coefficient of the empty monomial.
    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&Monomial::one())
    }

    /// `Some(c)` if the expression is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::real(r.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replace each coefficient by its real part.
    pub fn real_component(&self) -> Self {
        self.map_coefficients(|c| GaussianRational::real(c.re.clone()))
    }

    /// Replace each coefficient by its imaginary part (as a real number).
    pub fn imag_component(&self) -> Self {
        self.map_coefficients(|c| GaussianRational::real(c.im.clone()))
    }

    pub fn conj(&self) -> Self {
        self.map_coefficients(GaussianRational::conj)
    }

    fn map_coefficients(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn weight(&self) -> Weight {
        let mut w = None;
        for m in self.terms.keys() {
            let mw = m.weight();
            match w {
                None => w = Some(mw),
                Some(x) if x != mw => return Weight::Mixed,
                _ => {}
            }
        }
        w.map_or(Weight::Any, Weight::Homogeneous)
    }

    /// True if zero or homogeneous of weight `w`.
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        matches!(self.weight(), Weight::Any) || self.weight() == Weight::Homogeneous(w)
    }

    /// Split into homogeneous parts by weight.
    pub fn weight_decomposition(&self) -> BTreeMap<u32, SymbolicExpr> {
        let mut out: BTreeMap<u32, SymbolicExpr> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().add_term(m.clone(), c);
        }
        out
    }

    pub fn symbols(&self) -> BTreeSet<ConstSymbol> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(s, _)| s.clone())).collect()
    }

    pub fn has_transient(&self) -> bool {
        self.symbols().iter().any(ConstSymbol::is_transient)
    }

    pub fn contains_symbol(&self, s: &ConstSymbol) -> bool {
        self.terms.keys().any(|m| m.exponent_of(s) > 0)
    }

    /// Ring homomorphism sending each symbol `s` to `f(s)` (or itself when `None`).
    pub fn substitute(&self, mut f: impl FnMut(&ConstSymbol) -> Option<SymbolicExpr>) -> Self {
        let mut cache: BTreeMap<ConstSymbol, Option<SymbolicExpr>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut keep = Vec::new();
            let mut prod = Self::constant(c.clone());
            for (s, e) in m.factors() {
                let image = cache.entry(s.clone()).or_insert_with(|| f(s)).clone();
                match image {
                    Some(img) => prod = &prod * &img.pow(*e),
                    None => keep.push((s.clone(), *e)),
                }
            }
            if !keep.is_empty() {
                prod = prod.mul_monomial(&Monomial::from_factors(keep));
            }
            out = &out + &prod;
        }
        out
    }

    /// Coefficient of `s^1` when the expression is affine in `s`: returns
    /// `(coefficient, rest)` with `self = coefficient*s + rest`, or `None`
    /// if `s` occurs with a higher power.
    pub fn linear_in(&self, s: &ConstSymbol) -> Option<(SymbolicExpr, SymbolicExpr)> {
        let mut coeff = Self::zero();
        let mut rest = Self::zero();
        let sm = Monomial::symbol(s.clone());
        for (m, c) in &self.terms {
            match m.exponent_of(s) {
                0 => rest.add_term(m.clone(), c),
                1 => coeff.add_term(m.div(&sm).expect("divisible"), c),
                _ => return None,
            }
        }
        Some((coeff, rest))
    }

    /// The value of `s` making `self` vanish, when `self` is affine in `s`
    /// with a single-term coefficient.
    pub fn solve_for(&self, s: &ConstSymbol) -> Option<SymbolicExpr> {
        let (coeff, rest) = self.linear_in(s)?;
        let mut terms = coeff.terms();
        let (m, c) = terms.next()?;
        if terms.next().is_some() {
            return None;
        }
        Some(-rest.div_term(c, m)?)
    }

    /// Divide by a single-term expression `c*m`, if every term is divisible by `m`.
    pub fn div_term(&self, c: &GaussianRational, m: &Monomial) -> Option<Self> {
        let inv = c.inv()?;
        let mut out = Self::zero();
        for (t, k) in &self.terms {
            out.add_term(t.div(m)?, &(k * &inv));
        }
        Some(out)
    }

    /// Canonical text, coefficients as `p/q` and non-real ones as `(p/q + r/s*I)`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn fmt_term(c: &GaussianRational, m: &Monomial) -> String {
    if m.is_one() {
        return c.to_string();
    }
    if c.is_one() {
        return m.to_string();
    }
    if c.is_real() && c.re == -1 {
        return format!("-{m}");
    }
    format!("{c}*{m}")
}

impl fmt::Display for SymbolicExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_real() && c.re.cmp0().is_lt();
            if i == 0 {
                write!(f, "{}", fmt_term(c, m))?;
            } else if negative {
                write!(f, " - {}", fmt_term(&-c, m))?;
            } else {
                write!(f, " + {}", fmt_term(c, m))?;
            }
        }
        Ok(())
    }
}

impl Add for &SymbolicExpr {
    type Output = SymbolicExpr;
    fn add(self, rhs: Self) -> SymbolicExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for SymbolicExpr {
    type Output = SymbolicExpr;
    fn add(mut self, rhs: Self) -> SymbolicExpr {
        for (m, c) in rhs.terms {
            self.add_term(m, &c);
        }
        self
    }
}

impl Sub for &SymbolicExpr {
    type Output = SymbolicExpr;
    fn sub(self, rhs: Self) -> SymbolicExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Sub for SymbolicExpr {
    type Output = SymbolicExpr;
    fn sub(self, rhs: Self) -> SymbolicExpr {
        &self - &rhs
    }
}

impl Mul for &SymbolicExpr {
    type Output = SymbolicExpr;
    fn mul(self, rhs: Self) -> SymbolicExpr {
        let mut out = SymbolicExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for SymbolicExpr {
    type Output = SymbolicExpr;
    fn mul(self, rhs: Self) -> SymbolicExpr {
        &self * &rhs
    }
}

impl Neg for &SymbolicExpr {
    type Output = SymbolicExpr;
    fn neg(self) -> SymbolicExpr {
        self.scale(&GaussianRational::real(-1))
    }
}

impl Neg for SymbolicExpr {
    type Output = SymbolicExpr;
    fn neg(self) -> SymbolicExpr {
        -&self
    }
}

impl From<ConstSymbol> for SymbolicExpr {
    fn from(s: ConstSymbol) -> Self {
        Self::symbol(s)
    }
}

impl From<GaussianRational> for SymbolicExpr {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(v: &[u32]) -> SymbolicExpr {
        SymbolicExpr::zeta(MultiIndex::new(v.to_vec()).unwrap())
    }

    fn q(p: i64, r: i64) -> SymbolicExpr {
        SymbolicExpr::rational(Rational::from((p, r)))
    }

    #[test]
    fn additive_inverse() {
        let a = &q(1, 12) * &SymbolicExpr::pi_pow(3);
        let b = &q(-1, 12) * &SymbolicExpr::pi_pow(3);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        let zp = &zeta(&[3]) * &SymbolicExpr::pi();
        let sum = &zp.scale_rational(&Rational::from(2)) + &zp.scale_rational(&Rational::from(3));
        assert_eq!(sum, zp.scale_rational(&Rational::from(5)));
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn distinct_monomials_stay_apart() {
        let e = &zeta(&[3]) + &SymbolicExpr::pi();
        assert_eq!(e.len(), 2);
        assert_eq!(e.weight(), Weight::Mixed);
    }

    #[test]
    fn products() {
        assert_eq!(&SymbolicExpr::pi() * &SymbolicExpr::pi_pow(2), SymbolicExpr::pi_pow(3));
        let ipi = &SymbolicExpr::i() * &SymbolicExpr::pi();
        assert_eq!(&ipi * &ipi, -SymbolicExpr::pi_pow(2));
        let z3 = zeta(&[3]);
        let sq = &z3 * &z3;
        assert_eq!(sq.len(), 1);
        let (m, _) = sq.terms().next().unwrap();
        assert_eq!(m.factors()[0].1, 2);
    }

    #[test]
    fn real_component() {
        let e = (&SymbolicExpr::constant(GaussianRational::new(3, 2)) * &SymbolicExpr::pi()) * zeta(&[3]);
        assert_eq!(e.real_component(), (&SymbolicExpr::int(3) * &SymbolicExpr::pi()) * zeta(&[3]));
        let e = SymbolicExpr::constant(GaussianRational::new(0, Rational::from((-1, 24)))) * SymbolicExpr::pi_pow(4);
        assert!(e.real_component().is_zero());
        let r = &q(3, 2) * &zeta(&[3]);
        assert_eq!(r.real_component(), r);
    }

    #[test]
    fn weights() {
        let e = (&q(3, 2) * &SymbolicExpr::pi()) * zeta(&[3]);
        assert_eq!(e.weight(), Weight::Homogeneous(4));
        assert_eq!(SymbolicExpr::zero().weight(), Weight::Any);
    }

    #[test]
    fn li_minus_one_depth_one_is_log2() {
        let e = SymbolicExpr::li_at_minus_one(MultiIndex::nielsen(1, 0));
        assert_eq!(e, -SymbolicExpr::symbol(ConstSymbol::Log2));
    }

    #[test]
    fn substitution_is_homomorphic() {
        let e = &zeta(&[3]).pow(2) + &SymbolicExpr::pi();
        let out = e.substitute(|s| match s {
            ConstSymbol::Zeta(_) => Some(SymbolicExpr::int(2)),
            _ => None,
        });
        assert_eq!(out, &SymbolicExpr::int(4) + &SymbolicExpr::pi());
    }

    #[test]
    fn text() {
        let e = &(&q(-13, 45) * &SymbolicExpr::pi_pow(5)) + &zeta(&[3]);
        assert_eq!(e.to_string(), "-13/45*Pi^5 + Zeta[3]");
        let e = &zeta(&[3]) - &SymbolicExpr::pi();
        assert_eq!(e.to_string(), "-Pi + Zeta[3]");
    }
}
