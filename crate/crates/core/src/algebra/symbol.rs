use std::fmt;

use rug::Rational;

use super::AlgebraError;

/// Index `(a1, ..., ak)` of a multiple polylogarithm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self, AlgebraError> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(AlgebraError::InvalidIndex(entries));
        }
        Ok(Self(entries))
    }

    /// The Nielsen shape `(a, {1}^ones)`.
    pub fn nielsen(a: u32, ones: u32) -> Self {
        assert!(a >= 1, "leading index entry must be positive");
        let mut v = Vec::with_capacity(ones as usize + 1);
        v.push(a);
        v.extend(std::iter::repeat_n(1, ones as usize));
        Self(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// `Some((a, b))` if the index is `(a, {1}^b)`.
    pub fn as_nielsen(&self) -> Option<(u32, u32)> {
        if self.0[1..].iter().all(|&e| e == 1) {
            Some((self.0[0], self.0.len() as u32 - 1))
        } else {
            None
        }
    }

    /// Convergent at `z = 1`.
    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An angle `q*pi` with rational `q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalAngle(Rational);

impl RationalAngle {
    pub fn new(q: impl Into<Rational>) -> Self {
        Self(q.into())
    }

    pub fn from_ratio(p: i64, r: i64) -> Self {
        Self(Rational::from((p, r)))
    }

    pub fn pi() -> Self {
        Self::new(1)
    }

    /// The multiple of pi.
    pub fn q(&self) -> &Rational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0.numer();
        let r = self.0.denom();
        if p.cmp0().is_eq() {
            return write!(f, "0");
        }
        let sign = if p.cmp0().is_lt() { "-" } else { "" };
        let pa = p.clone().abs();
        let num = if pa == 1 { "Pi".to_string() } else { format!("{pa}*Pi") };
        if *r == 1 {
            write!(f, "{sign}{num}")
        } else {
            write!(f, "{sign}{num}/{r}")
        }
    }
}

/// Named real evaluation points for `Li` at real arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealPoint {
    /// `exp(-t)` with `t` the formal log-sinh parameter.
    ExpMinusT,
    /// `rho^-2` with `rho` the golden mean.
    GoldenInvSquared,
}

/// An atomic transcendental constant.
///
/// The variant order is the canonical symbol order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstSymbol {
    Pi,
    Log2,
    /// Transient: only inside series kernels.
    LogPi,
    /// Transient: only inside series kernels.
    EulerGamma,
    /// The formal log-sinh parameter `t`.
    FormalT,
    /// `log(rho)`, rho the golden mean.
    LogGolden,
    Zeta(MultiIndex),
    LiMinusOne(MultiIndex),
    LiRealPoint(MultiIndex, RealPoint),
    Cl(MultiIndex, RationalAngle),
    Gl(MultiIndex, RationalAngle),
}

impl ConstSymbol {
    pub fn weight(&self) -> u32 {
        match self {
            Self::Pi | Self::Log2 | Self::LogPi | Self::EulerGamma | Self::FormalT | Self::LogGolden => 1,
            Self::Zeta(ix) | Self::LiMinusOne(ix) | Self::LiRealPoint(ix, _) => ix.weight(),
            Self::Cl(ix, _) | Self::Gl(ix, _) => ix.weight(),
        }
    }

    pub fn is_transient(&self) -> bool {
        matches!(self, Self::LogPi | Self::EulerGamma)
    }

    pub fn index(&self) -> Option<&MultiIndex> {
        match self {
            Self::Zeta(ix) | Self::LiMinusOne(ix) | Self::LiRealPoint(ix, _) => Some(ix),
            Self::Cl(ix, _) | Self::Gl(ix, _) => Some(ix),
            _ => None,
        }
    }

    /// Short machine-readable kind name (JSON output).
    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::Pi => "Pi",
            Self::Log2 => "Log2",
            Self::LogPi => "LogPi",
            Self::EulerGamma => "EulerGamma",
            Self::FormalT => "T",
            Self::LogGolden => "LogRho",
            Self::Zeta(_) => "Zeta",
            Self::LiMinusOne(_) => "LiMinusOne",
            Self::LiRealPoint(..) => "LiRealPoint",
            Self::Cl(..) => "Cl",
            Self::Gl(..) => "Gl",
        }
    }
}

impl fmt::Display for ConstSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pi => write!(f, "Pi"),
            Self::Log2 => write!(f, "Log[2]"),
            Self::LogPi => write!(f, "Log[Pi]"),
            Self::EulerGamma => write!(f, "EulerGamma"),
            Self::FormalT => write!(f, "t"),
            Self::LogGolden => write!(f, "Log[rho]"),
            Self::Zeta(ix) => write!(f, "Zeta[{ix}]"),
            Self::LiMinusOne(ix) => write!(f, "Li[{{{ix}}},-1]"),
            Self::LiRealPoint(ix, RealPoint::ExpMinusT) => write!(f, "Li[{{{ix}}},Exp[-t]]"),
            Self::LiRealPoint(ix, RealPoint::GoldenInvSquared) => write!(f, "Li[{{{ix}}},rho^-2]"),
            Self::Cl(ix, a) => write!(f, "Cl[{{{ix}}},{a}]"),
            Self::Gl(ix, a) => write!(f, "Gl[{{{ix}}},{a}]"),
        }
    }
}
