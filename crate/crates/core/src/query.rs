//! Integral requests.

use std::fmt;

use crate::algebra::RationalAngle;
use crate::error::{check_nk, Error, Result};

/// `Ls_n^(k)(sigma)` with `sigma = q*pi`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LsQuery {
    pub n: u32,
    pub k: u32,
    pub sigma: RationalAngle,
}

impl LsQuery {
    pub fn new(n: u32, k: u32, sigma: RationalAngle) -> Result<Self> {
        check_nk(n, k)?;
        Ok(Self { n, k, sigma })
    }
}

impl fmt::Display for LsQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ls[{},{},{}]", self.n, self.k, self.sigma)
    }
}

/// Argument of a log-sinh integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LshArg {
    /// The formal parameter `t`.
    Formal,
    /// `t = 2 log(rho)`, rho the golden mean.
    TwoLogGolden,
}

/// `Lsh_n^(k)(t)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LshQuery {
    pub n: u32,
    pub k: u32,
    pub t: LshArg,
}

impl LshQuery {
    pub fn new(n: u32, k: u32, t: LshArg) -> Result<Self> {
        check_nk(n, k)?;
        Ok(Self { n, k, t })
    }
}

impl fmt::Display for LshQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t {
            LshArg::Formal => write!(f, "Lsh[{},{},t]", self.n, self.k),
            LshArg::TwoLogGolden => write!(f, "Lsh[{},{},2*Log[rho]]", self.n, self.k),
        }
    }
}

/// `Lsc_{m,n}(pi)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LscQuery {
    pub m: u32,
    pub n: u32,
}

impl LscQuery {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("Lsc indices must be positive, got ({m}, {n})")));
        }
        Ok(Self { m, n })
    }
}

impl fmt::Display for LscQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lsc[{},{},Pi]", self.m, self.n)
    }
}

/// Any single integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Query {
    Ls(LsQuery),
    Lsh(LshQuery),
    Lsc(LscQuery),
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Ls(q) => q.fmt(f),
            Query::Lsh(q) => q.fmt(f),
            Query::Lsc(q) => q.fmt(f),
        }
    }
}
