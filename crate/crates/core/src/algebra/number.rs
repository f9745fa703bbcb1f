use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

/// Exact complex rational `re + im*i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: impl Into<Rational>, im: impl Into<Rational>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn real(re: impl Into<Rational>) -> Self {
        Self { re: re.into(), im: Rational::new() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(1)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `i^p` for any integer `p`.
    pub fn i_pow(p: i64) -> Self {
        match p.rem_euclid(4) {
            0 => Self::real(1),
            1 => Self::new(0, 1),
            2 => Self::real(-1),
            _ => Self::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.cmp0().is_eq() && self.im.cmp0().is_eq()
    }

    pub fn is_real(&self) -> bool {
        self.im.cmp0().is_eq()
    }

    pub fn is_one(&self) -> bool {
        self.is_real() && self.re == 1
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: Rational::from(-&self.im) }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { re: Rational::from(&self.re * r), im: Rational::from(&self.im * r) }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = Rational::from(self.re.square_ref()) + Rational::from(self.im.square_ref());
        Some(Self { re: Rational::from(&self.re / &norm), im: -Rational::from(&self.im / &norm) })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::real(v)
    }
}

impl From<Rational> for GaussianRational {
    fn from(v: Rational) -> Self {
        Self::real(v)
    }
}

impl From<Integer> for GaussianRational {
    fn from(v: Integer) -> Self {
        Self::real(v)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: Rational::from(&self.re + &rhs.re), im: Rational::from(&self.im + &rhs.im) }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: Rational::from(&self.re - &rhs.re), im: Rational::from(&self.im - &rhs.im) }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        let re = Rational::from(&self.re * &rhs.re) - Rational::from(&self.im * &rhs.im);
        let im = Rational::from(&self.re * &rhs.im) + Rational::from(&self.im * &rhs.re);
        GaussianRational { re, im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: Rational::from(-&self.re), im: Rational::from(-&self.im) }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

/// `p/q` rendering used throughout the text formats.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", fmt_rational(&self.re))
        } else if self.re.cmp0().is_eq() {
            write!(f, "({}*I)", fmt_rational(&self.im))
        } else {
            let sign = if self.im.cmp0().is_lt() { '-' } else { '+' };
            let mag = Rational::from(self.im.abs_ref());
            write!(f, "({} {} {}*I)", fmt_rational(&self.re), sign, fmt_rational(&mag))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::real(-1));
        assert_eq!(GaussianRational::i_pow(-1), GaussianRational::new(0, -1));
        assert_eq!(GaussianRational::i_pow(6), GaussianRational::real(-1));
    }

    #[test]
    fn inverse() {
        let z = GaussianRational::new(3, 4);
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(GaussianRational::real(Rational::from((-3, 4))).to_string(), "-3/4");
        assert_eq!(GaussianRational::new(Rational::from((1, 2)), -2).to_string(), "(1/2 - 2*I)");
    }
}
