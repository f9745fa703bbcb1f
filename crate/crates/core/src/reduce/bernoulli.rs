use rug::{Integer, Rational};

/// Exact Bernoulli polynomial `B_n(x)`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPolynomial {
    coeffs: Vec<Rational>,
}

impl BernoulliPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::from(1));
    for m in 1..=n {
        let mut s = Rational::new();
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from(binomial(m + 1, k as u32)) * bk;
        }
        b.push(-s / Rational::from(m + 1));
    }
    b
}

pub fn bernoulli_poly(n: u32) -> BernoulliPolynomial {
    let b = bernoulli_numbers(n);
    let coeffs = (0..=n).map(|d| Rational::from(binomial(n, d)) * &b[(n - d) as usize]).collect();
    BernoulliPolynomial { coeffs }
}
