//! Multiple polylogarithms on the unit circle, at real points, and at `+-1`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer};

use super::quad::tanh_sinh;
use super::Budget;
use crate::algebra::{MultiIndex, RationalAngle};
use crate::error::{Error, Result};

fn bits(digits: u32) -> u32 {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

fn tolerance(prec: u32, digits: u32) -> Float {
    Float::with_val(prec, 1u32) >> ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32
}

/// Coefficients `c_n` of `Li_ix(z) = sum_n c_n z^n`, produced in order `n = 1, 2, ...`.
struct NestedCoeffs {
    ix: Vec<u32>,
    sums: Vec<Float>,
    n: u32,
    prec: u32,
}

impl NestedCoeffs {
    fn new(ix: &MultiIndex, prec: u32) -> Self {
        let ix = ix.entries().to_vec();
        let sums = vec![Float::new(prec); ix.len() - 1];
        Self { ix, sums, n: 0, prec }
    }

    fn inv_pow(&self, n: u32, a: u32) -> Float {
        Float::with_val(self.prec, n).pow(a).recip()
    }
}

impl Iterator for NestedCoeffs {
    type Item = Float;

    fn next(&mut self) -> Option<Float> {
        self.n += 1;
        let n = self.n;
        let inner = self.sums.first().cloned().unwrap_or_else(|| Float::with_val(self.prec, 1u32));
        let c = self.inv_pow(n, self.ix[0]) * inner;
        let len = self.sums.len();
        for i in 0..len {
            let p = self.inv_pow(n, self.ix[i + 1]);
            let term = if i + 1 < len { p * &self.sums[i + 1] } else { p };
            self.sums[i] += term;
        }
        Some(c)
    }
}

/// `(Re, Im)` of `Li_ix(exp(i*q*pi))` for `0 < q < 2` (mod 2).
///
/// Partial sums up to `N` plus repeated summation by parts on the tail.
pub fn polylog_unit_circle(ix: &MultiIndex, q: &RationalAngle, budget: &Budget) -> Result<(Float, Float)> {
    let digits = budget.digits + super::GUARD_DIGITS;
    let r = q.q().denom().to_u32().ok_or_else(|| Error::Numeric("angle denominator too large".into()))?;
    let p = Integer::from(q.q().numer() % (2 * r));
    let p = if p < 0 { p + 2 * r } else { p }.to_u32().expect("reduced");
    if p == 0 {
        return Err(Error::Numeric(format!("Li_{{{ix}}} at z = 1 is not on the accelerated path")));
    }
    let period = 2 * r;
    let chord = 2.0 * (std::f64::consts::PI * p as f64 / (2.0 * r as f64)).sin().abs();
    let mut n_head = ((4 * digits + 80) as f64 / chord.min(1.0)) as u32;

    for _attempt in 0..4 {
        let prec = bits(2 * digits + 40);
        let pi = Float::with_val(prec, Constant::Pi);
        let roots: Vec<Complex> = (0..period)
            .map(|m| {
                let angle = Float::with_val(prec, &pi * m) / r;
                let (s, c) = angle.sin_cos(Float::new(prec));
                Complex::with_val(prec, (c, s))
            })
            .collect();
        let z_pow = |n: u32| &roots[((n as u64 * p as u64) % period as u64) as usize];

        let mut coeffs = NestedCoeffs::new(ix, prec);
        let mut sum = Complex::new(prec);
        for n in 1..n_head {
            let c = coeffs.next().expect("infinite");
            sum += Complex::with_val(prec, z_pow(n) * &c);
        }
        let max_depth = n_head;
        let mut tail: Vec<Float> = (0..=max_depth).map(|_| coeffs.next().expect("infinite")).collect();

        let one = Complex::with_val(prec, (1u32, 0u32));
        let w = Complex::with_val(prec, &one - z_pow(1)).recip();
        let mut w_pow = w.clone();
        let tol = tolerance(prec, digits + 8);
        let mut prev = None::<Float>;
        let mut converged = false;
        for j in 0..max_depth {
            let zn = z_pow(n_head + j);
            let term = Complex::with_val(prec, zn * &tail[0]) * &w_pow;
            let mag = Float::with_val(prec, term.abs_ref());
            sum += &term;
            if mag < tol {
                converged = true;
                break;
            }
            if let Some(pm) = &prev {
                if mag > *pm && j > 8 {
                    break;
                }
            }
            prev = Some(mag);
            for i in 0..tail.len() - 1 {
                let d = Float::with_val(prec, &tail[i + 1] - &tail[i]);
                tail[i] = d;
            }
            tail.pop();
            w_pow *= &w;
        }
        if converged {
            let (re, im) = sum.into_real_imag();
            return Ok((Float::with_val(budget.prec(), re), Float::with_val(budget.prec(), im)));
        }
        n_head *= 2;
    }
    Err(Error::Numeric(format!("Li_{{{ix}}} at {q}: tail acceleration did not reach {digits} digits")))
}

/// `Li_ix(x)` for `0 < x < 1` by direct summation.
pub fn polylog_real(ix: &MultiIndex, x: &Float, budget: &Budget) -> Result<Float> {
    let digits = budget.digits + super::GUARD_DIGITS;
    let prec = bits(digits + 10);
    let xf = x.to_f64();
    if !(xf > 0.0 && xf < 1.0) {
        return Err(Error::Numeric(format!("real polylog argument {xf} outside (0, 1)")));
    }
    let n = ((digits + 10) as f64 * std::f64::consts::LN_10 / -xf.ln()) as u64 + 20 + 10 * ix.depth() as u64;
    if n > 5_000_000 {
        return Err(Error::Numeric("real polylog argument too close to 1".into()));
    }
    let x = Float::with_val(prec, x);
    let mut xn = x.clone();
    let mut sum = Float::new(prec);
    for c in NestedCoeffs::new(ix, prec).take(n as usize) {
        sum += Float::with_val(prec, &c * &xn);
        xn *= &x;
    }
    Ok(Float::with_val(budget.prec(), sum))
}

/// `zeta(s)` for integer `s >= 2`.
pub fn zeta(s: u32, budget: &Budget) -> Float {
    Float::with_val(budget.prec(), s).zeta()
}

/// `Li_{a,{1}^b}(z)` at `z = +1` or `z = -1` via the Nielsen integral
/// `S_{a-1,b+1}(z) = (-1)^(a+b-1) / ((a-2)! (b+1)!) int_0^1 log^(a-2)(t) log^(b+1)(1-z t) / t dt`.
pub fn nielsen_at_unit(a: u32, b: u32, alternating: bool, budget: &Budget) -> Result<Float> {
    if a < 2 {
        return Err(Error::Numeric(format!("Nielsen index ({a},{{1}}^{b}) needs a >= 2")));
    }
    let digits = budget.digits + super::GUARD_DIGITS;
    let prec = bits(digits + 10);
    let zero = Float::new(prec);
    let one = Float::with_val(prec, 1u32);
    let half = Float::with_val(prec, 0.5);
    let integral = tanh_sinh(&zero, &one, digits, a.max(b + 2), |node| {
        let t = node.from_a;
        if t.is_zero() || node.from_b.is_zero() {
            return Float::new(prec);
        }
        let log_t = if *node.from_b < half {
            Float::with_val(prec, -node.from_b).ln_1p()
        } else {
            Float::with_val(prec, t.ln_ref())
        };
        let log_1mzt = if alternating {
            Float::with_val(prec, t.ln_1p_ref())
        } else if *t < half {
            Float::with_val(prec, -t).ln_1p()
        } else {
            Float::with_val(prec, node.from_b.ln_ref())
        };
        log_t.pow(a - 2) * log_1mzt.pow(b + 1) / t
    })?;
    let norm = Integer::from(Integer::factorial(a - 2)) * Integer::from(Integer::factorial(b + 1));
    let mut v = integral / Float::with_val(prec, &norm);
    if (a + b).is_multiple_of(2) {
        v = -v;
    }
    Ok(Float::with_val(budget.prec(), v))
}

/// `zeta(a, {1}^b)`.
pub fn mzv_nielsen(a: u32, b: u32, budget: &Budget) -> Result<Float> {
    if b == 0 {
        if a < 2 {
            return Err(Error::Numeric("zeta(1) diverges".into()));
        }
        return Ok(zeta(a, budget));
    }
    nielsen_at_unit(a, b, false, budget)
}

/// `Gl_{4,1}(pi/3)` from its central binomial series.
pub fn gl41_pi3_fast(budget: &Budget) -> Float {
    let digits = budget.digits + super::GUARD_DIGITS;
    let prec = bits(digits + 10);
    let terms = ((digits + 10) as f64 / 4f64.log10()) as u32 + 10;
    let mut central = Float::with_val(prec, 1u32);
    let mut sum = Float::new(prec);
    for n in 1..=terms {
        central = central * (2 * (2 * n - 1)) / n;
        let denom = Float::with_val(prec, &central * Float::with_val(prec, n).pow(6u32));
        sum += denom.recip();
    }
    let pi = Float::with_val(prec, Constant::Pi);
    let z3 = Float::with_val(prec, 3u32).zeta();
    let lead = Float::with_val(prec, (&pi).pow(5u32)) * 3341u32 / 1632960u32;
    let v = lead - Float::with_val(prec, z3.square_ref()) / &pi - sum * 3u32 / (Float::with_val(prec, &pi * 4u32));
    Float::with_val(budget.prec(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Float, b: &Float, digits: i32) -> bool {
        let err = Float::with_val(a.prec(), a - b).abs();
        err < Float::with_val(a.prec(), 10f64).pow(-digits)
    }

    #[test]
    fn dilog_at_minus_one() {
        let b = Budget::new(40);
        let (re, im) = polylog_unit_circle(&MultiIndex::nielsen(2, 0), &RationalAngle::pi(), &b).unwrap();
        let pi = Float::with_val(b.prec(), Constant::Pi);
        let exact = -Float::with_val(b.prec(), pi.square_ref()) / 12u32;
        assert!(close(&re, &exact, 40));
        assert!(im.abs() < 1e-40);
    }

    #[test]
    fn gl41_routes_agree() {
        let b = Budget::new(40);
        let (_, im) = polylog_unit_circle(&MultiIndex::nielsen(4, 1), &RationalAngle::from_ratio(1, 3), &b).unwrap();
        assert!(close(&im, &gl41_pi3_fast(&b), 40));
    }

    #[test]
    fn nielsen_integral_matches_series() {
        let b = Budget::new(30);
        let via_integral = nielsen_at_unit(3, 1, true, &b).unwrap();
        let (via_series, _) = polylog_unit_circle(&MultiIndex::nielsen(3, 1), &RationalAngle::pi(), &b).unwrap();
        assert!(close(&via_integral, &via_series, 30));
        let z21 = mzv_nielsen(2, 1, &b).unwrap();
        assert!(close(&z21, &zeta(3, &b), 30));
    }

    #[test]
    fn real_point_dilog() {
        let b = Budget::new(30);
        let half = Float::with_val(b.prec(), 0.5);
        let v = polylog_real(&MultiIndex::nielsen(2, 0), &half, &b).unwrap();
        let pi = Float::with_val(b.prec(), Constant::Pi);
        let l2 = Float::with_val(b.prec(), Constant::Log2);
        let exact =
            Float::with_val(b.prec(), pi.square_ref()) / 12u32 - Float::with_val(b.prec(), l2.square_ref()) / 2u32;
        assert!(close(&v, &exact, 30));
    }
}
