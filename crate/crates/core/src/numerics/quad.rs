//! Tanh-sinh quadrature with accurate endpoint distances.

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};

/// A quadrature node on `[a, b]` with its distances to both endpoints.
pub struct Node<'a> {
    pub x: &'a Float,
    pub from_a: &'a Float,
    pub from_b: &'a Float,
}

const MAX_LEVEL: u32 = 14;

/// Half-width of the `t` range for `digits` and integrands that grow like `|log d|^power`.
fn t_max(digits: u32, power: u32) -> f64 {
    let target = (digits as f64 + 10.0) * std::f64::consts::LN_10;
    let mut u: f64 = 1.0;
    while 2.0 * u - (power as f64) * (2.0 * u).ln().max(0.0) < target {
        u *= 1.05;
    }
    (2.0 * u / std::f64::consts::PI).asinh()
}

/// `int_a^b f` to roughly `digits` correct digits.
///
/// `power` bounds the logarithmic growth of `f` at the endpoints.
pub fn tanh_sinh(a: &Float, b: &Float, digits: u32, power: u32, mut f: impl FnMut(&Node) -> Float) -> Result<Float> {
    let prec = a.prec().max(b.prec());
    let width = Float::with_val(prec, b - a);
    let half = Float::with_val(prec, &width / 2u32);
    let pi_half = Float::with_val(prec, Constant::Pi) / 2u32;
    let tmax = t_max(digits, power);
    let tol = Float::with_val(prec, Float::i_exp(1, 0)) >> ((digits as f64 + 5.0) * std::f64::consts::LOG2_10) as u32;

    let mut eval = |t: &Float| -> Float {
        let u = Float::with_val(prec, t.sinh_ref()) * &pi_half;
        let cosh_t = Float::with_val(prec, t.cosh_ref());
        let e2u = Float::with_val(prec, &u * 2u32).abs().exp();
        let near = Float::with_val(prec, &width / Float::with_val(prec, &e2u + 1u32));
        let far = Float::with_val(prec, &width - &near);
        let (x, from_a, from_b) = if t.is_sign_negative() {
            (Float::with_val(prec, a + &near), near, far)
        } else {
            (Float::with_val(prec, b - &near), far, near)
        };
        let cu = Float::with_val(prec, u.cosh_ref());
        let w = Float::with_val(prec, &half * &pi_half) * cosh_t / Float::with_val(prec, cu.square_ref());
        if w.is_zero() {
            return w;
        }
        let fx = f(&Node { x: &x, from_a: &from_a, from_b: &from_b });
        w * fx
    };

    let mut h = Float::with_val(prec, 1u32);
    let zero = Float::new(prec);
    let mut sum = eval(&zero);
    let mut k = 1u32;
    loop {
        let t = Float::with_val(prec, &h * k);
        if t.to_f64() > tmax {
            break;
        }
        sum += eval(&t);
        sum += eval(&-t);
        k += 1;
    }
    let mut estimate = Float::with_val(prec, &sum * &h);
    for _level in 1..=MAX_LEVEL {
        h /= 2u32;
        let mut k = 1u32;
        loop {
            let t = Float::with_val(prec, &h * k);
            if t.to_f64() > tmax {
                break;
            }
            sum += eval(&t);
            sum += eval(&-t);
            k += 2;
        }
        let next = Float::with_val(prec, &sum * &h);
        let diff = Float::with_val(prec, &next - &estimate).abs();
        let scale = Float::with_val(prec, next.abs_ref()).max(&Float::with_val(prec, 1u32));
        estimate = next;
        if diff <= Float::with_val(prec, &tol * &scale) {
            return Ok(estimate);
        }
    }
    Err(Error::Numeric(format!("tanh-sinh did not converge to {digits} digits")))
}
