//! Integer relation detection.

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};

fn digits_of(prec: u32) -> f64 {
    prec as f64 * std::f64::consts::LOG10_2
}

/// Precision (decimal digits) needed for `n` inputs and coefficients of `max_coeff_digits` digits.
pub fn required_digits(n: usize, max_coeff_digits: u32) -> u32 {
    10 + n as u32 * max_coeff_digits
}

fn nearest(x: &Float) -> Integer {
    let mut r = x.clone();
    r.round_mut();
    r.to_integer().expect("finite")
}

/// A nonzero integer vector `a` with `sum a_i v_i = 0` to working precision, entries at most
/// `10^max_coeff_digits`, first nonzero entry positive. `None` if no such relation exists within the bound.
#[allow(clippy::needless_range_loop)]
pub fn pslq(v: &[Float], max_coeff_digits: u32) -> Result<Option<Vec<Integer>>> {
    let n = v.len();
    if n < 2 {
        return Err(Error::Numeric("pslq needs at least two values".into()));
    }
    let prec = v.iter().map(Float::prec).min().expect("nonempty");
    let have = digits_of(prec);
    let need = required_digits(n, max_coeff_digits);
    if have < need as f64 {
        return Err(Error::Numeric(format!(
            "pslq: insufficient precision, {have:.0} digits for {n} values with {max_coeff_digits}-digit coefficients (need {need})"
        )));
    }
    if let Some(i) = v.iter().position(Float::is_zero) {
        let mut a = vec![Integer::new(); n];
        a[i] = Integer::from(1);
        return Ok(Some(a));
    }

    let f = |x: f64| Float::with_val(prec, x);
    let gamma = f(4.0 / 3.0).sqrt();
    let scale = v.iter().map(|x| x.clone().abs()).fold(f(0.0), |a, b| a.max(&b));
    let threshold = Float::with_val(prec, 10u32).pow(-(have - 10.0 - max_coeff_digits as f64) as i32) * &scale;
    let bound = Float::with_val(prec, 10u32).pow(max_coeff_digits);

    let mut s = vec![f(0.0); n];
    let mut acc = f(0.0);
    for k in (0..n).rev() {
        acc += Float::with_val(prec, v[k].square_ref());
        s[k] = Float::with_val(prec, acc.sqrt_ref());
    }
    let norm = s[0].clone();
    let mut y: Vec<Float> = v.iter().map(|x| Float::with_val(prec, x / &norm)).collect();
    for sk in &mut s {
        *sk /= &norm;
    }
    let mut h = vec![vec![f(0.0); n - 1]; n];
    for i in 0..n {
        for j in 0..(n - 1).min(i + 1) {
            if i == j {
                h[i][j] = Float::with_val(prec, &s[j + 1] / &s[j]);
            } else {
                let d = Float::with_val(prec, &s[j] * &s[j + 1]);
                h[i][j] = -Float::with_val(prec, &y[i] * &y[j]) / d;
            }
        }
    }
    let ident = |n: usize| -> Vec<Vec<Integer>> {
        (0..n).map(|i| (0..n).map(|j| Integer::from((i == j) as u32)).collect()).collect()
    };
    let mut a = ident(n);
    let mut b = ident(n);

    let reduce = |h: &mut Vec<Vec<Float>>, y: &mut Vec<Float>, a: &mut Vec<Vec<Integer>>, b: &mut Vec<Vec<Integer>>| {
        for i in 1..n {
            for j in (0..i.min(n - 1)).rev() {
                if h[j][j].is_zero() {
                    continue;
                }
                let t = nearest(&Float::with_val(prec, &h[i][j] / &h[j][j]));
                if t == 0 {
                    continue;
                }
                let tf = Float::with_val(prec, &t);
                let dy = Float::with_val(prec, &tf * &y[i]);
                y[j] += dy;
                for k in 0..=j {
                    let d = Float::with_val(prec, &tf * &h[j][k]);
                    h[i][k] -= d;
                }
                for k in 0..n {
                    let da = Integer::from(&t * &a[j][k]);
                    a[i][k] -= da;
                    let db = Integer::from(&t * &b[k][i]);
                    b[k][j] += db;
                }
            }
        }
    };
    reduce(&mut h, &mut y, &mut a, &mut b);

    let max_iter = 200 * n * (max_coeff_digits as usize + 4);
    for _ in 0..max_iter {
        let mut m = 0;
        let mut best = f(-1.0);
        let mut gp = f(1.0);
        for i in 0..n - 1 {
            gp *= &gamma;
            let val = Float::with_val(prec, h[i][i].abs_ref()) * &gp;
            if val > best {
                best = val;
                m = i;
            }
        }
        y.swap(m, m + 1);
        a.swap(m, m + 1);
        h.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }
        if m + 1 < n - 1 {
            let t0 = Float::with_val(prec, h[m][m].hypot_ref(&h[m][m + 1]));
            let t1 = Float::with_val(prec, &h[m][m] / &t0);
            let t2 = Float::with_val(prec, &h[m][m + 1] / &t0);
            for row in h.iter_mut().skip(m) {
                let t3 = row[m].clone();
                let t4 = row[m + 1].clone();
                row[m] = Float::with_val(prec, &t1 * &t3) + Float::with_val(prec, &t2 * &t4);
                row[m + 1] = Float::with_val(prec, &t1 * &t4) - Float::with_val(prec, &t2 * &t3);
            }
        }
        reduce(&mut h, &mut y, &mut a, &mut b);

        let (j, ymin) = y
            .iter()
            .enumerate()
            .map(|(j, x)| (j, Float::with_val(prec, x.abs_ref())))
            .min_by(|x, y| x.1.partial_cmp(&y.1).expect("finite"))
            .expect("nonempty");
        if ymin < threshold {
            let mut rel: Vec<Integer> = (0..n).map(|i| b[i][j].clone()).collect();
            if rel.iter().any(|c| Integer::from(c.abs_ref()) > Integer::from(10u32).pow(max_coeff_digits)) {
                return Ok(None);
            }
            let mut dot = f(0.0);
            for (c, x) in rel.iter().zip(v) {
                dot += Float::with_val(prec, x * c);
            }
            if dot.abs() > threshold {
                return Ok(None);
            }
            if rel.iter().find(|c| **c != 0).is_some_and(|c| *c < 0) {
                for c in &mut rel {
                    *c = Integer::from(-&*c);
                }
            }
            return Ok(Some(rel));
        }

        let hmax = (0..n - 1).map(|i| Float::with_val(prec, h[i][i].abs_ref())).fold(f(0.0), |a, b| a.max(&b));
        if hmax.is_zero() {
            return Ok(None);
        }
        let norm_bound = Float::with_val(prec, hmax.recip_ref());
        if norm_bound > bound {
            return Ok(None);
        }
        let mut exceeded = false;
        for row in &a {
            for c in row {
                if c.significant_bits() as f64 > prec as f64 - 8.0 {
                    exceeded = true;
                }
            }
        }
        if exceeded {
            return Err(Error::Numeric("pslq: precision exhausted".into()));
        }
    }
    Ok(None)
}
