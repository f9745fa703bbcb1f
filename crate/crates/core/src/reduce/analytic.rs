//! Proven reductions applied in every reduce mode.

use rug::{Integer, Rational};

use super::bernoulli::{bernoulli_numbers, bernoulli_poly};
use crate::algebra::{ConstSymbol, MultiIndex, RationalAngle, SymbolicExpr};
use crate::pi::factorial;

fn pow2(e: u32) -> Integer {
    Integer::from(1) << e
}

/// `zeta(2n)` as a rational multiple of `pi^(2n)`.
pub fn zeta_even(w: u32) -> SymbolicExpr {
    assert!(w >= 2 && w.is_multiple_of(2));
    let b = &bernoulli_numbers(w)[w as usize];
    let sign = if (w / 2) % 2 == 1 { 1 } else { -1 };
    let c = (b * Rational::from(pow2(w) * sign)) / Rational::from(factorial(w) * 2u32);
    SymbolicExpr::pi_pow(w).scale_rational(&c)
}

/// `Gl_n(q*pi)` for `0 < q < 2` (or `0 <= q <= 2` when `n >= 2`).
pub fn gl_depth1_reduce(n: u32, q: &RationalAngle) -> SymbolicExpr {
    let x = Rational::from(q.q() / 2u32);
    let sign = if (1 + n / 2).is_multiple_of(2) { 1 } else { -1 };
    let c = Rational::from((pow2(n - 1) * sign, factorial(n))) * bernoulli_poly(n).eval(&x);
    SymbolicExpr::pi_pow(n).scale_rational(&c)
}

/// `Cl_w(pi/3)` for odd `w >= 3`.
pub fn cl_odd_pi3_reduce(w: u32) -> Option<SymbolicExpr> {
    if w < 3 || w.is_multiple_of(2) {
        return None;
    }
    let n = (w - 1) / 2;
    let a = Rational::from(1) - Rational::from((1, pow2(2 * n)));
    let b = Rational::from(1) - Rational::from((1, Integer::from(Integer::u_pow_u(9, n))));
    Some(SymbolicExpr::zeta(MultiIndex::nielsen(w, 0)).scale_rational(&(a * b / 2u32)))
}

/// `Cl_w(q*pi)` for odd `w >= 3` and `q` in `{1/3, 1/2, 2/3}`.
pub fn cl_odd_depth1(w: u32, q: &RationalAngle) -> Option<SymbolicExpr> {
    if w < 3 || w.is_multiple_of(2) {
        return None;
    }
    let z = SymbolicExpr::zeta(MultiIndex::nielsen(w, 0));
    let q = q.q();
    if *q == Rational::from((1, 3)) {
        cl_odd_pi3_reduce(w)
    } else if *q == Rational::from((1, 2)) {
        let c = (Rational::from((1, pow2(w - 1))) - 1u32) / Rational::from(pow2(w));
        Some(z.scale_rational(&c))
    } else if *q == Rational::from((2, 3)) {
        let c = (Rational::from((1, Integer::from(Integer::u_pow_u(3, w - 1)))) - 1u32) / 2u32;
        Some(z.scale_rational(&c))
    } else {
        None
    }
}

/// Whether the `Cl` (resp. `Gl`) symbol of this index is the real part of `Li`.
pub fn cl_is_real_part(ix: &MultiIndex) -> bool {
    ix.weight() % 2 == 1
}

/// The symbol carrying the real or imaginary part of `Li_ix(exp(i*q*pi))`.
pub fn part_symbol(ix: &MultiIndex, q: &RationalAngle, real: bool) -> ConstSymbol {
    if real == cl_is_real_part(ix) {
        ConstSymbol::Cl(ix.clone(), q.clone())
    } else {
        ConstSymbol::Gl(ix.clone(), q.clone())
    }
}

fn reduce_angle_symbol(ix: &MultiIndex, q: &RationalAngle, is_cl: bool) -> Option<SymbolicExpr> {
    let real = is_cl == cl_is_real_part(ix);
    let two = Rational::from(2);
    let turns = Rational::from(q.q() / 2u32).floor();
    let r = q.q() - turns * 2u32;
    if r != *q.q() {
        return Some(SymbolicExpr::symbol(part_symbol(ix, &RationalAngle::new(r), real)));
    }
    if r > 1 {
        let mirrored = SymbolicExpr::symbol(part_symbol(ix, &RationalAngle::new(two - r), real));
        return Some(if real { mirrored } else { -mirrored });
    }
    if r == 0 {
        if !real {
            return Some(SymbolicExpr::zero());
        }
        return ix.is_admissible().then(|| SymbolicExpr::zeta(ix.clone()));
    }
    if r == 1 {
        return Some(if real { SymbolicExpr::li_at_minus_one(ix.clone()) } else { SymbolicExpr::zero() });
    }
    if ix.depth() == 1 {
        let w = ix.weight();
        if !is_cl {
            return Some(gl_depth1_reduce(w, q));
        }
        return cl_odd_depth1(w, q);
    }
    None
}

/// Proven rewrite for `s`, if any.
pub fn analytic_rule(s: &ConstSymbol) -> Option<SymbolicExpr> {
    match s {
        ConstSymbol::Zeta(ix) => {
            if ix.depth() == 1 && ix.first() % 2 == 0 {
                return Some(zeta_even(ix.first()));
            }
            let (a, b) = ix.as_nielsen()?;
            if b > 0 && a >= 2 && a - 2 < b {
                return Some(SymbolicExpr::zeta(MultiIndex::nielsen(b + 2, a - 2)));
            }
            None
        }
        ConstSymbol::LiMinusOne(ix) if ix.depth() == 1 => {
            let k = ix.first();
            if k == 1 {
                return Some(-SymbolicExpr::symbol(ConstSymbol::Log2));
            }
            let c = Rational::from(1) - Rational::from((1, pow2(k - 1)));
            Some(-SymbolicExpr::zeta(ix.clone()).scale_rational(&c))
        }
        ConstSymbol::Cl(ix, q) => reduce_angle_symbol(ix, q, true),
        ConstSymbol::Gl(ix, q) => reduce_angle_symbol(ix, q, false),
        _ => None,
    }
}
