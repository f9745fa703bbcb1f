use logsine::algebra::parse_expr;
use logsine::{ConstSymbol, GaussianRational, MultiIndex, RationalAngle, SymbolicExpr, Weight};
use proptest::prelude::*;
use rug::Rational;

fn symbol() -> impl Strategy<Value = ConstSymbol> {
    prop_oneof![
        Just(ConstSymbol::Pi),
        Just(ConstSymbol::Log2),
        (2u32..6).prop_map(|a| ConstSymbol::Zeta(MultiIndex::nielsen(a, 0))),
        (2u32..5, 1u32..3).prop_map(|(a, b)| ConstSymbol::Zeta(MultiIndex::nielsen(a, b))),
        (2u32..5, 0u32..3).prop_map(|(a, b)| ConstSymbol::LiMinusOne(MultiIndex::nielsen(a, b))),
        (2u32..5, 1i64..6)
            .prop_map(|(a, p)| ConstSymbol::Cl(MultiIndex::nielsen(a, 0), RationalAngle::from_ratio(p, 3))),
        (2u32..5, 0u32..2)
            .prop_map(|(a, b)| ConstSymbol::Gl(MultiIndex::nielsen(a, b), RationalAngle::from_ratio(1, 3))),
    ]
}

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-20i64..20, 1i64..9, -3i64..4, 1i64..5)
        .prop_map(|(a, b, c, d)| GaussianRational::new(Rational::from((a, b)), Rational::from((c, d))))
}

fn term() -> impl Strategy<Value = SymbolicExpr> {
    (coeff(), prop::collection::vec((symbol(), 1u32..3), 0..3)).prop_map(|(c, fs)| {
        fs.into_iter().fold(SymbolicExpr::constant(c), |acc, (s, e)| acc * SymbolicExpr::symbol(s).pow(e))
    })
}

fn expr() -> impl Strategy<Value = SymbolicExpr> {
    prop::collection::vec(term(), 0..5).prop_map(|ts| ts.into_iter().fold(SymbolicExpr::zero(), |a, b| a + b))
}

fn homogeneous(w: u32) -> impl Strategy<Value = SymbolicExpr> {
    prop::collection::vec((coeff(), 0..=w), 0..4).prop_map(move |ts| {
        ts.into_iter().fold(SymbolicExpr::zero(), |acc, (c, p)| {
            let rest = w - p;
            let t = SymbolicExpr::constant(c) * SymbolicExpr::pi_pow(p);
            let t = if rest >= 2 {
                t * SymbolicExpr::zeta(MultiIndex::nielsen(rest, 0))
            } else {
                t * SymbolicExpr::pi_pow(rest)
            };
            acc + t
        })
    })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes_and_associates(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse(a in expr()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn normalization_idempotent(a in expr()) {
        let again = &a + &SymbolicExpr::zero();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(a.real_component().real_component(), a.real_component());
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn grading_is_additive(a in homogeneous(3), b in homogeneous(4)) {
        let p = &a * &b;
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(p.weight(), Weight::Homogeneous(7));
        }
    }

    #[test]
    fn symbol_order_is_total(x in symbol(), y in symbol()) {
        if x != y {
            prop_assert!((x < y) ^ (y < x));
        } else {
            prop_assert_eq!(x.cmp(&y), std::cmp::Ordering::Equal);
        }
    }

    #[test]
    fn text_round_trip(a in expr()) {
        prop_assert_eq!(parse_expr(&a.to_string()).unwrap(), a);
    }
}
