use logsine::algebra::parse_expr;
use logsine::engine::{evaluate, Engine, EvalOptions};
use logsine::numerics::{verify, Bindings, Budget};
use logsine::query::{LsQuery, Query};
use logsine::reduce::ReduceMode;
use logsine::RationalAngle;
use rug::Float;

fn ls(n: u32, k: u32, p: i64, q: i64) -> Query {
    Query::Ls(LsQuery::new(n, k, RationalAngle::from_ratio(p, q)).unwrap())
}

fn assert_small(r: Float, bound: f64) {
    assert!(r < Float::with_val(64, bound), "residual {r}");
}

#[test]
fn displayed_closed_forms_match_quadrature() {
    let budget = Budget::new(40);
    let b = Bindings::default();
    let cases = [
        (ls(5, 2, 2, 1), "-13/45*Pi^5"),
        (ls(6, 0, 1, 3), "15/2*Pi*Zeta[5] + 35/36*Pi^3*Zeta[3] + 135/2*Cl[{6},Pi/3]"),
        (ls(5, 2, 2, 3), "4*Gl[{4,1},2*Pi/3] - 8/3*Pi*Gl[{3,1},2*Pi/3] - 8/9*Pi^2*Gl[{2,1},2*Pi/3] - 8/1215*Pi^5"),
    ];
    for (q, e) in cases {
        assert_small(verify(&q, &parse_expr(e).unwrap(), &budget, &b).unwrap(), 1e-25);
    }
}

#[test]
fn misprinted_value_is_rejected_numerically() {
    let budget = Budget::new(30);
    let r = verify(&ls(5, 2, 2, 1), &parse_expr("7/30*Pi^5").unwrap(), &budget, &Bindings::default()).unwrap();
    assert!(r > Float::with_val(64, 1.0));
}

#[test]
fn two_thirds_pi_solver_output_is_exact() {
    let mut engine = Engine::new();
    let q = ls(5, 2, 2, 3);
    let analytic = engine.evaluate(&q, &EvalOptions::default()).unwrap();
    let displayed =
        parse_expr("4*Gl[{4,1},2*Pi/3] - 8/3*Pi*Gl[{3,1},2*Pi/3] - 8/9*Pi^2*Gl[{2,1},2*Pi/3] - 8/1215*Pi^5").unwrap();
    assert_eq!(analytic, displayed);
    assert!(evaluate(&q, ReduceMode::Heuristic).unwrap().is_homogeneous_of(5));
}
