//! Compare symbolic results with quadrature.

use logsine::engine::{Engine, EvalOptions};
use logsine::numerics::{verify, Bindings, Budget};
use logsine::query::{LsQuery, Query};
use logsine::reduce::ReduceMode;
use logsine::RationalAngle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::new(40);
    let bindings = Bindings::default();
    let mut engine = Engine::new();
    let opts = EvalOptions::with_mode(ReduceMode::Heuristic);
    for (p, r) in [(1, 3), (1, 2), (2, 3), (5, 3)] {
        let sigma = RationalAngle::from_ratio(p, r);
        for k in 0..4 {
            let q = Query::Ls(LsQuery::new(5, k, sigma.clone())?);
            let e = engine.evaluate(&q, &opts)?;
            let res = verify(&q, &e, &budget, &bindings)?;
            println!("{q:<16} residual {:.3e}", res.to_f64());
        }
    }
    Ok(())
}
