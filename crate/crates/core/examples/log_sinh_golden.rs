//! Log-sinh integrals, formally and at t = 2 log(rho).

use logsine::engine::{Engine, EvalOptions};
use logsine::numerics::{lsh_numeric, Budget};
use logsine::query::{LshArg, LshQuery, Query};
use logsine::reduce::ReduceMode;
use rug::Float;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut engine = Engine::new();
    let formal = Query::Lsh(LshQuery::new(3, 1, LshArg::Formal)?);
    println!("{formal} = {}", engine.evaluate(&formal, &EvalOptions::default())?);
    let golden = Query::Lsh(LshQuery::new(3, 1, LshArg::TwoLogGolden)?);
    println!("{golden} before the table = {}", engine.evaluate(&golden, &EvalOptions::default())?);
    println!("{golden} = {}", engine.evaluate(&golden, &EvalOptions::with_mode(ReduceMode::Heuristic))?);

    let budget = Budget::new(30);
    let t = Float::with_val(budget.prec(), 1.5);
    println!("Lsh[4,2,3/2] ~ {}", lsh_numeric(4, 2, &t, &budget)?.to_string_radix(10, Some(30)));
    Ok(())
}
