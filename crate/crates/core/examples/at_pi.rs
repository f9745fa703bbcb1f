//! Closed forms of log-sine integrals at pi.

use logsine::engine::evaluate;
use logsine::pi::ls_pi_basic;
use logsine::query::{LsQuery, Query};
use logsine::reduce::{apply_reductions, ReduceMode};
use logsine::RationalAngle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=8 {
        let e = apply_reductions(&ls_pi_basic(n)?, ReduceMode::Analytic)?;
        println!("Ls[{n},0,Pi] = {e}");
    }
    for (n, k) in [(4, 2), (5, 1), (6, 1), (7, 4)] {
        let q = Query::Ls(LsQuery::new(n, k, RationalAngle::pi())?);
        println!("{q} = {}", evaluate(&q, ReduceMode::Heuristic)?);
    }
    Ok(())
}
