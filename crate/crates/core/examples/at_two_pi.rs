//! Multiples of 2*pi and arguments beyond pi.

use logsine::argument::reduce_query;
use logsine::engine::evaluate;
use logsine::query::{LsQuery, Query};
use logsine::reduce::ReduceMode;
use logsine::RationalAngle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Query::Ls(LsQuery::new(5, 2, RationalAngle::new(2))?);
    println!("{q} = {}", evaluate(&q, ReduceMode::Analytic)?);
    for m in 1..=3 {
        let q = Query::Ls(LsQuery::new(4, 1, RationalAngle::new(2 * m))?);
        println!("{q} = {}", evaluate(&q, ReduceMode::Heuristic)?);
    }
    let shifted = LsQuery::new(4, 1, RationalAngle::from_ratio(5, 3))?;
    let combo = reduce_query(&shifted)?;
    println!("{shifted} rewrites as:");
    for (c, t) in &combo.terms {
        println!("  ({c}) * {t}");
    }
    println!("  = {}", evaluate(&Query::Ls(shifted), ReduceMode::Heuristic)?);
    Ok(())
}
