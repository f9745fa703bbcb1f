//! Log-sine-cosine integrals at pi.

use logsine::engine::evaluate;
use logsine::numerics::{lsc_numeric, Budget};
use logsine::query::{LscQuery, Query};
use logsine::reduce::ReduceMode;
use logsine::RationalAngle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::new(30);
    for (m, n) in [(1, 2), (2, 2), (2, 3), (3, 3)] {
        let q = Query::Lsc(LscQuery::new(m, n)?);
        let v = lsc_numeric(m, n, &RationalAngle::pi(), &budget)?;
        println!("{q} = {}  (~ {})", evaluate(&q, ReduceMode::Analytic)?, v.to_string_radix(10, Some(20)));
    }
    Ok(())
}
