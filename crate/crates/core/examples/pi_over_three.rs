//! Values at pi/3, including a Zucker-type relation.

use logsine::cli::{evaluate_query, parse_query};
use logsine::engine::{Engine, EvalOptions};
use logsine::reduce::ReduceMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut engine = Engine::new();
    let opts = EvalOptions::with_mode(ReduceMode::Heuristic);
    let mut show = |s: &str| -> Result<(), Box<dyn std::error::Error>> {
        let q = parse_query(s)?;
        println!("{q} = {}", evaluate_query(&q, &mut engine, &opts)?);
        Ok(())
    };
    for n in 2..=7 {
        show(&format!("Ls({n},0,pi/3)"))?;
    }
    show("-Ls(4,1,pi/3)")?;
    show("Ls(6,3,pi/3) - 2*Ls(6,1,pi/3)")?;
    Ok(())
}
