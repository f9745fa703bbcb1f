//! Recover integer relations among high-precision constants.

use logsine::numerics::{symbol_numeric, Bindings, Budget};
use logsine::reduce::pslq;
use logsine::{ConstSymbol, MultiIndex, RationalAngle};
use rug::ops::Pow;
use rug::Float;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::new(60);
    let b = Bindings::default();
    let num = |s: &ConstSymbol| symbol_numeric(s, &budget, &b);
    let pi = num(&ConstSymbol::Pi)?;

    let z31 = num(&ConstSymbol::Zeta(MultiIndex::nielsen(3, 1)))?;
    let v = [z31, Float::with_val(budget.prec(), (&pi).pow(4u32))];
    println!("zeta(3,1), pi^4 -> {:?}", pslq(&v, 6)?);

    let third = RationalAngle::from_ratio(1, 3);
    let gl31 = num(&ConstSymbol::Gl(MultiIndex::nielsen(3, 1), third))?;
    let v = [gl31, Float::with_val(budget.prec(), (&pi).pow(4u32))];
    println!("Gl[{{3,1}},Pi/3], pi^4 -> {:?}", pslq(&v, 8)?);

    let v = [Float::with_val(budget.prec(), 1), Float::with_val(budget.prec(), 2).sqrt(), pi];
    println!("1, sqrt(2), pi -> {:?}", pslq(&v, 8)?);
    Ok(())
}
