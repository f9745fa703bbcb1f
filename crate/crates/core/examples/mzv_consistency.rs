//! Multiple zeta values forced by consistency of the two routes at pi.
//!
//! `Ls(pi) = Ls(2*pi - pi)` expands through the quasiperiod shift into values
//! at `2*pi` (multiple zeta values) and at `pi` (alternating sums).  The
//! difference must vanish, which pins down one multiple zeta value per shift.

use logsine::argument::quasiperiod_shift;
use logsine::pi::{ls_2pi, ls_pi};
use logsine::reduce::{apply_reductions, ReduceMode};
use logsine::{ConstSymbol, MultiIndex, RationalAngle, SymbolicExpr};

fn consistency(n: u32, k: u32) -> Result<SymbolicExpr, Box<dyn std::error::Error>> {
    let combo = quasiperiod_shift(n, k, 1, &RationalAngle::pi(), false)?;
    let shifted =
        combo.evaluate(|t| if t.sigma == RationalAngle::pi() { ls_pi(t.n, t.k) } else { ls_2pi(t.n, t.k) })?;
    Ok(apply_reductions(&(ls_pi(n, k)? - shifted), ReduceMode::Analytic)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut known: Vec<(ConstSymbol, SymbolicExpr)> = Vec::new();
    for ((n, k), (a, b)) in [((5, 2), (3, 1)), ((6, 2), (4, 1)), ((7, 4), (5, 1))] {
        let mut d = consistency(n, k)?;
        for (s, v) in &known {
            d = d.substitute(|x| (x == s).then(|| v.clone()));
        }
        let z = ConstSymbol::Zeta(MultiIndex::nielsen(a, b));
        let value = d.solve_for(&z).ok_or("condition does not determine the value")?;
        println!("shift at ({n},{k}): {z} = {value}");
        known.push((z, value));
    }
    Ok(())
}
