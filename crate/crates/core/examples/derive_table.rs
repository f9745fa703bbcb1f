//! Regenerate the shipped reduction table by integer relation search.
//!
//! ```text
//! cargo run --release --example derive_table -- crates/core/data/reductions.table
//! ```

use std::time::Instant;

use logsine::reduce::{derive, shipped_families, DeriveConfig, ReductionTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1);
    let mut table = ReductionTable::new();
    table.add_comment("generated by examples/derive_table.rs; every rule re-verified at its recorded digits");
    for (family, work_digits) in shipped_families() {
        let start = Instant::now();
        let d = derive(&family, DeriveConfig { work_digits, verify_digits: 60 })?;
        eprintln!("{}: {} rules in {:.1?}", family.name, d.rules.len(), start.elapsed());
        let heads: Vec<String> = family.atoms.iter().chain(&d.new_heads).map(ToString::to_string).collect();
        table.add_comment(format!("{} irreducibles: {}", family.name, heads.join(", ")));
        for s in &d.new_heads {
            eprintln!("  no relation for {s}; kept as irreducible");
        }
        for r in d.rules {
            table.insert(r);
        }
    }
    table.check()?;
    let text = table.to_string();
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
