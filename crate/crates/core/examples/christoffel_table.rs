//! Prints the nonzero Christoffel symbols of a bundled ambient metric.

use lightframe::cli::catalog;
use lightframe::connection::{christoffel, metric_defects};

fn main() -> lightframe::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "example-4-2.lm".into());
    let m = catalog::resolve(&name)?;
    let ch = m.chart();
    let c = christoffel(m.structure.metric());
    for (h, i, j, v) in c.nonzero_symbols() {
        if i <= j {
            println!("Gamma^{}_{}{} = {}", ch.name(h), ch.name(i), ch.name(j), v.to_text(ch));
        }
    }
    println!("metric compatibility defects: {}", metric_defects(&c, m.structure.metric()).len());
    Ok(())
}
