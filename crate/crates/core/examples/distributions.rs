//! Integrability and second fundamental forms of the distributions D0 and D.

use lightframe::cli::{catalog, emit_report, run_suite, Format};

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-2.lm")?;
    let rep = run_suite(&m, "distributions")?;
    print!("{}", emit_report(&rep, Format::Human));
    for id in ["d0.criterion", "d.cond-b", "d.criterion", "d.agreement"] {
        let it = rep.item(id).expect("item");
        println!("{id}: witness {} ({})", it.witness, it.detail);
    }
    Ok(())
}
