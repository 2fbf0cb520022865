//! Checks the structure axioms and S-manifold identities of each bundled ambient.

use lightframe::cli::catalog;
use lightframe::connection::christoffel;
use lightframe::framed::{verify_gff_axioms, verify_s_manifold};

fn main() -> lightframe::Result<()> {
    for (name, _) in catalog::BUNDLED {
        let m = catalog::bundled(name)?;
        let s = &m.structure;
        let mut rep = verify_gff_axioms(s);
        rep.extend(verify_s_manifold(s, &christoffel(s.metric())));
        println!("{name}: eps = {:?}", s.epsilons());
        for it in &rep.items {
            println!("  {:<5} {:<18} {}", it.status.as_str(), it.id, it.anchor);
        }
    }
    Ok(())
}
