//! Decides lightlikeness of a parametrized hypersurface by two determinant routes.

use lightframe::cli::catalog;
use lightframe::hypersurface::{ambient_tangency, jacobian_minors, lightlike_test};

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-2.lm")?;
    let f = &m.hypersurface.as_ref().expect("hypersurface").immersion;
    let u = f.u_chart();
    let minors: Vec<String> = jacobian_minors(f).iter().map(|d| d.to_text(u)).collect();
    println!("minors D^A: {}", minors.join(", "));
    let v = lightlike_test(f, m.structure.metric())?;
    println!("direct Delta = {}", v.delta.to_text(u));
    println!("Cauchy-Binet Delta = {}", v.delta_cauchy_binet.to_text(u));
    println!("lightlike: {}", v.lightlike);
    for a in 0..m.structure.r() {
        let t = ambient_tangency(f, m.structure.xi(a))?;
        println!("xi{} tangent: {:?}", a + 1, t.map(|v| v.iter().map(|c| c.to_text(u)).collect::<Vec<_>>()));
    }
    Ok(())
}
