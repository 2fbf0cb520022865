//! Tabulates B, tau and C on the tangent basis [E, xi, U, V].

use lightframe::cli::catalog;
use lightframe::connection::christoffel;
use lightframe::hypersurface::{build_frame, FrameRequest};
use lightframe::induced::InducedGeometry;

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-2.lm")?;
    let h = m.hypersurface.as_ref().expect("hypersurface");
    let s = &m.structure;
    let req = FrameRequest { e: h.e.clone(), z: h.z.clone() };
    let g = InducedGeometry::new(build_frame(&h.immersion, s, &christoffel(s.metric()), &req)?)?;
    let ch = g.chart();
    let l = g.labels();
    for i in 0..l.len() {
        print!("tau({}) = {:<4}", l[i], g.tau(i).to_text(ch));
        let b: Vec<String> = (0..l.len()).map(|j| format!("{:>3}", g.b(i, j).to_text(ch))).collect();
        print!("  B: {}", b.join(" "));
        let c: Vec<String> = (1..l.len()).map(|j| format!("{:>3}", g.c(i, j).to_text(ch))).collect();
        println!("  C: {}", c.join(" "));
    }
    for i in 0..l.len() {
        println!("A_N {} = {}", l[i], g.describe(g.a_n(i)));
    }
    Ok(())
}
