//! Fits the space-form constant of the ambient and checks the curvature
//! relations on every basis triple of the hypersurface.

use lightframe::cli::catalog;
use lightframe::connection::{christoffel, fit_space_form_constant, riemann};
use lightframe::hypersurface::{build_frame, FrameRequest};
use lightframe::induced::{curvature_report, InducedGeometry};
use lightframe::report::Status;

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-2.lm")?;
    let h = m.hypersurface.as_ref().expect("hypersurface");
    let s = &m.structure;
    let conn = christoffel(s.metric());
    let rbar = riemann(&conn, s.metric());
    match fit_space_form_constant(&rbar, s) {
        Some(c) => println!("ambient is a space form with c = {c}"),
        None => println!("ambient is not a space form"),
    }
    let req = FrameRequest { e: h.e.clone(), z: h.z.clone() };
    let g = InducedGeometry::new(build_frame(&h.immersion, s, &conn, &req)?)?;
    let rep = curvature_report(&g, &rbar);
    println!("{} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    for it in rep.failures() {
        println!("  {} {}", it.id, it.witness);
    }
    Ok(())
}
