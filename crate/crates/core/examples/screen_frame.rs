//! Builds the radical, transversal and characteristic screen of a hypersurface,
//! constructing E and Z when they are not supplied.

use lightframe::cli::catalog;
use lightframe::connection::christoffel;
use lightframe::hypersurface::{build_frame, screen_gram, screen_orthogonal, FrameRequest};
use lightframe::linalg::inertia;
use lightframe::RationalExpr;

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-2.lm")?;
    let f = &m.hypersurface.as_ref().expect("hypersurface").immersion;
    let s = &m.structure;
    let fr = build_frame(f, s, &christoffel(s.metric()), &FrameRequest::default())?;
    let u = fr.u_chart().clone();
    let show = |v: &[RationalExpr]| v.iter().map(|c| c.to_text(&u)).collect::<Vec<_>>().join(", ");
    println!("E     = ({})", show(&fr.e));
    println!("Z     = ({})", show(&fr.z));
    println!("N     = ({})", show(&fr.n));
    println!("phi E = ({})", show(&fr.phi_e));
    println!("phi N = ({})", show(&fr.phi_n));
    println!("g(N, N) = {}, g(N, E) = {}", fr.amb.inner(&fr.n, &fr.n).to_text(&u), fr.amb.inner(&fr.n, &fr.e).to_text(&u));
    for (l, b) in fr.tangent_labels().iter().zip(fr.tangent_basis()) {
        println!("{l:>4} = ({})", show(&b));
    }
    println!("screen inertia (pos, neg, zero): {:?}", inertia(&screen_gram(&fr)));
    for w in screen_orthogonal(&fr) {
        println!("S(TM) orthogonal: ({})", show(&w));
    }
    Ok(())
}
