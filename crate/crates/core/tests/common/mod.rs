#![allow(dead_code)]

use lightframe::cli::{catalog, Manifest};
use lightframe::connection::christoffel;
use lightframe::hypersurface::{build_frame, FrameRequest, LightlikeFrame};
use lightframe::induced::InducedGeometry;
use lightframe::{parse_expression, Chart, RationalExpr};

pub fn manifest(name: &str) -> Manifest {
    catalog::bundled(name).expect("bundled manifest parses")
}

pub fn ex(src: &str, ch: &Chart) -> RationalExpr {
    parse_expression(src, ch).unwrap_or_else(|e| panic!("`{src}`: {e}"))
}

pub fn exs(srcs: &[&str], ch: &Chart) -> Vec<RationalExpr> {
    srcs.iter().map(|s| ex(s, ch)).collect()
}

pub fn frame(m: &Manifest) -> LightlikeFrame {
    let h = m.hypersurface.as_ref().expect("manifest has a hypersurface");
    let c = christoffel(m.structure.metric());
    let req = FrameRequest { e: h.e.clone(), z: h.z.clone() };
    build_frame(&h.immersion, &m.structure, &c, &req).expect("frame builds")
}

pub fn geometry(m: &Manifest) -> InducedGeometry {
    InducedGeometry::new(frame(m)).expect("induced geometry")
}

pub fn ambient(name: &str) -> Chart {
    manifest(name).chart().clone()
}
