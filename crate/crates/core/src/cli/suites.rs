//! Named check suites over a manifest.

use std::cell::OnceCell;

use crate::connection::{christoffel, fit_space_form_constant, riemann, Connection};
use crate::error::{Error, Result};
use crate::framed::{verify_gff_axioms, verify_s_manifold};
use crate::hypersurface::{
    ambient_tangency, characteristic_screen, frame_report, jacobian_minors, lightlike_test, radical_section,
    screen_orthogonal, select_auxiliary, transversal_from, AmbientAlong, CharacteristicVerdict, LightlikeFrame,
};
use crate::induced::{curvature_report, d0_report, d_report, induced_report, InducedGeometry};
use crate::report::CheckReport;
use crate::scalar::RationalExpr;

use super::manifest::{HypersurfaceSpec, Manifest, Request};

pub const SUITES: &[(&str, &str)] = &[
    ("structure", "g.f.f axioms and S-manifold identities of the ambient structure"),
    ("lightlike", "lightlike test by two determinant routes, minors, tangency, existence requests"),
    ("frame", "radical, transversal and characteristic screen construction"),
    ("induced", "B, tau, C, shape operators, induced connection and structure, umbilicity"),
    ("distributions", "integrability and second fundamental forms of D0 and D"),
    ("curvature", "curvature relations on basis triples and space-form fit"),
    ("all", "every suite above, in order"),
];

const ORDER: &[&str] = &["structure", "lightlike", "frame", "induced", "distributions", "curvature"];

/// Shared state so that `all` builds each object once.
struct Run<'a> {
    m: &'a Manifest,
    conn: OnceCell<Connection>,
    frame: OnceCell<(CheckReport, std::result::Result<LightlikeFrame, (String, Error)>)>,
    geom: OnceCell<std::result::Result<InducedGeometry, Error>>,
}

fn vec_text(v: &[RationalExpr], ch: &crate::Chart) -> String {
    format!("({})", v.iter().map(|c| c.to_text(ch)).collect::<Vec<_>>().join(", "))
}

impl<'a> Run<'a> {
    fn new(m: &'a Manifest) -> Run<'a> {
        Run { m, conn: OnceCell::new(), frame: OnceCell::new(), geom: OnceCell::new() }
    }

    fn conn(&self) -> &Connection {
        self.conn.get_or_init(|| christoffel(self.m.structure.metric()))
    }

    fn hyp(&self) -> Option<&HypersurfaceSpec> {
        self.m.hypersurface.as_ref()
    }

    /// Builds the frame step by step; on failure returns the failing step id.
    fn frame(&self, rep: Option<&mut CheckReport>) -> std::result::Result<&LightlikeFrame, &(String, Error)> {
        let (steps, built) = self.frame.get_or_init(|| {
            let mut steps = CheckReport::new("frame");
            let built = self.build_frame(&mut steps);
            (steps, built)
        });
        if let Some(rep) = rep {
            rep.extend(steps.clone());
        }
        built.as_ref()
    }

    fn build_frame(&self, rep: &mut CheckReport) -> std::result::Result<LightlikeFrame, (String, Error)> {
        let s = &self.m.structure;
        let h = self.hyp().expect("checked by caller");
        let f = &h.immersion;
        let ch = f.u_chart().clone();
        let m = s.dim();
        let r = s.r();
        let fail = |rep: &mut CheckReport, id: &str, anchor: &str, e: Error| {
            rep.error(id, anchor, &e);
            Err((id.to_string(), e))
        };
        let two_n = m as i64 - r as i64;
        if two_n < 4 {
            return fail(rep, "frame.dimension", "n >= 2 so that E, N and phi E are independent", Error::DimensionObstruction {
                dim: m,
                r,
                n: two_n / 2,
            });
        }
        rep.pass("frame.dimension", "n >= 2 so that E, N and phi E are independent", "0", format!("n = {}", two_n / 2));
        let amb = match AmbientAlong::new(f, s, self.conn()) {
            Ok(a) => a,
            Err(e) => return fail(rep, "frame.ambient", "ambient structure along the map", e),
        };
        let rad = match radical_section(f, s.metric(), h.e.as_deref()) {
            Ok(r) => r,
            Err(e) => return fail(rep, "frame.radical", "E spans Rad(TM)", e),
        };
        let how = if h.e.is_some() { "supplied and verified" } else { "constructed" };
        rep.pass("frame.radical", "E spans Rad(TM)", &vec_text(&rad.ambient, &ch), how);
        let z = match &h.z {
            Some(z) => z.clone(),
            None => match select_auxiliary(&amb, &rad.ambient) {
                Ok(z) => z,
                Err(e) => return fail(rep, "frame.auxiliary", "Z with g(Z, E) != 0", e),
            },
        };
        let how = if h.z.is_some() { "supplied" } else { "selected from coordinate fields" };
        rep.pass("frame.auxiliary", "Z with g(Z, E) != 0", &vec_text(&z, &ch), how);
        let n = match transversal_from(&amb.g, &rad.ambient, &z) {
            Ok(n) => n,
            Err(e) => return fail(rep, "frame.transversal", "N = (Z - g(Z,Z)/(2 g(Z,E)) E) / g(Z,E)", e),
        };
        rep.pass("frame.transversal", "N = (Z - g(Z,Z)/(2 g(Z,E)) E) / g(Z,E)", &vec_text(&n, &ch), "");
        let fr = match characteristic_screen(amb, rad.ambient, z, n) {
            Ok(fr) => fr,
            Err(e) => return fail(rep, "frame.screen", "characteristic screen S(TM)", e),
        };
        rep.pass("frame.phi-e", "phi E", &vec_text(&fr.phi_e, &ch), "tangent");
        rep.pass("frame.phi-n", "phi N", &vec_text(&fr.phi_n, &ch), "tangent");
        rep.pass("frame.screen", "characteristic screen S(TM)", &fr.screen_basis.len().to_string(), format!("D0 of rank {}", fr.d0_basis.len()));
        let perp: Vec<String> = screen_orthogonal(&fr).iter().map(|v| vec_text(v, &ch)).collect();
        rep.pass("frame.screen-orthogonal", "S(TM) orthogonal complement", &perp.join(", "), format!("rank {}", perp.len()));
        Ok(fr)
    }

    fn geom(&self) -> std::result::Result<&InducedGeometry, Error> {
        let g = self.geom.get_or_init(|| match self.frame(None) {
            Ok(fr) => InducedGeometry::new(fr.clone()),
            Err((_, e)) => Err(e.clone()),
        });
        g.as_ref().map_err(|e| e.clone())
    }

    fn need_hyp(&self, rep: &mut CheckReport, id: &str) -> bool {
        if self.hyp().is_none() {
            rep.skip(id, "hypersurface checks", "manifest has no [hypersurface] section");
            return false;
        }
        true
    }

    fn structure(&self) -> CheckReport {
        let mut rep = CheckReport::new("structure");
        rep.extend(verify_gff_axioms(&self.m.structure));
        rep.extend(verify_s_manifold(&self.m.structure, self.conn()));
        rep
    }

    fn lightlike(&self) -> CheckReport {
        let mut rep = CheckReport::new("lightlike");
        if self.m.request == Some(Request::Characteristic) {
            let anchor = "a characteristic lightlike hypersurface exists";
            match crate::hypersurface::characteristic_obstruction(&self.m.structure) {
                CharacteristicVerdict::NonExistent { form, symbols } => rep.fail(
                    "lightlike.characteristic-request",
                    anchor,
                    &form.to_text(&symbols),
                    "non-existent: with the xi minors forced to zero, Delta is this definite constant form, so every minor vanishes",
                ),
                CharacteristicVerdict::NotExcluded { form, symbols } => rep.pass(
                    "lightlike.characteristic-request",
                    anchor,
                    &form.to_text(&symbols),
                    "not excluded: the restricted minor form is indefinite",
                ),
                CharacteristicVerdict::Undetermined(why) => rep.skip("lightlike.characteristic-request", anchor, why),
            }
        }
        if !self.need_hyp(&mut rep, "lightlike.test") {
            return rep;
        }
        let h = self.hyp().unwrap();
        let f = &h.immersion;
        let ch = f.u_chart().clone();
        let d = jacobian_minors(f);
        rep.pass(
            "lightlike.minors",
            "D^A = minor of the Jacobian without row A",
            &vec_text(&d, &ch),
            "",
        );
        match lightlike_test(f, self.m.structure.metric()) {
            Ok(v) => {
                rep.identity("lightlike.delta", "Delta = det g = 0", &v.delta, &ch);
                rep.identity("lightlike.delta-cauchy-binet", "Delta = D^A M_AB D^B = 0", &v.delta_cauchy_binet, &ch);
            }
            Err(e) => rep.error("lightlike.delta", "Delta = det g = 0", &e),
        }
        let s = &self.m.structure;
        for a in 0..s.r() {
            let id = format!("lightlike.xi-tangent[{}]", a + 1);
            match ambient_tangency(f, s.xi(a)) {
                Ok(Some(t)) => rep.pass(&id, &format!("xi{} is tangent", a + 1), &vec_text(&t, &ch), "parameter components"),
                Ok(None) => rep.fail(&id, &format!("xi{} is tangent", a + 1), "1", "not tangent"),
                Err(e) => rep.error(&id, &format!("xi{} is tangent", a + 1), &e),
            }
        }
        if let Some(e) = &h.e {
            match f.resolve(e) {
                Some(t) => rep.pass("lightlike.e-tangent", "E is tangent", &vec_text(&t, &ch), "parameter components"),
                None => rep.fail("lightlike.e-tangent", "E is tangent", "1", "not tangent"),
            }
        }
        rep
    }

    fn frame_suite(&self) -> CheckReport {
        let mut rep = CheckReport::new("frame");
        if !self.need_hyp(&mut rep, "frame.build") {
            return rep;
        }
        if let Ok(fr) = self.frame(Some(&mut rep)) {
            rep.extend(frame_report(fr));
        }
        rep
    }

    fn with_geom(&self, suite: &str, f: impl FnOnce(&InducedGeometry) -> CheckReport) -> CheckReport {
        let mut rep = CheckReport::new(suite);
        if !self.need_hyp(&mut rep, &format!("{suite}.build")) {
            return rep;
        }
        match self.geom() {
            Ok(g) => rep.extend(f(g)),
            Err(e) => rep.error(&format!("{suite}.build"), "induced geometry of the frame", &e),
        }
        rep
    }

    fn suite(&self, name: &str) -> Result<CheckReport> {
        let rep = match name {
            "structure" => self.structure(),
            "lightlike" => self.lightlike(),
            "frame" => self.frame_suite(),
            "induced" => self.with_geom("induced", induced_report),
            "distributions" => self.with_geom("distributions", |g| {
                let mut r = d0_report(g);
                r.extend(d_report(g));
                r
            }),
            "curvature" => {
                let s = &self.m.structure;
                let rbar = riemann(self.conn(), s.metric());
                let mut rep = CheckReport::new("curvature");
                match fit_space_form_constant(&rbar, s) {
                    Some(c) => rep.pass("curvature.space-form", "R is the S-space-form tensor of constant c", &c.to_string(), "c"),
                    None => rep.pass("curvature.space-form", "R is the S-space-form tensor of constant c", "none", "no constant fits"),
                }
                let rel = self.with_geom("curvature", |g| curvature_report(g, &rbar));
                rep.extend(rel);
                rep
            }
            "all" => {
                let mut rep = CheckReport::new("all");
                for s in ORDER {
                    rep.extend(self.suite(s)?);
                }
                rep
            }
            other => return Err(Error::Shape(format!("unknown suite `{other}`"))),
        };
        Ok(rep)
    }
}

/// Runs one named suite.
pub fn run_suite(m: &Manifest, suite: &str) -> Result<CheckReport> {
    Run::new(m).suite(suite)
}

/// Runs several suites sharing the constructed objects.
pub fn run_suites(m: &Manifest, suites: &[String]) -> Result<CheckReport> {
    let run = Run::new(m);
    let mut rep = CheckReport::new(&suites.join("+"));
    for s in suites {
        rep.extend(run.suite(s)?);
    }
    Ok(rep)
}
