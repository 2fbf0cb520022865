//! Induced geometry of a characteristic lightlike hypersurface: fundamental
//! forms, shape operators, induced connection and structure, distribution
//! theory and curvature relations.
//!
//! Tangent fields are parameter-chart components; ambient fields are
//! components along the map.

use crate::chart::Chart;
use crate::connection::CurvatureTensor;
use crate::error::{Error, Result};
use crate::hypersurface::LightlikeFrame;
use crate::linalg::{self, Matrix};
use crate::report::CheckReport;
use crate::scalar::RationalExpr;
use crate::tensor::{bracket, directional};

type Vector = Vec<RationalExpr>;

fn add(a: &[RationalExpr], b: &[RationalExpr]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[RationalExpr], b: &[RationalExpr]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(c: &RationalExpr, a: &[RationalExpr]) -> Vector {
    if c.is_zero() {
        return vec![RationalExpr::zero(); a.len()];
    }
    a.iter().map(|x| c * x).collect()
}

fn neg(a: &[RationalExpr]) -> Vector {
    a.iter().map(|x| -x).collect()
}

fn pair_label(a: &str, b: &str) -> String {
    format!("[{a},{b}]")
}

fn not_tangent(what: &str) -> Error {
    Error::NotTangent(what.to_string())
}

// Primitive evaluations on the frame.

fn nabla_bar(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> Vector {
    fr.amb.nabla(x, &fr.push(y))
}

fn metric(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    fr.amb.inner(&fr.push(x), &fr.push(y))
}

fn b_form(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    fr.amb.inner(&nabla_bar(fr, x, y), &fr.e)
}

fn tau_form(fr: &LightlikeFrame, x: &[RationalExpr]) -> RationalExpr {
    fr.amb.inner(&fr.amb.nabla(x, &fr.n), &fr.e)
}

/// `PY = Y - ḡ(Y, N) E`.
fn project(fr: &LightlikeFrame, y: &[RationalExpr]) -> Vector {
    let k = fr.amb.inner(&fr.push(y), &fr.n);
    sub(y, &scale(&k, &fr.e_tan))
}

fn c_form(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    fr.amb.inner(&nabla_bar(fr, x, &project(fr, y)), &fr.n)
}

fn connection(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    let nb = nabla_bar(fr, x, y);
    let b = fr.amb.inner(&nb, &fr.e);
    fr.resolve(&sub(&nb, &scale(&b, &fr.n))).ok_or_else(|| not_tangent("nabla_X Y"))
}

fn shape(fr: &LightlikeFrame, x: &[RationalExpr]) -> Result<(Vector, Vector)> {
    let t = tau_form(fr, x);
    let dn = fr.amb.nabla(x, &fr.n);
    let an = fr.resolve(&neg(&sub(&dn, &scale(&t, &fr.n)))).ok_or_else(|| not_tangent("A_N X"))?;
    let ne = connection(fr, x, &fr.e_tan)?;
    let ae = neg(&add(&ne, &scale(&t, &fr.e_tan)));
    Ok((an, ae))
}

fn u_form(fr: &LightlikeFrame, x: &[RationalExpr]) -> RationalExpr {
    fr.amb.inner(&fr.push(x), &fr.v_amb())
}

fn phi_u(fr: &LightlikeFrame, x: &[RationalExpr]) -> Result<(Vector, RationalExpr)> {
    let jx = fr.push(x);
    let u = fr.amb.inner(&jx, &fr.v_amb());
    let p = sub(&fr.amb.phi(&jx), &scale(&u, &fr.n));
    Ok((fr.resolve(&p).ok_or_else(|| not_tangent("phi X"))?, u))
}

/// `φ̄X` for a tangent `X` whose image stays tangent.
fn phi_bar_tan(fr: &LightlikeFrame, x: &[RationalExpr]) -> Result<Vector> {
    fr.resolve(&fr.amb.phi(&fr.push(x))).ok_or_else(|| not_tangent("phi_bar X"))
}

/// Fundamental forms, shape operators, induced connection and structure
/// tabulated on the tangent basis `[E, D₀ basis, U, V]`.
#[derive(Clone, Debug)]
pub struct InducedGeometry {
    frame: LightlikeFrame,
    basis: Vec<Vector>,
    labels: Vec<String>,
    basis_matrix: Matrix,
    gram: Matrix,
    b: Matrix,
    tau: Vector,
    c: Matrix,
    nabla: Vec<Vec<Vector>>,
    a_n: Vec<Vector>,
    a_e: Vec<Vector>,
    phi: Vec<Vector>,
    u: Vector,
}

impl InducedGeometry {
    pub fn new(frame: LightlikeFrame) -> Result<InducedGeometry> {
        let basis = frame.tangent_basis();
        let labels = frame.tangent_labels();
        let k = basis.len();
        let basis_matrix = linalg::transpose(&basis);
        if linalg::rank(&basis) != k {
            return Err(Error::DegenerateScreen("tangent basis is not independent".into()));
        }
        let gram = (0..k).map(|i| (0..k).map(|j| metric(&frame, &basis[i], &basis[j])).collect()).collect();
        let b = (0..k).map(|i| (0..k).map(|j| b_form(&frame, &basis[i], &basis[j])).collect()).collect();
        let tau = basis.iter().map(|x| tau_form(&frame, x)).collect();
        let c = (0..k).map(|i| (0..k).map(|j| c_form(&frame, &basis[i], &basis[j])).collect()).collect();
        let nabla = (0..k)
            .map(|i| (0..k).map(|j| connection(&frame, &basis[i], &basis[j])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut a_n = Vec::with_capacity(k);
        let mut a_e = Vec::with_capacity(k);
        let mut phi = Vec::with_capacity(k);
        let mut u = Vec::with_capacity(k);
        for x in &basis {
            let (an, ae) = shape(&frame, x)?;
            a_n.push(an);
            a_e.push(ae);
            let (p, ux) = phi_u(&frame, x)?;
            phi.push(p);
            u.push(ux);
        }
        Ok(InducedGeometry { frame, basis, labels, basis_matrix, gram, b, tau, c, nabla, a_n, a_e, phi, u })
    }

    pub fn frame(&self) -> &LightlikeFrame {
        &self.frame
    }

    pub fn chart(&self) -> &Chart {
        self.frame.u_chart()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Position of a basis label such as `E`, `xi1`, `U`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `g(X_i, X_j)` on the tangent basis.
    pub fn gram(&self, i: usize, j: usize) -> &RationalExpr {
        &self.gram[i][j]
    }

    pub fn b(&self, i: usize, j: usize) -> &RationalExpr {
        &self.b[i][j]
    }

    pub fn tau(&self, i: usize) -> &RationalExpr {
        &self.tau[i]
    }

    /// `C(X_i, P X_j)`.
    pub fn c(&self, i: usize, j: usize) -> &RationalExpr {
        &self.c[i][j]
    }

    /// `∇_{X_i} X_j` in parameter components.
    pub fn nabla(&self, i: usize, j: usize) -> &[RationalExpr] {
        &self.nabla[i][j]
    }

    pub fn a_n(&self, i: usize) -> &[RationalExpr] {
        &self.a_n[i]
    }

    pub fn a_e(&self, i: usize) -> &[RationalExpr] {
        &self.a_e[i]
    }

    pub fn phi(&self, i: usize) -> &[RationalExpr] {
        &self.phi[i]
    }

    pub fn u(&self, i: usize) -> &RationalExpr {
        &self.u[i]
    }

    /// Coefficients of a tangent field in the tangent basis.
    pub fn coordinates(&self, v: &[RationalExpr]) -> Option<Vector> {
        linalg::solve(&self.basis_matrix, v)
    }

    /// A tangent field written as a combination of basis labels.
    pub fn describe(&self, v: &[RationalExpr]) -> String {
        match self.coordinates(v) {
            Some(c) => combination(&c, &self.labels, self.chart()),
            None => "?".into(),
        }
    }

    fn d0_range(&self) -> std::ops::Range<usize> {
        1..1 + self.frame.d0_basis.len()
    }

    fn u_index(&self) -> usize {
        self.basis.len() - 2
    }

    fn v_index(&self) -> usize {
        self.basis.len() - 1
    }

    /// Screen members of the tangent basis: `D₀`, `U`, `V`.
    fn screen_range(&self) -> std::ops::Range<usize> {
        1..self.basis.len()
    }
}

/// Text of `Σ c_i label_i`.
pub fn combination(coeffs: &[RationalExpr], labels: &[String], chart: &Chart) -> String {
    let mut parts = Vec::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_one() {
            l.clone()
        } else if (-c).is_one() {
            format!("-{l}")
        } else {
            format!("({})*{l}", c.to_text(chart))
        };
        parts.push(s);
    }
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        match (k, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
            (_, None) => out.push_str(&format!(" + {p}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `B(X, Y) = ḡ(∇̄_X Y, E)`.
pub fn second_fundamental_b(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    b_form(&geom.frame, x, y)
}

/// `τ(X) = ḡ(∇̄_X N, E)`.
pub fn transversal_tau(geom: &InducedGeometry, x: &[RationalExpr]) -> RationalExpr {
    tau_form(&geom.frame, x)
}

/// `C(X, PY) = ḡ(∇̄_X PY, N)`; `y` is projected onto the screen first.
pub fn screen_form_c(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    c_form(&geom.frame, x, y)
}

/// `(A_N X, A*_E X)`.
pub fn shape_operators(geom: &InducedGeometry, x: &[RationalExpr]) -> Result<(Vector, Vector)> {
    shape(&geom.frame, x)
}

/// `∇_X Y = ∇̄_X Y - B(X, Y) N`.
pub fn induced_connection(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    connection(&geom.frame, x, y)
}

/// `(φX, u(X))` with `φ̄X = φX + u(X) N`.
pub fn induced_phi(geom: &InducedGeometry, x: &[RationalExpr]) -> Result<(Vector, RationalExpr)> {
    phi_u(&geom.frame, x)
}

/// Records whether a condition holds without counting a violation as a
/// failure. Returns whether it holds.
fn condition<I, L>(rep: &mut CheckReport, id: &str, anchor: &str, chart: &Chart, defects: I) -> bool
where
    I: IntoIterator<Item = (L, RationalExpr)>,
    L: std::fmt::Display,
{
    let mut total = 0usize;
    let mut bad = 0usize;
    let mut first: Option<(String, RationalExpr)> = None;
    for (l, d) in defects {
        total += 1;
        if !d.is_zero() {
            bad += 1;
            if first.is_none() {
                first = Some((l.to_string(), d));
            }
        }
    }
    match first {
        None => {
            rep.pass(id, anchor, "0", format!("holds ({total} components)"));
            true
        }
        Some((l, d)) => {
            rep.pass(id, anchor, &d.to_text(chart), format!("violated: {bad} of {total} components, first at {l}"));
            false
        }
    }
}

fn record(rep: &mut CheckReport, id: &str, anchor: &str, holds: bool, detail: impl Into<String>) {
    let verdict = if holds { "yes" } else { "no" };
    let detail = detail.into();
    let detail = if detail.is_empty() { verdict.to_string() } else { format!("{verdict}: {detail}") };
    rep.pass(id, anchor, if holds { "0" } else { "1" }, detail);
}

fn push_error<T>(rep: &mut CheckReport, id: &str, anchor: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            rep.error(id, anchor, &e);
            None
        }
    }
}

fn vector_defects(label: &str, d: &[RationalExpr]) -> Vec<(String, RationalExpr)> {
    d.iter().enumerate().map(|(k, v)| (format!("{label}[{}]", k + 1), v.clone())).collect()
}

/// Tables of `B`, `τ`, `C`, the shape relations, the non-metricity of `∇`,
/// the induced structure and its covariant identities, then the totally
/// geodesic and umbilicity detectors.
pub fn induced_report(geom: &InducedGeometry) -> CheckReport {
    let mut rep = CheckReport::new("induced");
    let fr = &geom.frame;
    let ch = geom.chart().clone();
    let k = geom.basis.len();
    let l = &geom.labels;
    let amb = &fr.amb;

    for i in 0..k {
        for j in 0..k {
            rep.pass(&format!("induced.B{}", pair_label(&l[i], &l[j])), &format!("B({}, {})", l[i], l[j]), &geom.b[i][j].to_text(&ch), "value");
        }
    }
    for i in 0..k {
        rep.pass(&format!("induced.tau[{}]", l[i]), &format!("tau({})", l[i]), &geom.tau[i].to_text(&ch), "value");
    }
    for i in 0..k {
        for j in geom.screen_range() {
            rep.pass(&format!("induced.C{}", pair_label(&l[i], &l[j])), &format!("C({}, {})", l[i], l[j]), &geom.c[i][j].to_text(&ch), "value");
        }
    }
    for i in 0..k {
        rep.pass(&format!("induced.A_N[{}]", l[i]), &format!("A_N {}", l[i]), &geom.describe(&geom.a_n[i]), "value");
        rep.pass(&format!("induced.A_E[{}]", l[i]), &format!("A*_E {}", l[i]), &geom.describe(&geom.a_e[i]), "value");
    }

    rep.identities("induced.b-radical", "B(X, E) = 0", &ch, (0..k).map(|i| (pair_label(&l[i], "E"), geom.b[i][0].clone())));
    rep.identities(
        "induced.b-symmetric",
        "B(X, Y) = B(Y, X)",
        &ch,
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| (pair_label(&l[i], &l[j]), &geom.b[i][j] - &geom.b[j][i])),
    );
    let an_amb: Vec<Vector> = geom.a_n.iter().map(|v| fr.push(v)).collect();
    let ae_amb: Vec<Vector> = geom.a_e.iter().map(|v| fr.push(v)).collect();
    let screen: Vec<usize> = geom.screen_range().collect();
    let mut d_an = Vec::new();
    let mut d_ae = Vec::new();
    for i in 0..k {
        for &j in &screen {
            let py = fr.push(&geom.basis[j]);
            d_an.push((pair_label(&l[i], &l[j]), amb.inner(&an_amb[i], &py) - &geom.c[i][j]));
            d_ae.push((pair_label(&l[i], &l[j]), amb.inner(&ae_amb[i], &py) - &geom.b[i][j]));
        }
    }
    rep.identities("induced.shape-an-c", "g(A_N X, PY) = C(X, PY)", &ch, d_an);
    rep.identities("induced.shape-ae-b", "g(A*_E X, PY) = B(X, PY)", &ch, d_ae);
    rep.identities("induced.shape-an-n", "g(A_N X, N) = 0", &ch, (0..k).map(|i| (l[i].clone(), amb.inner(&an_amb[i], &fr.n))));
    rep.identities("induced.shape-ae-n", "g(A*_E X, N) = 0", &ch, (0..k).map(|i| (l[i].clone(), amb.inner(&ae_amb[i], &fr.n))));
    rep.identities("induced.shape-ae-e", "A*_E E = 0", &ch, vector_defects("E", &geom.a_e[0]));

    // (∇_X g)(Y, Z) against B(X,Y) g(Z,N) + B(X,Z) g(Y,N)
    let gn: Vector = geom.basis.iter().map(|y| amb.inner(&fr.push(y), &fr.n)).collect();
    let mut nonmetric = Vec::new();
    let mut screen_metric = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for m in 0..k {
                let lhs = directional(&geom.basis[i], &geom.gram[j][m])
                    - metric(fr, &geom.nabla[i][j], &geom.basis[m])
                    - metric(fr, &geom.basis[j], &geom.nabla[i][m]);
                let rhs = &geom.b[i][j] * &gn[m] + &geom.b[i][m] * &gn[j];
                let label = format!("[{},{},{}]", l[i], l[j], l[m]);
                if j > 0 && m > 0 {
                    screen_metric.push((label.clone(), lhs.clone()));
                }
                nonmetric.push((label, lhs - rhs));
            }
        }
    }
    rep.identities("induced.nabla-g", "(nabla_X g)(Y, Z) = B(X,Y) g(Z,N) + B(X,Z) g(Y,N)", &ch, nonmetric);
    rep.identities("induced.nabla-g-screen", "(nabla_X g)(Y, Z) = 0 for Y, Z in S(TM)", &ch, screen_metric);

    structure_identities(&mut rep, geom);
    rep.extend(totally_geodesic_report(geom));
    rep.extend(umbilicity_report(geom));
    rep
}

fn structure_identities(rep: &mut CheckReport, geom: &InducedGeometry) {
    let fr = &geom.frame;
    let amb = &fr.amb;
    let ch = geom.chart().clone();
    let k = geom.basis.len();
    let l = &geom.labels;
    let ui = geom.u_index();
    let u_tan = &fr.u_tan;

    // φ²X = -X + η^α(X) ξ_α + u(X) U
    let mut sq = Vec::new();
    let mut u_phi = Vec::new();
    let mut eta_phi = Vec::new();
    for i in 0..k {
        let Some((pp, _)) = push_error(rep, "induced.phi-squared", "", phi_u(fr, &geom.phi[i])) else { return };
        let jx = fr.push(&geom.basis[i]);
        let mut rhs = neg(&geom.basis[i]);
        for (a, xi) in fr.xi_tan.iter().enumerate() {
            rhs = add(&rhs, &scale(&amb.eta_of(a, &jx), xi));
        }
        rhs = add(&rhs, &scale(&geom.u[i], u_tan));
        sq.extend(vector_defects(&l[i], &sub(&pp, &rhs)));
        u_phi.push((l[i].clone(), u_form(fr, &geom.phi[i])));
        let jp = fr.push(&geom.phi[i]);
        for a in 0..fr.r() {
            eta_phi.push((format!("eta{}({})", a + 1, l[i]), amb.eta_of(a, &jp)));
        }
    }
    rep.identities("induced.phi-squared", "phi^2 X = -X + eta^a(X) xi_a + u(X) U", &ch, sq);
    rep.identities("induced.phi-u", "phi U = 0", &ch, vector_defects("U", &geom.phi[ui]));
    rep.identity("induced.u-u", "u(U) = 1", &(&geom.u[ui] - &RationalExpr::one()), &ch);
    rep.identities("induced.u-phi", "u(phi X) = 0", &ch, u_phi);
    rep.identities("induced.eta-phi", "eta^a(phi X) = 0", &ch, eta_phi);

    // covariant derivatives of φ and u on all basis pairs
    let xb = amb.xi_bar();
    let mut dphi = Vec::new();
    let mut du = Vec::new();
    let u_amb = fr.u_amb();
    for i in 0..k {
        let x = &geom.basis[i];
        let jx = fr.push(x);
        let px = amb.phi(&jx);
        let ppx = amb.phi(&px);
        for j in 0..k {
            let label = pair_label(&l[i], &l[j]);
            let Some(lhs1) = push_error(rep, "induced.nabla-phi", "", connection(fr, x, &geom.phi[j])) else { return };
            let Some((lhs2, _)) = push_error(rep, "induced.nabla-phi", "", phi_u(fr, &geom.nabla[i][j])) else { return };
            let lhs = fr.push(&sub(&lhs1, &lhs2));
            let jy = fr.push(&geom.basis[j]);
            let py = amb.phi(&jy);
            let mut rhs = scale(&geom.u[j], &fr.push(&geom.a_n[i]));
            rhs = sub(&rhs, &scale(&geom.b[i][j], &u_amb));
            rhs = add(&rhs, &scale(&amb.inner(&px, &py), &xb));
            rhs = add(&rhs, &scale(&amb.eta_bar_of(&jy), &ppx));
            dphi.extend(vector_defects(&label, &sub(&lhs, &rhs)));
            let lhs_u = directional(x, &geom.u[j]) - u_form(fr, &geom.nabla[i][j]);
            let rhs_u = -b_form(fr, x, &geom.phi[j]) - &geom.u[j] * &geom.tau[i];
            du.push((label, lhs_u - rhs_u));
        }
    }
    rep.identities(
        "induced.nabla-phi",
        "(nabla_X phi)Y = u(Y) A_N X - B(X,Y) U + g(phi X, phi Y) xi_bar + eta_bar(Y) phi^2 X",
        &ch,
        dphi,
    );
    rep.identities("induced.nabla-u", "(nabla_X u)Y = -B(X, phi Y) - u(Y) tau(X)", &ch, du);
}

/// `B ≡ 0` against the two structure conditions that characterize it.
pub fn totally_geodesic_report(geom: &InducedGeometry) -> CheckReport {
    let mut rep = CheckReport::new("geodesic");
    let fr = &geom.frame;
    let amb = &fr.amb;
    let ch = geom.chart().clone();
    let k = geom.basis.len();
    let l = &geom.labels;
    let b_zero = condition(
        &mut rep,
        "geodesic.b-zero",
        "M is totally geodesic: B = 0",
        &ch,
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| (pair_label(&l[i], &l[j]), geom.b[i][j].clone())),
    );
    let xb = amb.xi_bar();
    let d = fr.d_basis.clone();
    let dl = fr.d_labels();
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    for i in 0..k {
        let x = &geom.basis[i];
        let jx = fr.push(x);
        let px = amb.phi(&jx);
        let ppx = amb.phi(&px);
        for (y, yl) in d.iter().zip(&dl) {
            let Some((py_tan, _)) = push_error(&mut rep, "geodesic.cond-phi", "", phi_u(fr, y)) else { return rep };
            let Some(a) = push_error(&mut rep, "geodesic.cond-phi", "", connection(fr, x, &py_tan)) else { return rep };
            let Some(ny) = push_error(&mut rep, "geodesic.cond-phi", "", connection(fr, x, y)) else { return rep };
            let Some((b, _)) = push_error(&mut rep, "geodesic.cond-phi", "", phi_u(fr, &ny)) else { return rep };
            let lhs = fr.push(&sub(&a, &b));
            let jy = fr.push(y);
            let rhs = add(&scale(&amb.inner(&px, &amb.phi(&jy)), &xb), &scale(&amb.eta_bar_of(&jy), &ppx));
            c1.extend(vector_defects(&pair_label(&l[i], yl), &sub(&lhs, &rhs)));
        }
        let Some(nu) = push_error(&mut rep, "geodesic.cond-shape", "", connection(fr, x, &fr.u_tan)) else { return rep };
        let Some((pnu, _)) = push_error(&mut rep, "geodesic.cond-shape", "", phi_u(fr, &nu)) else { return rep };
        let rhs = sub(&neg(&fr.push(&pnu)), &scale(&metric(fr, x, &fr.u_tan), &xb));
        c2.extend(vector_defects(&l[i], &sub(&fr.push(&geom.a_n[i]), &rhs)));
    }
    let h1 = condition(&mut rep, "geodesic.cond-phi", "(nabla_X phi)Y = g(phi X, phi Y) xi_bar + eta_bar(Y) phi^2 X for Y in D", &ch, c1);
    let h2 = condition(&mut rep, "geodesic.cond-shape", "A_N X = -phi(nabla_X U) - g(X, U) xi_bar", &ch, c2);
    rep.verdict(
        "geodesic.agreement",
        "B = 0 iff both structure conditions hold",
        b_zero == (h1 && h2),
        if b_zero == (h1 && h2) { "0" } else { "1" },
        format!("B = 0: {b_zero}, conditions: {}", h1 && h2),
    );
    rep
}

/// Witness of non-umbilicity: a pair on which the form cannot be a multiple
/// of the metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmbilicWitness {
    pub x: String,
    pub y: String,
    pub form: RationalExpr,
    pub metric: RationalExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Umbilicity {
    /// `B = ρ g` on `TM`.
    pub rho: Option<RationalExpr>,
    pub rho_witness: Option<UmbilicWitness>,
    /// `C(X, PY) = λ g(X, PY)`.
    pub lambda: Option<RationalExpr>,
    pub lambda_witness: Option<UmbilicWitness>,
}

/// Solves `f = k g` over the listed pairs. A pair with `g = 0` and `f != 0`
/// is reported first; otherwise `k` comes from the first pair with `g != 0`.
fn proportional(
    pairs: &[(usize, usize)],
    form: &Matrix,
    gram: &Matrix,
    labels: &[String],
) -> (Option<RationalExpr>, Option<UmbilicWitness>) {
    let witness = |i: usize, j: usize, m: RationalExpr| UmbilicWitness {
        x: labels[i].clone(),
        y: labels[j].clone(),
        form: form[i][j].clone(),
        metric: m,
    };
    if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| gram[i][j].is_zero() && !form[i][j].is_zero()) {
        return (None, Some(witness(i, j, RationalExpr::zero())));
    }
    let k = match pairs.iter().find(|&&(i, j)| !gram[i][j].is_zero()) {
        Some(&(i, j)) => form[i][j].try_div(&gram[i][j]).expect("nonzero"),
        None => RationalExpr::zero(),
    };
    for &(i, j) in pairs {
        let kg = &k * &gram[i][j];
        if form[i][j] != kg {
            return (None, Some(witness(i, j, gram[i][j].clone())));
        }
    }
    (Some(k), None)
}

pub fn umbilicity(geom: &InducedGeometry) -> Umbilicity {
    let k = geom.basis.len();
    let all: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let (rho, rho_witness) = proportional(&all, &geom.b, &geom.gram, &geom.labels);
    let screen: Vec<(usize, usize)> = (0..k).flat_map(|i| geom.screen_range().map(move |j| (i, j))).collect();
    let (lambda, lambda_witness) = proportional(&screen, &geom.c, &geom.gram, &geom.labels);
    Umbilicity { rho, rho_witness, lambda, lambda_witness }
}

pub fn umbilicity_report(geom: &InducedGeometry) -> CheckReport {
    let mut rep = CheckReport::new("umbilicity");
    let ch = geom.chart();
    let u = umbilicity(geom);
    let show = |v: &Option<RationalExpr>, w: &Option<UmbilicWitness>, f: &str| -> (String, String) {
        match (v, w) {
            (Some(v), _) => (v.to_text(ch), "consistent".into()),
            (None, Some(w)) => (
                "none".into(),
                format!("{f}({}, {}) = {} while g({}, {}) = {}", w.x, w.y, w.form.to_text(ch), w.x, w.y, w.metric.to_text(ch)),
            ),
            (None, None) => ("none".into(), String::new()),
        }
    };
    let (w, d) = show(&u.rho, &u.rho_witness, "B");
    rep.pass("umbilic.rho", "B = rho g on TM", &w, d);
    let (w, d) = show(&u.lambda, &u.lambda_witness, "C");
    rep.pass("umbilic.lambda", "C(X, PY) = lambda g(X, PY)", &w, d);
    rep
}

/// `h°(X, Y)`, the part of `∇_X Y` along `span{E, U, V}`, for `Y` in `D₀`.
pub fn h_circ(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    let nxy = connection(&geom.frame, x, y)?;
    let c = geom.coordinates(&nxy).ok_or_else(|| not_tangent("nabla_X Y"))?;
    let mut out = scale(&c[0], &geom.frame.e_tan);
    out = add(&out, &scale(&c[geom.u_index()], &geom.frame.u_tan));
    out = add(&out, &scale(&c[geom.v_index()], &geom.frame.v_tan));
    Ok(out)
}

/// `∇°_X Y`, the `D₀` part of `∇_X Y`.
fn nabla_circ(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    let nxy = connection(&geom.frame, x, y)?;
    let c = geom.coordinates(&nxy).ok_or_else(|| not_tangent("nabla_X Y"))?;
    let mut out = vec![RationalExpr::zero(); nxy.len()];
    for a in geom.d0_range() {
        out = add(&out, &scale(&c[a], &geom.basis[a]));
    }
    Ok(out)
}

/// `h̃(X, Y) = h°(X, Y) + B(X, Y) N` as an ambient field.
pub fn h_tilde(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    let h = geom.frame.push(&h_circ(geom, x, y)?);
    Ok(add(&h, &scale(&b_form(&geom.frame, x, y), &geom.frame.n)))
}

/// Traces over `D₀` through the inverse Gram matrix of its basis: the
/// tangent part `trace(h°)` and the `N` coefficient of `trace(h̃)`.
pub fn d0_traces(geom: &InducedGeometry) -> Result<(Vector, RationalExpr)> {
    let d0 = &geom.frame.d0_basis;
    let g: Matrix = d0.iter().map(|a| d0.iter().map(|b| metric(&geom.frame, a, b)).collect()).collect();
    let gi = linalg::inverse(&g)?;
    let dim = geom.basis[0].len();
    let mut tr = vec![RationalExpr::zero(); dim];
    let mut trb = RationalExpr::zero();
    for (i, a) in d0.iter().enumerate() {
        for (j, b) in d0.iter().enumerate() {
            if gi[i][j].is_zero() {
                continue;
            }
            tr = add(&tr, &scale(&gi[i][j], &h_circ(geom, a, b)?));
            trb = trb + &gi[i][j] * &b_form(&geom.frame, a, b);
        }
    }
    Ok((tr, trb))
}

/// Resolved bracket coefficients in the tangent basis.
fn bracket_coords(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr]) -> Result<Vector> {
    geom.coordinates(&bracket(x, y)).ok_or_else(|| not_tangent("[X, Y]"))
}

/// Integrability and second fundamental form of `D₀`.
pub fn d0_report(geom: &InducedGeometry) -> CheckReport {
    let mut rep = CheckReport::new("distributions");
    let fr = &geom.frame;
    let amb = &fr.amb;
    let ch = geom.chart().clone();
    let d0: Vec<Vector> = fr.d0_basis.clone();
    let dl = fr.d0_labels();
    let nd = d0.len();
    let mut phis = Vec::with_capacity(nd);
    for x in &d0 {
        match phi_bar_tan(fr, x) {
            Ok(p) => phis.push(p),
            Err(e) => {
                rep.error("d0.phi-invariant", "phi_bar D0 is contained in D0", &e);
                return rep;
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..nd).flat_map(|i| (0..nd).map(move |j| (i, j))).collect();
    let lab = |i: usize, j: usize| pair_label(&dl[i], &dl[j]);
    let c = |x: &[RationalExpr], y: &[RationalExpr]| c_form(fr, x, y);
    let b = |x: &[RationalExpr], y: &[RationalExpr]| b_form(fr, x, y);

    let h1 = condition(&mut rep, "d0.c-symmetric", "C(X, Y) = C(Y, X) on D0", &ch, pairs.iter().map(|&(i, j)| (lab(i, j), c(&d0[i], &d0[j]) - c(&d0[j], &d0[i]))));
    let h2 = condition(
        &mut rep,
        "d0.c-phi",
        "C(X, phi Y) = C(phi X, Y) on D0",
        &ch,
        pairs.iter().map(|&(i, j)| (lab(i, j), c(&d0[i], &phis[j]) - c(&phis[i], &d0[j]))),
    );
    let h3 = condition(
        &mut rep,
        "d0.b-phi",
        "B(X, phi Y) = B(phi X, Y) on D0",
        &ch,
        pairs.iter().map(|&(i, j)| (lab(i, j), b(&d0[i], &phis[j]) - b(&phis[i], &d0[j]))),
    );
    let criterion = h1 && h2 && h3;
    record(&mut rep, "d0.criterion", "D0 is integrable by the C, B conditions", criterion, "");

    let (ei, ui, vi) = (0, geom.u_index(), geom.v_index());
    let mut closed = true;
    let mut formula = Vec::new();
    for &(i, j) in &pairs {
        let Some(co) = push_error(&mut rep, "d0.bracket", "[X, Y] in D0", bracket_coords(geom, &d0[i], &d0[j])) else { return rep };
        if !(co[ei].is_zero() && co[ui].is_zero() && co[vi].is_zero()) {
            closed = false;
        }
        // [X,Y] = (C(X,Y) - C(Y,X)) E + (B(X,φY) - B(Y,φX)) U + (C(X,φY) - C(Y,φX)) V + D0 part
        let l = lab(i, j);
        formula.push((format!("{l} E"), &co[ei] - &(c(&d0[i], &d0[j]) - c(&d0[j], &d0[i]))));
        formula.push((format!("{l} U"), &co[ui] - &(b(&d0[i], &phis[j]) - b(&d0[j], &phis[i]))));
        formula.push((format!("{l} V"), &co[vi] - &(c(&d0[i], &phis[j]) - c(&d0[j], &phis[i]))));
    }
    record(&mut rep, "d0.bracket", "brackets of D0 fields stay in D0", closed, "resolved in the tangent frame");
    rep.verdict(
        "d0.agreement",
        "criterion and bracket closure agree",
        criterion == closed,
        if criterion == closed { "0" } else { "1" },
        format!("criterion: {criterion}, brackets: {closed}"),
    );
    rep.identities("d0.bracket-formula", "E, U, V components of [X, Y] in terms of B and C", &ch, formula);

    if closed {
        rep.identities(
            "d0.corollary-b",
            "B(phi X, phi Y) = -B(X, Y)",
            &ch,
            pairs.iter().map(|&(i, j)| (lab(i, j), b(&phis[i], &phis[j]) + b(&d0[i], &d0[j]))),
        );
        rep.identities(
            "d0.corollary-c",
            "C(phi X, phi Y) = -C(X, Y)",
            &ch,
            pairs.iter().map(|&(i, j)| (lab(i, j), c(&phis[i], &phis[j]) + c(&d0[i], &d0[j]))),
        );
    } else {
        rep.skip("d0.corollary-b", "B(phi X, phi Y) = -B(X, Y)", "D0 is not integrable");
        rep.skip("d0.corollary-c", "C(phi X, phi Y) = -C(X, Y)", "D0 is not integrable");
    }

    // h° on TM x D0, with its local form on D0 x D0
    let mut local = Vec::new();
    let mut fs: [Vec<(String, RationalExpr)>; 4] = Default::default();
    for (i, x) in geom.basis.iter().enumerate() {
        for (j, y) in d0.iter().enumerate() {
            let l = pair_label(&geom.labels[i], &dl[j]);
            let Some(h) = push_error(&mut rep, "d0.h", "h(X, Y) for Y in D0", h_circ(geom, x, y)) else { return rep };
            rep.pass(&format!("d0.h{l}"), &format!("h({}, {})", geom.labels[i], dl[j]), &geom.describe(&h), "value");
            if !geom.d0_range().contains(&i) {
                continue;
            }
            let xi = i - 1;
            let expect = add(
                &add(&scale(&c(x, &phis[j]), &fr.v_tan), &scale(&b(x, &phis[j]), &fr.u_tan)),
                &scale(&c(x, y), &fr.e_tan),
            );
            local.extend(vector_defects(&lab(xi, j), &sub(&h, &expect)));
            let Some(ht) = push_error(&mut rep, "d0.h-tilde", "", h_tilde(geom, x, y)) else { return rep };
            let closed = [
                -c(x, &phis[j]),
                -b(x, &phis[j]),
                c(x, y),
                b(x, y),
            ];
            let dirs = [&fr.phi_n, &fr.phi_e, &fr.n, &fr.e];
            for (q, (f, w)) in closed.iter().zip(dirs).enumerate() {
                fs[q].push((lab(xi, j), amb.inner(&ht, w) - f));
            }
        }
    }
    rep.identities("d0.h-local", "h(X, Y) = -C(X, phi Y) phi E - B(X, phi Y) phi N + C(X, Y) E", &ch, local);
    let anchors = [
        "g(h~(X, Y), phi N) = -C(X, phi Y)",
        "g(h~(X, Y), phi E) = -B(X, phi Y)",
        "g(h~(X, Y), N) = C(X, Y)",
        "g(h~(X, Y), E) = B(X, Y)",
    ];
    for (q, d) in fs.into_iter().enumerate() {
        rep.identities(&format!("d0.f{}", q + 1), anchors[q], &ch, d);
    }

    match d0_traces(geom) {
        Ok((tr, trb)) => {
            let rank = RationalExpr::from_int(nd as i64);
            let mu: Vector = tr.iter().map(|t| t.try_div(&rank).expect("rank")).collect();
            let n_text = if trb.is_zero() { String::new() } else { format!(" + ({})*N", trb.to_text(&ch)) };
            if closed {
                rep.identities("d0.trace-h", "trace(h) = 0", &ch, vector_defects("trace", &tr));
                rep.identities(
                    "d0.trace-h-tilde",
                    "trace(h~) = 0",
                    &ch,
                    vector_defects("trace", &fr.push(&tr)).into_iter().chain(std::iter::once(("N".to_string(), trb.clone()))),
                );
                rep.identities("d0.mean-curvature", "mu = trace(B^D0) / rank(D0) = 0", &ch, vector_defects("mu", &mu));
            } else {
                rep.pass("d0.trace-h", "trace(h)", &geom.describe(&tr), "value");
                rep.pass("d0.trace-h-tilde", "trace(h~)", &format!("{}{n_text}", geom.describe(&tr)), "value");
                rep.pass("d0.mean-curvature", "mu = trace(B^D0) / rank(D0)", &geom.describe(&mu), "value");
            }
        }
        Err(e) => rep.error("d0.trace-h", "trace(h)", &e),
    }

    // leaves of D0: restricted structure
    let mut sq = Vec::new();
    let mut compat = Vec::new();
    for (i, x) in d0.iter().enumerate() {
        let Some(pp) = push_error(&mut rep, "d0.leaf-phi-squared", "", phi_bar_tan(fr, &phis[i])) else { return rep };
        let jx = fr.push(x);
        let mut rhs = neg(x);
        for (a, xi) in fr.xi_tan.iter().enumerate() {
            rhs = add(&rhs, &scale(&amb.eta_of(a, &jx), xi));
        }
        sq.extend(vector_defects(&dl[i], &sub(&pp, &rhs)));
        for (j, y) in d0.iter().enumerate() {
            let jy = fr.push(y);
            let mut rhs = metric(fr, x, y);
            for a in 0..fr.r() {
                rhs = rhs - RationalExpr::from_int(amb.eps[a]) * amb.eta_of(a, &jx) * amb.eta_of(a, &jy);
            }
            compat.push((lab(i, j), metric(fr, &phis[i], &phis[j]) - rhs));
        }
    }
    rep.identities("d0.leaf-phi-squared", "phi^2 X = -X + eta^a(X) xi_a on D0", &ch, sq);
    rep.identities("d0.leaf-compatibility", "g(phi X, phi Y) = g(X, Y) - eps_a eta^a(X) eta^a(Y) on D0", &ch, compat);
    if closed {
        let xb: Vector = fr.xi_tan.iter().fold(vec![RationalExpr::zero(); d0[0].len()], |acc, v| add(&acc, v));
        let mut leaf = Vec::new();
        for (i, x) in d0.iter().enumerate() {
            let Some(ppx) = push_error(&mut rep, "d0.leaf-nabla-phi", "", phi_bar_tan(fr, &phis[i])) else { return rep };
            for (j, y) in d0.iter().enumerate() {
                let Some(a) = push_error(&mut rep, "d0.leaf-nabla-phi", "", nabla_circ(geom, x, &phis[j])) else { return rep };
                let Some(n0) = push_error(&mut rep, "d0.leaf-nabla-phi", "", nabla_circ(geom, x, y)) else { return rep };
                let Some(pn0) = push_error(&mut rep, "d0.leaf-nabla-phi", "", phi_bar_tan(fr, &n0)) else { return rep };
                let lhs = sub(&a, &pn0);
                let jy = fr.push(y);
                let rhs = add(&scale(&metric(fr, &phis[i], &phis[j]), &xb), &scale(&amb.eta_bar_of(&jy), &ppx));
                leaf.extend(vector_defects(&lab(i, j), &sub(&lhs, &rhs)));
            }
        }
        rep.identities("d0.leaf-nabla-phi", "(nabla0_X phi)Y = g(phi X, phi Y) xi_bar + eta_bar(Y) phi^2 X on D0", &ch, leaf);
    } else {
        rep.skip("d0.leaf-nabla-phi", "(nabla0_X phi)Y = g(phi X, phi Y) xi_bar + eta_bar(Y) phi^2 X on D0", "D0 is not integrable");
    }

    // (∇̄_X φ̄)Y has no E or N component on D0
    let mut ce = Vec::new();
    let mut cn = Vec::new();
    for &(i, j) in &pairs {
        let d = covariant_phi_bar(fr, &d0[i], &fr.push(&d0[j]));
        ce.push((lab(i, j), amb.inner(&d, &fr.e)));
        cn.push((lab(i, j), amb.inner(&d, &fr.n)));
    }
    rep.identities("d0.nabla-phi-e", "g((nabla_X phi)Y, E) = 0 on D0", &ch, ce);
    rep.identities("d0.nabla-phi-n", "g((nabla_X phi)Y, N) = 0 on D0", &ch, cn);
    rep
}

/// `(∇̄_X φ̄)Y` for tangent `x` and an ambient field `y` along the map.
fn covariant_phi_bar(fr: &LightlikeFrame, x: &[RationalExpr], y: &[RationalExpr]) -> Vector {
    let amb = &fr.amb;
    sub(&amb.nabla(x, &amb.phi(y)), &amb.phi(&amb.nabla(x, y)))
}

/// Integrability of `D = D₀ ⊥ φ̄(Rad TM) ⊥ Rad TM` and related checks.
pub fn d_report(geom: &InducedGeometry) -> CheckReport {
    let mut rep = CheckReport::new("distributions");
    let fr = &geom.frame;
    let amb = &fr.amb;
    let ch = geom.chart().clone();
    let d0 = fr.d0_basis.clone();
    let dl0 = fr.d0_labels();
    let v = fr.v_tan.clone();
    let nd = d0.len();
    let mut phis = Vec::with_capacity(nd);
    for x in &d0 {
        match phi_bar_tan(fr, x) {
            Ok(p) => phis.push(p),
            Err(e) => {
                rep.error("d.phi-invariant", "phi_bar D0 is contained in D0", &e);
                return rep;
            }
        }
    }
    let b = |x: &[RationalExpr], y: &[RationalExpr]| b_form(fr, x, y);
    let lab = |i: usize, j: usize| pair_label(&dl0[i], &dl0[j]);
    let ha = condition(
        &mut rep,
        "d.cond-a",
        "(a) B(X, phi Y) = B(phi X, Y) on D0",
        &ch,
        (0..nd).flat_map(|i| (0..nd).map(move |j| (i, j))).map(|(i, j)| (lab(i, j), b(&d0[i], &phis[j]) - b(&phis[i], &d0[j]))),
    );
    let hb = condition(&mut rep, "d.cond-b", "(b) B(X, V) = 0 on D0, V = -phi E", &ch, (0..nd).map(|i| (pair_label(&dl0[i], "V"), b(&d0[i], &v))));
    let hc = condition(&mut rep, "d.cond-c", "(c) B(V, V) = 0", &ch, std::iter::once(("[V,V]".to_string(), b(&v, &v))));
    let criterion = ha && hb && hc;
    record(&mut rep, "d.criterion", "D is integrable by conditions (a), (b), (c)", criterion, "");

    let db = fr.d_basis.clone();
    let dl = fr.d_labels();
    let ui = geom.u_index();
    let mut closed = true;
    let mut first = String::new();
    for i in 0..db.len() {
        for j in i + 1..db.len() {
            let Some(co) = push_error(&mut rep, "d.bracket", "[X, Y] in D", bracket_coords(geom, &db[i], &db[j])) else { return rep };
            if !co[ui].is_zero() && closed {
                closed = false;
                first = format!("U component of [{},{}] is {}", dl[i], dl[j], co[ui].to_text(&ch));
            }
        }
    }
    record(&mut rep, "d.bracket", "brackets of D fields stay in D", closed, first);
    rep.verdict(
        "d.agreement",
        "conditions (a), (b), (c) and bracket closure agree",
        criterion == closed,
        if criterion == closed { "0" } else { "1" },
        format!("criterion: {criterion}, brackets: {closed}"),
    );

    // the ltr component of (∇̄_X φ̄)Y vanishes
    let m = fr.e.len();
    let mut ltr = Vec::new();
    for (i, x) in geom.basis.iter().enumerate() {
        for a in 0..m {
            let y: Vector = (0..m).map(|k| if k == a { RationalExpr::one() } else { RationalExpr::zero() }).collect();
            let d = covariant_phi_bar(fr, x, &y);
            ltr.push((format!("[{},d{}]", geom.labels[i], fr.f().x_chart().name(a)), amb.inner(&d, &fr.e)));
        }
    }
    rep.identities("d.ltr-component", "ltr component of (nabla_X phi)Y = 0", &ch, ltr);

    let k = geom.basis.len();
    let b_zero = (0..k).all(|i| (0..k).all(|j| geom.b[i][j].is_zero()));
    if b_zero {
        let mut par = Vec::new();
        for (i, x) in geom.basis.iter().enumerate() {
            for (w, wl) in db.iter().zip(&dl) {
                let Some(nw) = push_error(&mut rep, "d.parallel", "", connection(fr, x, w)) else { return rep };
                par.push((pair_label(&geom.labels[i], wl), amb.inner(&fr.push(&nw), &fr.phi_e)));
            }
        }
        rep.identities("d.parallel", "g(nabla_X W, phi E) = 0 for W in D", &ch, par);
    } else {
        rep.skip("d.parallel", "g(nabla_X W, phi E) = 0 for W in D", "B does not vanish");
    }
    rep
}

/// `R̄` composed with the immersion, ready for [`curvature_defects`].
pub fn pull_curvature(geom: &InducedGeometry, rbar: &CurvatureTensor) -> Result<CurvatureTensor> {
    let f = geom.frame.f();
    if rbar.chart() != f.x_chart() {
        return Err(Error::ChartMismatch("curvature does not live on the ambient chart".into()));
    }
    rbar.compose(f.u_chart(), f.components())
}

/// `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_[X,Y] Z` of the induced connection.
pub fn induced_curvature(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr], z: &[RationalExpr]) -> Result<Vector> {
    let fr = &geom.frame;
    let a = connection(fr, x, &connection(fr, y, z)?)?;
    let b = connection(fr, y, &connection(fr, x, z)?)?;
    let c = connection(fr, &bracket(x, y), z)?;
    Ok(sub(&sub(&a, &b), &c))
}

/// `(∇_X B)(Y, Z) = X(B(Y,Z)) - B(∇_X Y, Z) - B(Y, ∇_X Z)`.
pub fn covariant_b(geom: &InducedGeometry, x: &[RationalExpr], y: &[RationalExpr], z: &[RationalExpr]) -> Result<RationalExpr> {
    let fr = &geom.frame;
    Ok(directional(x, &b_form(fr, y, z)) - b_form(fr, &connection(fr, x, y)?, z) - b_form(fr, y, &connection(fr, x, z)?))
}

/// Defects of `R̄(X,Y,Z,E) = -{(∇_X B)(Y,Z) - (∇_Y B)(X,Z) + τ(X)B(Y,Z) - τ(Y)B(X,Z)}`
/// and `R̄(X,Y,Z,N) = R(X,Y,Z,N)`, with `R̄` already pulled back.
pub fn curvature_defects(
    geom: &InducedGeometry,
    pulled: &CurvatureTensor,
    x: &[RationalExpr],
    y: &[RationalExpr],
    z: &[RationalExpr],
) -> Result<(RationalExpr, RationalExpr)> {
    let fr = &geom.frame;
    let (jx, jy, jz) = (fr.push(x), fr.push(y), fr.push(z));
    let re = pulled.eval(&jx, &jy, &jz, &fr.e);
    let rhs = covariant_b(geom, x, y, z)? - covariant_b(geom, y, x, z)? + tau_form(fr, x) * b_form(fr, y, z)
        - tau_form(fr, y) * b_form(fr, x, z);
    let rn = pulled.eval(&jx, &jy, &jz, &fr.n);
    let r = induced_curvature(geom, x, y, z)?;
    let rind = -fr.amb.inner(&fr.push(&r), &fr.n);
    Ok((re + rhs, rn - rind))
}

/// Both curvature relations for one triple.
pub fn curvature_relations(
    geom: &InducedGeometry,
    pulled: &CurvatureTensor,
    x: &[RationalExpr],
    y: &[RationalExpr],
    z: &[RationalExpr],
) -> CheckReport {
    let mut rep = CheckReport::new("curvature");
    let ch = geom.chart().clone();
    match curvature_defects(geom, pulled, x, y, z) {
        Ok((de, dn)) => {
            rep.identity("curvature.e-relation", ANCHOR_E, &de, &ch);
            rep.identity("curvature.n-relation", ANCHOR_N, &dn, &ch);
        }
        Err(e) => rep.error("curvature.relations", ANCHOR_E, &e),
    }
    rep
}

const ANCHOR_E: &str = "R(X,Y,Z,E) = -{(nabla_X B)(Y,Z) - (nabla_Y B)(X,Z) + tau(X)B(Y,Z) - tau(Y)B(X,Z)}";
const ANCHOR_N: &str = "ambient R(X,Y,Z,N) = induced R(X,Y,Z,N)";

/// Both curvature relations on every ordered triple of the tangent basis.
pub fn curvature_report(geom: &InducedGeometry, rbar: &CurvatureTensor) -> CheckReport {
    let mut rep = CheckReport::new("curvature");
    let ch = geom.chart().clone();
    let pulled = match pull_curvature(geom, rbar) {
        Ok(p) => p,
        Err(e) => {
            rep.error("curvature.relations", ANCHOR_E, &e);
            return rep;
        }
    };
    let k = geom.basis.len();
    let l = &geom.labels;
    let mut es = Vec::new();
    let mut ns = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for m in 0..k {
                let label = format!("[{},{},{}]", l[i], l[j], l[m]);
                match curvature_defects(geom, &pulled, &geom.basis[i], &geom.basis[j], &geom.basis[m]) {
                    Ok((de, dn)) => {
                        es.push((label.clone(), de));
                        ns.push((label, dn));
                    }
                    Err(e) => {
                        rep.error("curvature.relations", ANCHOR_E, &e);
                        return rep;
                    }
                }
            }
        }
    }
    rep.identities("curvature.e-relation", ANCHOR_E, &ch, es);
    rep.identities("curvature.n-relation", ANCHOR_N, &ch, ns);
    rep
}
