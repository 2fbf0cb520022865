//! Parametrized hypersurfaces, lightlike tests and characteristic frames.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chart::Chart;
use crate::connection::{Connection, Metric, PulledConnection};
use crate::error::{Error, Result};
use crate::framed::{pair, GffStructure};
use crate::linalg::{self, Matrix};
use crate::report::CheckReport;
use crate::scalar::{gcd, lcm, Poly, RationalExpr};
use crate::tensor::TensorField;

/// `x^A = f^A(u^1, ..., u^{m-1})` with its Jacobian `jac[A][a] = ∂f^A/∂u^a`.
#[derive(Clone, Debug)]
pub struct Immersion {
    u: Chart,
    x: Chart,
    comps: Vec<RationalExpr>,
    jac: Matrix,
    minors: Vec<RationalExpr>,
    // row removed and inverse of the remaining square block
    left: (usize, Matrix),
}

impl Immersion {
    pub fn new(u: Chart, x: Chart, comps: Vec<RationalExpr>) -> Result<Immersion> {
        let m = x.dim();
        if comps.len() != m {
            return Err(Error::Shape(format!("{} component functions for a {m}-dimensional target", comps.len())));
        }
        if u.dim() + 1 != m {
            return Err(Error::Shape(format!("a hypersurface of a {m}-manifold needs {} parameters", m - 1)));
        }
        if let Some(w) = comps.iter().map(|c| c.width()).max() {
            if w > u.dim() {
                return Err(Error::ChartMismatch("component functions use more variables than the parameter chart".into()));
            }
        }
        let jac: Matrix = comps.iter().map(|c| (0..u.dim()).map(|a| c.differentiate(a)).collect()).collect();
        let minors: Vec<RationalExpr> = (0..m).map(|a| linalg::det(&linalg::delete(&jac, Some(a), None))).collect();
        let Some(row) = minors.iter().position(|d| !d.is_zero()) else {
            return Err(Error::Shape(format!("Jacobian rank is below {}", m - 1)));
        };
        let inv = linalg::inverse(&linalg::delete(&jac, Some(row), None))?;
        Ok(Immersion { u, x, comps, jac, minors, left: (row, inv) })
    }

    pub fn u_chart(&self) -> &Chart {
        &self.u
    }

    pub fn x_chart(&self) -> &Chart {
        &self.x
    }

    pub fn components(&self) -> &[RationalExpr] {
        &self.comps
    }

    pub fn jacobian(&self) -> &Matrix {
        &self.jac
    }

    pub fn minors(&self) -> &[RationalExpr] {
        &self.minors
    }

    /// `J a`: the ambient components of a tangent vector.
    pub fn push(&self, a: &[RationalExpr]) -> Vec<RationalExpr> {
        linalg::matvec(&self.jac, a)
    }

    /// Tangent coordinates of `v`, when `v` is tangent.
    pub fn resolve(&self, v: &[RationalExpr]) -> Option<Vec<RationalExpr>> {
        let (row, inv) = &self.left;
        let rest: Vec<RationalExpr> = v.iter().enumerate().filter(|(i, _)| i != row).map(|(_, c)| c.clone()).collect();
        let a = linalg::matvec(inv, &rest);
        let back = self.push(&a);
        (back.as_slice() == v).then_some(a)
    }

    pub fn compose(&self, e: &RationalExpr) -> Result<RationalExpr> {
        e.substitute(&self.comps)
    }

    pub fn compose_vec(&self, v: &[RationalExpr]) -> Result<Vec<RationalExpr>> {
        v.iter().map(|c| self.compose(c)).collect()
    }

    pub fn compose_matrix(&self, m: &Matrix) -> Result<Matrix> {
        m.iter().map(|row| self.compose_vec(row)).collect()
    }
}

/// `g_ab = ḡ_AB ∂_a f^A ∂_b f^B`.
pub fn induced_metric(f: &Immersion, m: &Metric) -> Result<TensorField> {
    if m.chart() != f.x_chart() {
        return Err(Error::ChartMismatch("metric does not live on the immersion's target".into()));
    }
    let g = f.compose_matrix(&m.matrix())?;
    let j = f.jacobian();
    let ind = linalg::matmul(&linalg::transpose(j), &linalg::matmul(&g, j));
    TensorField::from_matrix(f.u_chart().clone(), 0, 2, &ind)
}

/// `D^A`: determinant of the Jacobian with row `A` removed.
pub fn jacobian_minors(f: &Immersion) -> Vec<RationalExpr> {
    f.minors().to_vec()
}

/// `M_AB`: unsigned minor of `g` without row `A` and column `B`.
pub fn cofactor_minors(g: &Matrix) -> Matrix {
    let n = g.len();
    (0..n).map(|a| (0..n).map(|b| linalg::det(&linalg::delete(g, Some(a), Some(b)))).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LightlikeVerdict {
    pub lightlike: bool,
    /// `det(g_ab)` computed directly.
    pub delta: RationalExpr,
    /// `Σ D^A (M_AB ∘ f) D^B`.
    pub delta_cauchy_binet: RationalExpr,
}

pub fn cauchy_binet_delta(f: &Immersion, m: &Metric) -> Result<RationalExpr> {
    let minors = cofactor_minors(&m.matrix());
    let d = f.minors();
    let n = d.len();
    let mut acc = RationalExpr::zero();
    for a in (0..n).filter(|&a| !d[a].is_zero()) {
        for b in (0..n).filter(|&b| !d[b].is_zero()) {
            if minors[a][b].is_zero() {
                continue;
            }
            acc = acc + &d[a] * &f.compose(&minors[a][b])? * &d[b];
        }
    }
    Ok(acc)
}

/// Decides `Δ ≡ 0` by the direct determinant and by Cauchy-Binet; the two
/// routes disagreeing is an internal fault.
pub fn lightlike_test(f: &Immersion, m: &Metric) -> Result<LightlikeVerdict> {
    let delta = linalg::det(&induced_metric(f, m)?.as_matrix());
    let delta_cauchy_binet = cauchy_binet_delta(f, m)?;
    if delta != delta_cauchy_binet {
        return Err(Error::Inconsistent(format!(
            "det(g) = {} but the Cauchy-Binet sum is {}",
            delta.to_text(f.u_chart()),
            delta_cauchy_binet.to_text(f.u_chart())
        )));
    }
    Ok(LightlikeVerdict { lightlike: delta.is_zero(), delta, delta_cauchy_binet })
}

/// Solves `J a = v` for an ambient field `v` given along the map.
pub fn tangency_test(f: &Immersion, v: &[RationalExpr]) -> Option<Vec<RationalExpr>> {
    if v.len() != f.x_chart().dim() {
        return None;
    }
    linalg::solve(f.jacobian(), v)
}

/// Ambient field on the target composed with the map, then tested.
pub fn ambient_tangency(f: &Immersion, v: &[RationalExpr]) -> Result<Option<Vec<RationalExpr>>> {
    Ok(tangency_test(f, &f.compose_vec(v)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalSection {
    /// Ambient components along the map.
    pub ambient: Vec<RationalExpr>,
    /// Components in the parameter chart.
    pub tangent: Vec<RationalExpr>,
}

/// Scales a vector of rational functions to polynomials with integer
/// coefficients, no common factor, and a positive leading coefficient in the
/// first nonzero entry.
pub fn normalize_generator(v: &[RationalExpr]) -> Vec<RationalExpr> {
    let mut den = Poly::one();
    for c in v {
        den = lcm(&den, c.denom());
    }
    let polys: Vec<Poly> = v.iter().map(|c| c.numer().mul(&den.div_exact(c.denom()).expect("lcm"))).collect();
    let mut content = Poly::zero();
    for p in &polys {
        content = if content.is_zero() { p.monic() } else { gcd(&content, p) };
    }
    if content.is_zero() {
        return v.to_vec();
    }
    let polys: Vec<Poly> = polys.iter().map(|p| p.div_exact(&content).expect("content")).collect();
    // integer coefficients with unit content
    let mut l = BigInt::one();
    for p in &polys {
        for (_, c) in p.terms() {
            l = l.lcm(c.denom());
        }
    }
    let mut g = BigInt::zero();
    for p in &polys {
        for (_, c) in p.terms() {
            g = g.gcd(&(c * BigRational::from_integer(l.clone())).to_integer());
        }
    }
    let mut s = BigRational::new(l, g);
    let lead_neg = polys.iter().find(|p| !p.is_zero()).map(|p| p.leading_is_negative()).unwrap_or(false);
    if lead_neg {
        s = -s;
    }
    polys.iter().map(|p| RationalExpr::from_poly(p.scale(&s))).collect()
}

/// A generator of `Rad(TM)`. A supplied ambient `e` (given along the map)
/// is verified instead of constructed.
pub fn radical_section(f: &Immersion, m: &Metric, supplied: Option<&[RationalExpr]>) -> Result<RadicalSection> {
    let g = induced_metric(f, m)?.as_matrix();
    let kernel = linalg::nullspace(&g);
    if kernel.len() != 1 {
        return Err(Error::RadicalDimension(kernel.len()));
    }
    match supplied {
        Some(e) => {
            let tangent = f.resolve(e).ok_or_else(|| Error::NotTangent("supplied E".into()))?;
            if tangent.iter().all(|c| c.is_zero()) {
                return Err(Error::NotTangent("supplied E vanishes".into()));
            }
            let gt = linalg::matvec(&g, &tangent);
            if let Some(c) = gt.iter().find(|c| !c.is_zero()) {
                return Err(Error::Inconsistent(format!(
                    "supplied E is not in the radical: g(E, .) has component {}",
                    c.to_text(f.u_chart())
                )));
            }
            Ok(RadicalSection { ambient: e.to_vec(), tangent })
        }
        None => {
            let tangent = normalize_generator(&kernel[0]);
            Ok(RadicalSection { ambient: f.push(&tangent), tangent })
        }
    }
}

/// `N = (Z - ḡ(Z,Z)/(2 ḡ(Z,E)) E) / ḡ(Z,E)`, with `ḡ` already composed with the map.
pub fn transversal_from(g: &Matrix, e: &[RationalExpr], z: &[RationalExpr]) -> Result<Vec<RationalExpr>> {
    let ze = linalg::bilinear(g, z, e);
    if ze.is_zero() {
        return Err(Error::UnusableAuxiliary);
    }
    let zz = linalg::bilinear(g, z, z);
    let k = zz.try_div(&(RationalExpr::from_int(2) * &ze))?;
    let inv = ze.recip()?;
    Ok(z.iter().zip(e).map(|(zi, ei)| (zi - &(&k * ei)) * &inv).collect())
}

pub fn transversal_section(
    f: &Immersion,
    m: &Metric,
    e: &[RationalExpr],
    z: &[RationalExpr],
) -> Result<Vec<RationalExpr>> {
    transversal_from(&f.compose_matrix(&m.matrix())?, e, z)
}

/// The ambient structure composed with an immersion.
#[derive(Clone, Debug)]
pub struct AmbientAlong {
    pub f: Immersion,
    pub g: Matrix,
    pub phi: Matrix,
    pub xi: Vec<Vec<RationalExpr>>,
    pub eta: Vec<Vec<RationalExpr>>,
    pub eps: Vec<i64>,
    pub nabla: PulledConnection,
}

impl AmbientAlong {
    pub fn new(f: &Immersion, s: &GffStructure, c: &Connection) -> Result<AmbientAlong> {
        if s.chart() != f.x_chart() {
            return Err(Error::ChartMismatch("structure does not live on the immersion's target".into()));
        }
        Ok(AmbientAlong {
            f: f.clone(),
            g: f.compose_matrix(&s.metric().matrix())?,
            phi: f.compose_matrix(&s.phi_matrix())?,
            xi: s.xis().iter().map(|v| f.compose_vec(v)).collect::<Result<_>>()?,
            eta: s.etas().iter().map(|v| f.compose_vec(v)).collect::<Result<_>>()?,
            eps: s.epsilons().to_vec(),
            nabla: PulledConnection::new(c, f)?,
        })
    }

    pub fn u_chart(&self) -> &Chart {
        self.f.u_chart()
    }

    pub fn inner(&self, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
        linalg::bilinear(&self.g, x, y)
    }

    pub fn phi(&self, v: &[RationalExpr]) -> Vec<RationalExpr> {
        linalg::matvec(&self.phi, v)
    }

    pub fn eta_of(&self, a: usize, v: &[RationalExpr]) -> RationalExpr {
        pair(&self.eta[a], v)
    }

    pub fn xi_bar(&self) -> Vec<RationalExpr> {
        (0..self.g.len()).map(|i| self.xi.iter().map(|v| &v[i]).sum()).collect()
    }

    pub fn eta_bar_of(&self, v: &[RationalExpr]) -> RationalExpr {
        (0..self.eta.len()).map(|a| RationalExpr::from_int(self.eps[a]) * self.eta_of(a, v)).sum()
    }

    /// `∇̄_X Y` for tangent `x` (parameter components) and `y` along the map.
    pub fn nabla(&self, x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
        self.nabla.derivative(x, y)
    }
}

/// First coordinate field, corrected by `Z - Σ η^α(Z) ξ_α`, pairing
/// nontrivially with `E` and orthogonally with `φ̄E`.
pub fn select_auxiliary(amb: &AmbientAlong, e: &[RationalExpr]) -> Result<Vec<RationalExpr>> {
    let m = e.len();
    let phie = amb.phi(e);
    for a in 0..m {
        let mut z: Vec<RationalExpr> = (0..m).map(|i| if i == a { RationalExpr::one() } else { RationalExpr::zero() }).collect();
        for (al, xi) in amb.xi.iter().enumerate() {
            let c = amb.eta_of(al, &z);
            if !c.is_zero() {
                z = z.iter().zip(xi).map(|(zi, xv)| zi - &(&c * xv)).collect();
            }
        }
        if !amb.inner(&z, e).is_zero() && amb.inner(&z, &phie).is_zero() {
            return Ok(z);
        }
    }
    Err(Error::NoAuxiliary)
}

/// `E`, `N`, the characteristic screen and the `D₀`, `D` decompositions.
/// Tangent fields are stored in parameter components.
#[derive(Clone, Debug)]
pub struct LightlikeFrame {
    pub amb: AmbientAlong,
    pub e: Vec<RationalExpr>,
    pub e_tan: Vec<RationalExpr>,
    pub z: Vec<RationalExpr>,
    pub n: Vec<RationalExpr>,
    pub phi_e: Vec<RationalExpr>,
    pub phi_n: Vec<RationalExpr>,
    /// `U = -φ̄N`.
    pub u_tan: Vec<RationalExpr>,
    /// `V = -φ̄E`.
    pub v_tan: Vec<RationalExpr>,
    pub xi_tan: Vec<Vec<RationalExpr>>,
    pub d0_basis: Vec<Vec<RationalExpr>>,
    pub screen_basis: Vec<Vec<RationalExpr>>,
    pub d_basis: Vec<Vec<RationalExpr>>,
}

impl LightlikeFrame {
    pub fn f(&self) -> &Immersion {
        &self.amb.f
    }

    pub fn u_chart(&self) -> &Chart {
        self.amb.u_chart()
    }

    pub fn r(&self) -> usize {
        self.xi_tan.len()
    }

    pub fn push(&self, a: &[RationalExpr]) -> Vec<RationalExpr> {
        self.amb.f.push(a)
    }

    pub fn resolve(&self, v: &[RationalExpr]) -> Option<Vec<RationalExpr>> {
        self.amb.f.resolve(v)
    }

    pub fn u_amb(&self) -> Vec<RationalExpr> {
        self.phi_n.iter().map(|c| -c).collect()
    }

    pub fn v_amb(&self) -> Vec<RationalExpr> {
        self.phi_e.iter().map(|c| -c).collect()
    }

    /// `[E, D₀ basis, U, V]` in parameter components.
    pub fn tangent_basis(&self) -> Vec<Vec<RationalExpr>> {
        let mut b = vec![self.e_tan.clone()];
        b.extend(self.d0_basis.iter().cloned());
        b.push(self.u_tan.clone());
        b.push(self.v_tan.clone());
        b
    }

    pub fn tangent_labels(&self) -> Vec<String> {
        let mut l = vec!["E".to_string()];
        l.extend(self.d0_labels());
        l.push("U".into());
        l.push("V".into());
        l
    }

    pub fn d0_labels(&self) -> Vec<String> {
        let r = self.r();
        (0..self.d0_basis.len()).map(|k| if k < r { format!("xi{}", k + 1) } else { format!("X{}", k - r + 1) }).collect()
    }

    pub fn d_labels(&self) -> Vec<String> {
        let mut l = self.d0_labels();
        l.push("V".into());
        l.push("E".into());
        l
    }
}

fn unit(m: usize, a: usize) -> Vec<RationalExpr> {
    (0..m).map(|i| if i == a { RationalExpr::one() } else { RationalExpr::zero() }).collect()
}

/// Extends `start` greedily by vectors of `pool` that raise the rank.
fn extend_basis(start: Vec<Vec<RationalExpr>>, pool: &[Vec<RationalExpr>]) -> Vec<Vec<RationalExpr>> {
    let mut basis = start;
    for v in pool {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    basis
}

/// Builds the characteristic screen from `E` and `N`.
pub fn characteristic_screen(
    amb: AmbientAlong,
    e: Vec<RationalExpr>,
    z: Vec<RationalExpr>,
    n: Vec<RationalExpr>,
) -> Result<LightlikeFrame> {
    let m = e.len();
    let r = amb.xi.len();
    let two_n = m as i64 - r as i64;
    if two_n < 4 {
        return Err(Error::DimensionObstruction { dim: m, r, n: two_n / 2 });
    }
    let f = &amb.f;
    let e_tan = f.resolve(&e).ok_or_else(|| Error::NotTangent("E".into()))?;
    let mut xi_tan = Vec::new();
    for (a, xi) in amb.xi.iter().enumerate() {
        match f.resolve(xi) {
            Some(t) => xi_tan.push(t),
            None => return Err(Error::NotCharacteristic(format!("xi{} is not tangent", a + 1))),
        }
    }
    let phi_e = amb.phi(&e);
    let phi_n = amb.phi(&n);
    let pe_tan = f.resolve(&phi_e).ok_or_else(|| Error::NotCharacteristic("phi E is not tangent".into()))?;
    let pn_tan = f.resolve(&phi_n).ok_or_else(|| Error::NotCharacteristic("phi N is not tangent".into()))?;
    for (what, v) in [("xi", &amb.xi[..]), ("phi E", std::slice::from_ref(&phi_e)), ("phi N", std::slice::from_ref(&phi_n))] {
        for w in v {
            if !amb.inner(w, &n).is_zero() {
                return Err(Error::NotCharacteristic(format!("{what} is not orthogonal to N")));
            }
        }
    }
    let j = f.jacobian();
    let dims = m - 1;
    // rows g(J., N), g(J., φE), g(J., φN) cut D₀ out of TM
    let rows: Matrix = [&n, &phi_e, &phi_n]
        .iter()
        .map(|w| {
            let gw = linalg::matvec(&amb.g, w);
            (0..dims).map(|a| (0..m).map(|k| &j[k][a] * &gw[k]).sum()).collect()
        })
        .collect();
    let kernel = linalg::nullspace(&rows);
    let d0 = extend_basis(xi_tan.clone(), &kernel);
    if d0.len() != kernel.len() || linalg::rank(&linalg::transpose(&d0)) != d0.len() {
        return Err(Error::DegenerateScreen(format!("D0 has dimension {}, expected {}", d0.len(), kernel.len())));
    }
    let u_tan: Vec<RationalExpr> = pn_tan.iter().map(|c| -c).collect();
    let v_tan: Vec<RationalExpr> = pe_tan.iter().map(|c| -c).collect();
    let mut screen_basis = d0.clone();
    screen_basis.push(u_tan.clone());
    screen_basis.push(v_tan.clone());
    let gram = screen_gram_of(&amb, &screen_basis);
    if linalg::det(&gram).is_zero() {
        return Err(Error::DegenerateScreen("screen Gram matrix is singular".into()));
    }
    let mut d_basis = d0.clone();
    d_basis.push(v_tan.clone());
    d_basis.push(e_tan.clone());
    Ok(LightlikeFrame {
        amb,
        e,
        e_tan,
        z,
        n,
        phi_e,
        phi_n,
        u_tan,
        v_tan,
        xi_tan,
        d0_basis: d0,
        screen_basis,
        d_basis,
    })
}

fn screen_gram_of(amb: &AmbientAlong, basis: &[Vec<RationalExpr>]) -> Matrix {
    let amb_vecs: Vec<Vec<RationalExpr>> = basis.iter().map(|b| amb.f.push(b)).collect();
    amb_vecs.iter().map(|x| amb_vecs.iter().map(|y| amb.inner(x, y)).collect()).collect()
}

pub fn screen_gram(frame: &LightlikeFrame) -> Matrix {
    screen_gram_of(&frame.amb, &frame.screen_basis)
}

/// Ambient fields along the map orthogonal to the whole screen.
pub fn screen_orthogonal(frame: &LightlikeFrame) -> Vec<Vec<RationalExpr>> {
    let rows: Matrix = frame
        .screen_basis
        .iter()
        .map(|w| linalg::matvec(&frame.amb.g, &frame.push(w)))
        .collect();
    linalg::nullspace(&rows).iter().map(|v| normalize_generator(v)).collect()
}

/// Inputs for building a frame.
#[derive(Clone, Debug, Default)]
pub struct FrameRequest {
    /// Ambient components along the map.
    pub e: Option<Vec<RationalExpr>>,
    pub z: Option<Vec<RationalExpr>>,
}

/// Runs the whole pipeline: radical, auxiliary, transversal, screen.
pub fn build_frame(
    f: &Immersion,
    s: &GffStructure,
    c: &Connection,
    req: &FrameRequest,
) -> Result<LightlikeFrame> {
    let amb = AmbientAlong::new(f, s, c)?;
    let rad = radical_section(f, s.metric(), req.e.as_deref())?;
    let z = match &req.z {
        Some(z) => z.clone(),
        None => select_auxiliary(&amb, &rad.ambient)?,
    };
    let n = transversal_from(&amb.g, &rad.ambient, &z)?;
    characteristic_screen(amb, rad.ambient, z, n)
}

/// Transversal contract and the screen checks for a built frame.
pub fn frame_report(frame: &LightlikeFrame) -> CheckReport {
    let mut rep = CheckReport::new("frame");
    let ch = frame.u_chart().clone();
    let amb = &frame.amb;
    let tb = frame.tangent_basis();
    rep.identities(
        "frame.e-radical",
        "g(E, X) = 0 for tangent X",
        &ch,
        (0..ch.dim()).map(|a| (format!("du{}", a + 1), amb.inner(&frame.e, &frame.push(&unit(ch.dim(), a))))),
    );
    let ze = amb.inner(&frame.z, &frame.e);
    rep.verdict("frame.z-e", "g(Z, E) != 0", !ze.is_zero(), &ze.to_text(&ch), "");
    rep.identity("frame.n-e", "g(N, E) = 1", &(amb.inner(&frame.n, &frame.e) - RationalExpr::one()), &ch);
    rep.identity("frame.n-n", "g(N, N) = 0", &amb.inner(&frame.n, &frame.n), &ch);
    let labels = frame.tangent_labels();
    rep.identities(
        "frame.n-screen",
        "g(N, W) = 0 for W in S(TM)",
        &ch,
        labels[1..].iter().zip(&tb[1..]).map(|(l, w)| (l.clone(), amb.inner(&frame.n, &frame.push(w)))),
    );
    let pe = frame.phi_e.clone();
    let pn = frame.phi_n.clone();
    let gram2 = vec![vec![amb.inner(&pe, &pe), amb.inner(&pe, &pn)], vec![amb.inner(&pn, &pe), amb.inner(&pn, &pn)]];
    let d2 = linalg::det(&gram2);
    rep.verdict("frame.phi-gram", "span{phi E, phi N} is non-degenerate", !d2.is_zero(), &d2.to_text(&ch), "determinant of the Gram matrix");
    rep.identity("frame.phi-n-phi-e", "g(phi N, phi E) = 1", &(amb.inner(&pn, &pe) - RationalExpr::one()), &ch);
    let gram = screen_gram(frame);
    let dg = linalg::det(&gram);
    rep.verdict("frame.screen-nondegenerate", "S(TM) is non-degenerate", !dg.is_zero(), &dg.to_text(&ch), "");
    match linalg::inertia(&gram) {
        Some((_, neg, _)) => rep.pass("frame.screen-index", "index of g on S(TM)", &neg.to_string(), ""),
        None => rep.skip("frame.screen-index", "index of g on S(TM)", "screen Gram matrix is not constant"),
    }
    let rank = linalg::rank(&tb);
    rep.verdict(
        "frame.decomposition",
        "TM = Rad(TM) + S(TM)",
        rank == ch.dim(),
        &(ch.dim() as i64 - rank as i64).to_string(),
        format!("rank {rank} of {}", ch.dim()),
    );
    rep
}

/// Outcome of asking for a characteristic lightlike hypersurface by the
/// minors argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacteristicVerdict {
    /// With the minors of the `ξ` coordinates forced to zero, `Δ` is a
    /// definite constant quadratic form in the remaining minors, so all of
    /// them vanish and the Jacobian loses rank.
    NonExistent { form: RationalExpr, symbols: Chart },
    /// The restricted form is indefinite; the argument excludes nothing.
    NotExcluded { form: RationalExpr, symbols: Chart },
    Undetermined(String),
}

/// Non-existence test for ambient structures whose `ξ_α` are coordinate fields.
pub fn characteristic_obstruction(s: &GffStructure) -> CharacteristicVerdict {
    let m = s.dim();
    let mut killed = Vec::new();
    for (a, xi) in s.xis().iter().enumerate() {
        let nz: Vec<usize> = (0..m).filter(|&i| !xi[i].is_zero()).collect();
        match nz.as_slice() {
            [k] if xi[*k].is_constant() => killed.push(*k),
            _ => return CharacteristicVerdict::Undetermined(format!("xi{} is not a coordinate field", a + 1)),
        }
    }
    let keep: Vec<usize> = (0..m).filter(|i| !killed.contains(i)).collect();
    let minors = cofactor_minors(&s.metric().matrix());
    let restricted: Matrix = keep.iter().map(|&a| keep.iter().map(|&b| minors[a][b].clone()).collect()).collect();
    let names: Vec<String> = keep.iter().map(|&a| format!("D{}", a + 1)).collect();
    let symbols = Chart::new(&names).expect("distinct names");
    let mut form = RationalExpr::zero();
    for (i, row) in restricted.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if let Some(k) = c.as_constant() {
                form = form + RationalExpr::constant(k) * RationalExpr::var(i) * RationalExpr::var(j);
            }
        }
    }
    match linalg::inertia(&restricted) {
        None => CharacteristicVerdict::Undetermined("restricted minors are not constant".into()),
        Some((p, q, 0)) if p == 0 || q == 0 => CharacteristicVerdict::NonExistent { form, symbols },
        Some(_) => CharacteristicVerdict::NotExcluded { form, symbols },
    }
}

pub fn is_positive_constant(e: &RationalExpr) -> bool {
    e.as_constant().map(|c| c.is_positive()).unwrap_or(false)
}
