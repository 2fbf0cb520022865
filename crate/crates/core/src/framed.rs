//! Metric globally framed f-structures and the S-manifold conditions.

use crate::chart::Chart;
use crate::connection::{covariant_derivative, Connection, Metric};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::report::CheckReport;
use crate::scalar::RationalExpr;
use crate::tensor::{bracket, exterior_derivative, TensorField};

/// `(φ̄, ξ_α, η^α, ε_α, ḡ)` on one chart. `phi[i][j]` is the `i`-th
/// component of `φ̄ ∂_j`.
#[derive(Clone, Debug)]
pub struct GffStructure {
    chart: Chart,
    phi: TensorField,
    xi: Vec<Vec<RationalExpr>>,
    eta: Vec<Vec<RationalExpr>>,
    eps: Vec<i64>,
    metric: Metric,
}

impl GffStructure {
    /// Checks shapes only; the algebraic axioms are reported by
    /// [`verify_gff_axioms`].
    pub fn new(
        phi: Matrix,
        xi: Vec<Vec<RationalExpr>>,
        eta: Vec<Vec<RationalExpr>>,
        eps: Vec<i64>,
        metric: Metric,
    ) -> Result<GffStructure> {
        let chart = metric.chart().clone();
        let dim = chart.dim();
        let r = xi.len();
        if r == 0 {
            return Err(Error::Shape("at least one characteristic field is required".into()));
        }
        if eta.len() != r || eps.len() != r {
            return Err(Error::Shape(format!("{r} fields xi but {} forms eta and {} signs", eta.len(), eps.len())));
        }
        if r > dim || (dim - r) % 2 != 0 {
            return Err(Error::Shape(format!("dimension {dim} minus r = {r} must be even and nonnegative")));
        }
        for (a, v) in xi.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Shape(format!("xi[{}] has {} components, chart has {dim}", a + 1, v.len())));
            }
        }
        for (a, v) in eta.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Shape(format!("eta[{}] has {} components, chart has {dim}", a + 1, v.len())));
            }
        }
        if let Some(e) = eps.iter().find(|e| e.abs() != 1) {
            return Err(Error::Shape(format!("signature signs are +1 or -1, got {e}")));
        }
        let phi = TensorField::from_matrix(chart.clone(), 1, 1, &phi)?;
        Ok(GffStructure { chart, phi, xi, eta, eps, metric })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn r(&self) -> usize {
        self.xi.len()
    }

    pub fn n(&self) -> usize {
        (self.dim() - self.r()) / 2
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn phi_tensor(&self) -> &TensorField {
        &self.phi
    }

    pub fn phi_matrix(&self) -> Matrix {
        self.phi.as_matrix()
    }

    pub fn phi_apply(&self, v: &[RationalExpr]) -> Vec<RationalExpr> {
        linalg::matvec(&self.phi_matrix(), v)
    }

    pub fn xi(&self, a: usize) -> &[RationalExpr] {
        &self.xi[a]
    }

    pub fn xis(&self) -> &[Vec<RationalExpr>] {
        &self.xi
    }

    pub fn eta(&self, a: usize) -> &[RationalExpr] {
        &self.eta[a]
    }

    pub fn etas(&self) -> &[Vec<RationalExpr>] {
        &self.eta
    }

    pub fn epsilon(&self, a: usize) -> i64 {
        self.eps[a]
    }

    pub fn epsilons(&self) -> &[i64] {
        &self.eps
    }

    /// `ε = Σ ε_α`.
    pub fn epsilon_sum(&self) -> i64 {
        self.eps.iter().sum()
    }

    /// `ξ̄ = Σ ξ_α`.
    pub fn xi_bar(&self) -> Vec<RationalExpr> {
        (0..self.dim()).map(|i| self.xi.iter().map(|v| &v[i]).sum()).collect()
    }

    /// `η̄ = Σ ε_α η^α`.
    pub fn eta_bar(&self) -> Vec<RationalExpr> {
        (0..self.dim())
            .map(|i| self.eta.iter().zip(&self.eps).map(|(w, &e)| &w[i] * &RationalExpr::from_int(e)).sum())
            .collect()
    }

    /// `Φ_ij = ḡ_ik φ̄^k_j`, so that `Φ(X, Y) = ḡ(X, φ̄Y)`.
    pub fn fundamental_two_form(&self) -> TensorField {
        fundamental_two_form(self)
    }

    /// `G_ij = ḡ(φ̄∂_i, φ̄∂_j)`.
    pub fn phi_gram(&self) -> Matrix {
        let f = self.phi_matrix();
        linalg::matmul(&linalg::transpose(&f), &linalg::matmul(&self.metric.matrix(), &f))
    }

    pub fn eta_of(&self, a: usize, v: &[RationalExpr]) -> RationalExpr {
        pair(&self.eta[a], v)
    }
}

pub(crate) fn pair(w: &[RationalExpr], v: &[RationalExpr]) -> RationalExpr {
    w.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

pub fn fundamental_two_form(s: &GffStructure) -> TensorField {
    let m = linalg::matmul(&s.metric.matrix(), &s.phi_matrix());
    TensorField::from_matrix(s.chart.clone(), 0, 2, &m).expect("square")
}

fn delta(i: usize, j: usize) -> RationalExpr {
    if i == j {
        RationalExpr::one()
    } else {
        RationalExpr::zero()
    }
}

fn ij(i: usize, j: usize) -> String {
    format!("[{}][{}]", i + 1, j + 1)
}

pub fn verify_gff_axioms(s: &GffStructure) -> CheckReport {
    let mut rep = CheckReport::new("gff");
    let n = s.dim();
    let r = s.r();
    let ch = s.chart();
    let f = s.phi_matrix();
    let f2 = linalg::matmul(&f, &f);
    let g = s.metric.matrix();

    rep.identities(
        "gff.phi-squared",
        "phi^2 = -I + eta^a (x) xi_a",
        ch,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
            let rhs: RationalExpr = -delta(i, j) + (0..r).map(|a| &s.xi[a][i] * &s.eta[a][j]).sum::<RationalExpr>();
            (ij(i, j), &f2[i][j] - &rhs)
        }),
    );
    rep.identities(
        "gff.eta-xi",
        "eta^a(xi_b) = delta^a_b",
        ch,
        (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).map(|(a, b)| (ij(a, b), s.eta_of(a, &s.xi[b]) - delta(a, b))),
    );
    rep.identities(
        "gff.phi-xi",
        "phi xi_a = 0",
        ch,
        (0..r).flat_map(|a| {
            let v = s.phi_apply(&s.xi[a]);
            v.into_iter().enumerate().map(move |(i, c)| (ij(a, i), c))
        }),
    );
    rep.identities(
        "gff.eta-phi",
        "eta^a o phi = 0",
        ch,
        (0..r).flat_map(|a| {
            let f = &f;
            (0..n).map(move |j| {
                let v: RationalExpr = (0..n).map(|k| &s.eta[a][k] * &f[k][j]).sum();
                (ij(a, j), v)
            })
        }),
    );
    let gg = s.phi_gram();
    rep.identities(
        "gff.compatibility",
        "g(phi X, phi Y) = g(X, Y) - eps_a eta^a(X) eta^a(Y)",
        ch,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
            let rhs: RationalExpr = &g[i][j]
                - (0..r)
                    .map(|a| RationalExpr::from_int(s.eps[a]) * &s.eta[a][i] * &s.eta[a][j])
                    .sum::<RationalExpr>();
            (ij(i, j), &gg[i][j] - &rhs)
        }),
    );
    rep.identities(
        "gff.eta-dual",
        "eta^a(X) = eps_a g(X, xi_a)",
        ch,
        (0..r).flat_map(|a| {
            let gx = linalg::matvec(&g, &s.xi[a]);
            let eta = &s.eta[a];
            let e = RationalExpr::from_int(s.eps[a]);
            (0..n).map(move |j| (ij(a, j), &eta[j] - &(&e * &gx[j])))
        }),
    );
    let rank = linalg::rank(&f);
    rep.verdict(
        "gff.phi-rank",
        "rank phi = 2n",
        rank == 2 * s.n(),
        &rank.to_string(),
        format!("rank {rank}, 2n = {}", 2 * s.n()),
    );
    rep
}

/// Components `N^k_ij` of `[φ̄, φ̄] + 2 dη^α ⊗ ξ_α` on coordinate fields.
pub fn normality_tensor(s: &GffStructure) -> TensorField {
    let n = s.dim();
    let f = s.phi_matrix();
    let cols: Vec<Vec<RationalExpr>> = (0..n).map(|j| (0..n).map(|i| f[i][j].clone()).collect()).collect();
    let detas: Vec<TensorField> =
        s.eta.iter().map(|w| exterior_derivative(&TensorField::covector(s.chart.clone(), w.clone()).unwrap()).unwrap()).collect();
    let mut out = TensorField::zeros(s.chart.clone(), 1, 2);
    for i in 0..n {
        for j in 0..n {
            let b = bracket(&cols[i], &cols[j]);
            // [φ∂i, ∂j] = -∂_j(φ∂i), [∂i, φ∂j] = ∂_i(φ∂j)
            let mixed: Vec<RationalExpr> =
                (0..n).map(|l| cols[j][l].differentiate(i) - cols[i][l].differentiate(j)).collect();
            let fm = linalg::matvec(&f, &mixed);
            for k in 0..n {
                let mut v = &b[k] - &fm[k];
                for (a, d) in detas.iter().enumerate() {
                    let c = d.get(&[i, j]);
                    if !c.is_zero() {
                        v = v + RationalExpr::from_int(2) * c * &s.xi[a][k];
                    }
                }
                out.set(&[k, i, j], v);
            }
        }
    }
    out
}

/// `(∇̄_{∂i} φ̄)^h_j`.
pub fn covariant_phi(s: &GffStructure, c: &Connection) -> TensorField {
    let n = s.dim();
    let f = s.phi_matrix();
    TensorField::from_fn(s.chart.clone(), 1, 2, |idx| {
        let (h, i, j) = (idx[0], idx[1], idx[2]);
        let mut v = f[h][j].differentiate(i);
        for k in 0..n {
            v = v + c.gamma(h, i, k) * &f[k][j] - &f[h][k] * c.gamma(k, i, j);
        }
        v
    })
}

pub fn verify_s_manifold(s: &GffStructure, c: &Connection) -> CheckReport {
    let mut rep = CheckReport::new("s-manifold");
    let n = s.dim();
    let r = s.r();
    let ch = s.chart();
    let phi2 = fundamental_two_form(s);
    for a in 0..r {
        let w = TensorField::covector(ch.clone(), s.eta[a].clone()).unwrap();
        let d = exterior_derivative(&w).unwrap();
        rep.identities(
            &format!("s.d-eta[{}]", a + 1),
            "d eta^a = Phi",
            ch,
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (ij(i, j), d.get(&[i, j]) - phi2.get(&[i, j]))),
        );
    }
    let nt = normality_tensor(s);
    rep.identities(
        "s.normal",
        "[phi, phi] + 2 d eta^a (x) xi_a = 0",
        ch,
        (0..nt.components().len()).map(|k| {
            let idx = nt.multi_index(k);
            (format!("[{}][{}][{}]", idx[0] + 1, idx[1] + 1, idx[2] + 1), nt.components()[k].clone())
        }),
    );
    let dphi = covariant_phi(s, c);
    let gg = s.phi_gram();
    let xb = s.xi_bar();
    let eb = s.eta_bar();
    let f = s.phi_matrix();
    let f2 = linalg::matmul(&f, &f);
    rep.identities(
        "s.nabla-phi",
        "(nabla_X phi)Y = g(phi X, phi Y) xi_bar + eta_bar(Y) phi^2 X",
        ch,
        (0..dphi.components().len()).map(|k| {
            let idx = dphi.multi_index(k);
            let (h, i, j) = (idx[0], idx[1], idx[2]);
            let rhs = &gg[i][j] * &xb[h] + &eb[j] * &f2[h][i];
            (format!("[{}][{}][{}]", h + 1, i + 1, j + 1), &dphi.components()[k] - &rhs)
        }),
    );
    let coord = |i: usize| -> Vec<RationalExpr> { (0..n).map(|k| delta(k, i)).collect() };
    for a in 0..r {
        let e = RationalExpr::from_int(s.eps[a]);
        rep.identities(
            &format!("s.nabla-xi[{}]", a + 1),
            "nabla_X xi_a = -eps_a phi X",
            ch,
            (0..n).flat_map(|i| {
                let d = covariant_derivative(c, &coord(i), &s.xi[a]);
                let f = &f;
                let e = e.clone();
                (0..n).map(move |h| (ij(i, h), &d[h] + &(&e * &f[h][i])))
            }),
        );
    }
    rep.identities(
        "s.xi-geodesic",
        "nabla_{xi_a} xi_b = 0",
        ch,
        (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).flat_map(|(a, b)| {
            let d = covariant_derivative(c, &s.xi[a], &s.xi[b]);
            d.into_iter().enumerate().map(move |(h, v)| (format!("[{}][{}][{}]", a + 1, b + 1, h + 1), v))
        }),
    );
    rep
}
