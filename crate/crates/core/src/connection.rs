//! Levi-Civita connection, covariant derivatives and curvature.
//!
//! Sign conventions: `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_[X,Y] Z` and
//! `R(X,Y,Z,W) = -g(R(X,Y)Z, W)`.

use num_rational::BigRational;

use crate::chart::Chart;
use crate::error::{Error, Result};
use crate::framed::GffStructure;
use crate::hypersurface::Immersion;
use crate::linalg::{self, Matrix};
use crate::scalar::RationalExpr;
use crate::tensor::{directional, TensorField, VectorFieldAlong};

#[derive(Clone, Debug)]
pub struct Metric {
    g: TensorField,
    g_inv: TensorField,
    index: usize,
}

impl Metric {
    /// Builds a metric from its component matrix. `index` is the declared
    /// number of negative directions; it is checked when `g` is constant.
    pub fn new(chart: Chart, g: Matrix, index: usize) -> Result<Metric> {
        let n = chart.dim();
        for i in 0..n {
            for j in 0..i {
                if g[i][j] != g[j][i] {
                    return Err(Error::Shape(format!("metric is not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        let inv = linalg::inverse(&g)?;
        if let Some((_, neg, _)) = linalg::inertia(&g) {
            if neg != index {
                return Err(Error::Inconsistent(format!("declared index {index}, constant metric has index {neg}")));
            }
        }
        Ok(Metric {
            g: TensorField::from_matrix(chart.clone(), 0, 2, &g)?,
            g_inv: TensorField::from_matrix(chart, 2, 0, &inv)?,
            index,
        })
    }

    pub fn chart(&self) -> &Chart {
        self.g.chart()
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn tensor(&self) -> &TensorField {
        &self.g
    }

    pub fn inverse_tensor(&self) -> &TensorField {
        &self.g_inv
    }

    pub fn matrix(&self) -> Matrix {
        self.g.as_matrix()
    }

    pub fn inverse_matrix(&self) -> Matrix {
        self.g_inv.as_matrix()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalExpr {
        self.g.get(&[i, j])
    }

    pub fn inner(&self, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
        linalg::bilinear(&self.matrix(), x, y)
    }

    pub fn determinant(&self) -> RationalExpr {
        linalg::det(&self.matrix())
    }
}

/// Christoffel symbols `Γ^h_ij`, stored as a (1,2) field.
#[derive(Clone, Debug)]
pub struct Connection {
    gamma: TensorField,
}

impl Connection {
    pub fn from_tensor(gamma: TensorField) -> Result<Connection> {
        if gamma.valence() != (1, 2) {
            return Err(Error::Shape("Christoffel symbols form a (1,2) array".into()));
        }
        Ok(Connection { gamma })
    }

    pub fn chart(&self) -> &Chart {
        self.gamma.chart()
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self, h: usize, i: usize, j: usize) -> &RationalExpr {
        self.gamma.get(&[h, i, j])
    }

    pub fn tensor(&self) -> &TensorField {
        &self.gamma
    }

    /// Nonzero symbols `(h, i, j, value)` with `i <= j`.
    pub fn nonzero_symbols(&self) -> Vec<(usize, usize, usize, RationalExpr)> {
        let n = self.dim();
        let mut out = Vec::new();
        for h in 0..n {
            for i in 0..n {
                for j in i..n {
                    let v = self.gamma(h, i, j);
                    if !v.is_zero() {
                        out.push((h, i, j, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// `Γ^h_{ij} X^i Y^j` without the derivative term.
    pub fn contract_pair(&self, x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
        gamma_pair(&self.gamma, x, y)
    }
}

fn gamma_pair(gamma: &TensorField, x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
    let n = x.len();
    let mut out = vec![RationalExpr::zero(); n];
    for i in (0..n).filter(|&i| !x[i].is_zero()) {
        for j in (0..n).filter(|&j| !y[j].is_zero()) {
            let xy = &x[i] * &y[j];
            for (h, o) in out.iter_mut().enumerate() {
                let g = gamma.get(&[h, i, j]);
                if !g.is_zero() {
                    *o = &*o + &(g * &xy);
                }
            }
        }
    }
    out
}

/// `Γ^h_ij = ½ g^{hk} (∂_i g_kj + ∂_j g_ik - ∂_k g_ij)`.
pub fn christoffel(m: &Metric) -> Connection {
    let n = m.dim();
    let g = m.matrix();
    let ginv = m.inverse_matrix();
    let dg: Vec<Matrix> =
        (0..n).map(|k| g.iter().map(|row| row.iter().map(|e| e.differentiate(k)).collect()).collect()).collect();
    let half = RationalExpr::from_ratio(1, 2);
    // first kind: [ij, k] = ½ (∂_i g_kj + ∂_j g_ik - ∂_k g_ij)
    let mut first = vec![vec![vec![RationalExpr::zero(); n]; n]; n];
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let v = (&dg[i][k][j] + &dg[j][i][k] - &dg[k][i][j]) * &half;
                first[i][j][k] = v.clone();
                first[j][i][k] = v;
            }
        }
    }
    let mut gamma = TensorField::zeros(m.chart().clone(), 1, 2);
    for h in 0..n {
        for i in 0..n {
            for j in i..n {
                let v: RationalExpr = (0..n)
                    .filter(|&k| !ginv[h][k].is_zero() && !first[i][j][k].is_zero())
                    .map(|k| &ginv[h][k] * &first[i][j][k])
                    .sum();
                gamma.set(&[h, i, j], v.clone());
                gamma.set(&[h, j, i], v);
            }
        }
    }
    Connection { gamma }
}

/// `(∇_X Y)^h = X(Y^h) + Γ^h_ij X^i Y^j`.
pub fn covariant_derivative(c: &Connection, x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
    let mut out = c.contract_pair(x, y);
    for (h, o) in out.iter_mut().enumerate() {
        *o = &*o + &directional(x, &y[h]);
    }
    out
}

/// Components of `∇g` that fail to vanish, as `(k, i, j, value)`.
pub fn metric_defects(c: &Connection, m: &Metric) -> Vec<(usize, usize, usize, RationalExpr)> {
    let n = m.dim();
    let g = m.matrix();
    let mut out = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut v = g[i][j].differentiate(k);
                for h in 0..n {
                    v = v - c.gamma(h, k, i) * &g[h][j] - c.gamma(h, k, j) * &g[i][h];
                }
                if !v.is_zero() {
                    out.push((k, i, j, v));
                }
            }
        }
    }
    out
}

/// An ambient connection composed with an immersion, ready for
/// differentiating fields along the map.
#[derive(Clone, Debug)]
pub struct PulledConnection {
    gamma: TensorField,
    jac: Matrix,
}

impl PulledConnection {
    pub fn new(c: &Connection, f: &Immersion) -> Result<PulledConnection> {
        if c.chart() != f.x_chart() {
            return Err(Error::ChartMismatch("connection and immersion target differ".into()));
        }
        let gamma = c.tensor().compose(f.u_chart(), f.components())?;
        Ok(PulledConnection { gamma, jac: f.jacobian().clone() })
    }

    /// `∇̄_X Y` for a u-chart tangent vector `x` and components `y` along the map.
    pub fn derivative(&self, x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
        let jx = linalg::matvec(&self.jac, x);
        let mut out = gamma_pair(&self.gamma, &jx, y);
        for (h, o) in out.iter_mut().enumerate() {
            *o = &*o + &directional(x, &y[h]);
        }
        out
    }

    pub fn symbols(&self) -> &TensorField {
        &self.gamma
    }
}

pub fn covariant_derivative_along(
    c: &Connection,
    f: &Immersion,
    x_tan: &[RationalExpr],
    y: &VectorFieldAlong,
) -> Result<VectorFieldAlong> {
    if x_tan.len() != f.u_chart().dim() {
        return Err(Error::Shape("tangent vector must live on the parameter chart".into()));
    }
    let p = PulledConnection::new(c, f)?;
    VectorFieldAlong::new(f.u_chart().clone(), f.x_chart().clone(), p.derivative(x_tan, y.components()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor {
    r: TensorField,
}

impl CurvatureTensor {
    pub fn from_tensor(r: TensorField) -> Result<CurvatureTensor> {
        if r.valence() != (0, 4) {
            return Err(Error::Shape("curvature is a (0,4) field".into()));
        }
        Ok(CurvatureTensor { r })
    }

    pub fn tensor(&self) -> &TensorField {
        &self.r
    }

    pub fn chart(&self) -> &Chart {
        self.r.chart()
    }

    pub fn component(&self, a: usize, b: usize, c: usize, d: usize) -> &RationalExpr {
        self.r.get(&[a, b, c, d])
    }

    /// Multilinear value on four component vectors.
    pub fn eval(&self, x: &[RationalExpr], y: &[RationalExpr], z: &[RationalExpr], w: &[RationalExpr]) -> RationalExpr {
        let n = self.r.dim();
        let nz = |v: &[RationalExpr]| -> Vec<usize> { (0..n).filter(|&i| !v[i].is_zero()).collect() };
        let (ix, iy, iz, iw) = (nz(x), nz(y), nz(z), nz(w));
        let mut acc = RationalExpr::zero();
        for &a in &ix {
            for &b in &iy {
                if a == b {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for &c in &iz {
                    for &d in &iw {
                        if c == d {
                            continue;
                        }
                        let r = self.component(a, b, c, d);
                        if !r.is_zero() {
                            acc = acc + r * &(&xy * &(&z[c] * &w[d]));
                        }
                    }
                }
            }
        }
        acc
    }

    pub fn sub(&self, other: &CurvatureTensor) -> Result<CurvatureTensor> {
        Ok(CurvatureTensor { r: self.r.sub(&other.r)? })
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn compose(&self, target: &Chart, images: &[RationalExpr]) -> Result<CurvatureTensor> {
        Ok(CurvatureTensor { r: self.r.compose(target, images)? })
    }

    /// Violations of the pair antisymmetries, pair symmetry and first Bianchi
    /// identity, as `(a, b, c, d, defect)`.
    pub fn symmetry_defects(&self) -> Vec<(usize, usize, usize, usize, RationalExpr)> {
        let n = self.r.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let r = self.component(a, b, c, d);
                        let checks = [
                            r + self.component(b, a, c, d),
                            r + self.component(a, b, d, c),
                            r - self.component(c, d, a, b),
                            r + self.component(b, c, a, d) + self.component(c, a, b, d),
                        ];
                        if let Some(v) = checks.into_iter().find(|v| !v.is_zero()) {
                            out.push((a, b, c, d, v));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Riemann tensor `R_abcd = -g_dh (∂_a Γ^h_bc - ∂_b Γ^h_ac + Γ^h_ak Γ^k_bc - Γ^h_bk Γ^k_ac)`.
pub fn riemann(c: &Connection, m: &Metric) -> CurvatureTensor {
    let n = m.dim();
    let g = m.matrix();
    let mut r = TensorField::zeros(m.chart().clone(), 0, 4);
    for a in 0..n {
        for b in (a + 1)..n {
            for cc in 0..n {
                // (R(∂a, ∂b) ∂c)^h
                let vec: Vec<RationalExpr> = (0..n)
                    .map(|h| {
                        let mut v = c.gamma(h, b, cc).differentiate(a) - c.gamma(h, a, cc).differentiate(b);
                        for k in 0..n {
                            let t1 = c.gamma(h, a, k);
                            if !t1.is_zero() {
                                v = v + t1 * c.gamma(k, b, cc);
                            }
                            let t2 = c.gamma(h, b, k);
                            if !t2.is_zero() {
                                v = v - t2 * c.gamma(k, a, cc);
                            }
                        }
                        v
                    })
                    .collect();
                for d in 0..n {
                    let val: RationalExpr =
                        -(0..n).filter(|&h| !vec[h].is_zero()).map(|h| &g[d][h] * &vec[h]).sum::<RationalExpr>();
                    r.set(&[b, a, cc, d], -&val);
                    r.set(&[a, b, cc, d], val);
                }
            }
        }
    }
    CurvatureTensor { r }
}

/// The three tensors of the constant-curvature model, in the order
/// they are weighted: `(G G, Φ Φ, η̄ η̄ G)`.
fn model_parts(s: &GffStructure) -> (TensorField, TensorField, TensorField) {
    let chart = s.chart().clone();
    let gg = s.phi_gram();
    let ph = s.fundamental_two_form().as_matrix();
    let eb = s.eta_bar();
    let t1 = TensorField::from_fn(chart.clone(), 0, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        &gg[b][c] * &gg[a][d] - &gg[a][c] * &gg[b][d]
    });
    let t2 = TensorField::from_fn(chart.clone(), 0, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        &ph[d][a] * &ph[c][b] - &ph[c][a] * &ph[d][b] + RationalExpr::from_int(2) * &ph[a][b] * &ph[d][c]
    });
    let t3 = TensorField::from_fn(chart, 0, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        &eb[d] * &eb[a] * &gg[c][b] - &eb[d] * &eb[b] * &gg[c][a] + &eb[b] * &eb[c] * &gg[d][a]
            - &eb[c] * &eb[a] * &gg[d][b]
    });
    (t1, t2, t3)
}

/// Curvature of an S-space form of constant `c` built on the structure `s`.
pub fn space_form_model(c: &BigRational, s: &GffStructure) -> CurvatureTensor {
    let (t1, t2, t3) = model_parts(s);
    let eps = BigRational::from_integer(s.epsilon_sum().into());
    let four = BigRational::from_integer(4.into());
    let a = RationalExpr::constant(-(c + &eps * BigRational::from_integer(3.into())) / &four);
    let b = RationalExpr::constant(-(c - &eps) / &four);
    let comps = t1
        .components()
        .iter()
        .zip(t2.components())
        .zip(t3.components())
        .map(|((p, q), w)| &a * p + &b * q - w)
        .collect();
    CurvatureTensor { r: TensorField::new(s.chart().clone(), 0, 4, comps).expect("shape") }
}

/// The unique constant `c` with `r = space_form_model(c, s)`, if any.
pub fn fit_space_form_constant(r: &CurvatureTensor, s: &GffStructure) -> Option<BigRational> {
    let (t1, t2, _) = model_parts(s);
    let zero = space_form_model(&BigRational::from_integer(0.into()), s);
    // r - model(c) = (r - model(0)) + c (T1 + T2) / 4
    let k = t1.components().iter().zip(t2.components()).position(|(p, q)| !(p + q).is_zero())?;
    let coeff = (&t1.components()[k] + &t2.components()[k]) * RationalExpr::from_ratio(1, 4);
    let rest = &r.r.components()[k] - &zero.r.components()[k];
    let c = (-rest).try_div(&coeff).ok()?.as_constant()?;
    let model = space_form_model(&c, s);
    if r.r == model.r {
        Some(c)
    } else {
        None
    }
}
