//! Coordinate tensor fields with dense component storage.
//!
//! A field of valence `(r, s)` stores `dim^(r+s)` components in row-major
//! order; the `r` contravariant slots come first, then the `s` covariant ones.
//! Indices usually range over the chart's coordinates. After composition
//! with a map they keep the target's range while the components become
//! functions on the source chart.

use num_rational::BigRational;

use crate::chart::Chart;
use crate::error::{Error, Result};
use crate::hypersurface::Immersion;
use crate::linalg::Matrix;
use crate::scalar::RationalExpr;

pub use crate::chart::Chart as ChartRef;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    chart: Chart,
    n: usize,
    r: usize,
    s: usize,
    comps: Vec<RationalExpr>,
}

impl TensorField {
    pub fn new(chart: Chart, r: usize, s: usize, comps: Vec<RationalExpr>) -> Result<Self> {
        let expected = chart.dim().pow((r + s) as u32);
        if comps.len() != expected {
            return Err(Error::Shape(format!(
                "a ({r},{s}) field on a {}-dimensional chart has {expected} components, got {}",
                chart.dim(),
                comps.len()
            )));
        }
        let n = chart.dim();
        Ok(TensorField { chart, n, r, s, comps })
    }

    pub fn zeros(chart: Chart, r: usize, s: usize) -> Self {
        let n = chart.dim();
        TensorField { chart, n, r, s, comps: vec![RationalExpr::zero(); n.pow((r + s) as u32)] }
    }

    pub fn from_fn<F: FnMut(&[usize]) -> RationalExpr>(chart: Chart, r: usize, s: usize, f: F) -> Self {
        let n = chart.dim();
        TensorField::build(chart, n, r, s, f)
    }

    fn build<F: FnMut(&[usize]) -> RationalExpr>(chart: Chart, n: usize, r: usize, s: usize, mut f: F) -> Self {
        let mut t = TensorField { chart, n, r, s, comps: vec![RationalExpr::zero(); n.pow((r + s) as u32)] };
        for flat in 0..t.comps.len() {
            let idx = t.multi_index(flat);
            t.comps[flat] = f(&idx);
        }
        t
    }

    pub fn vector(chart: Chart, comps: Vec<RationalExpr>) -> Result<Self> {
        TensorField::new(chart, 1, 0, comps)
    }

    pub fn covector(chart: Chart, comps: Vec<RationalExpr>) -> Result<Self> {
        TensorField::new(chart, 0, 1, comps)
    }

    /// Two-slot field from a square matrix, entry `[i][j]` at index `(i, j)`.
    pub fn from_matrix(chart: Chart, r: usize, s: usize, m: &Matrix) -> Result<Self> {
        if r + s != 2 {
            return Err(Error::Shape("a matrix fills a two-slot tensor".into()));
        }
        let n = chart.dim();
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
        }
        let comps = m.iter().flat_map(|row| row.iter().cloned()).collect();
        TensorField::new(chart, r, s, comps)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    /// Range of every index.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn valence(&self) -> (usize, usize) {
        (self.r, self.s)
    }

    pub fn order(&self) -> usize {
        self.r + self.s
    }

    pub fn components(&self) -> &[RationalExpr] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<RationalExpr> {
        self.comps
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order());
        let n = self.dim();
        idx.iter().fold(0, |acc, &i| acc * n + i)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let n = self.dim();
        let mut idx = vec![0; self.order()];
        for slot in (0..self.order()).rev() {
            idx[slot] = flat % n;
            flat /= n;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &RationalExpr {
        &self.comps[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: RationalExpr) {
        let k = self.flat_index(idx);
        self.comps[k] = v;
    }

    /// Entries of a two-slot field as a matrix.
    pub fn as_matrix(&self) -> Matrix {
        assert_eq!(self.order(), 2, "as_matrix needs a two-slot field");
        let n = self.dim();
        (0..n).map(|i| self.comps[i * n..(i + 1) * n].to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// First nonzero component with its index.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &RationalExpr)> {
        self.comps.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(k, c)| (self.multi_index(k), c))
    }

    fn check_same(&self, other: &TensorField) -> Result<()> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch(format!("{:?} vs {:?}", self.chart, other.chart)));
        }
        if (self.n, self.r, self.s) != (other.n, other.r, other.s) {
            return Err(Error::Shape(format!(
                "valence ({},{}) vs ({},{})",
                self.r, self.s, other.r, other.s
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorField) -> Result<TensorField> {
        self.check_same(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        Ok(TensorField { comps, ..self.clone() })
    }

    pub fn sub(&self, other: &TensorField) -> Result<TensorField> {
        self.check_same(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect();
        Ok(TensorField { comps, ..self.clone() })
    }

    pub fn scale(&self, f: &RationalExpr) -> TensorField {
        let comps = self.comps.iter().map(|a| a * f).collect();
        TensorField { comps, ..self.clone() }
    }

    /// Outer product; slots of `other` follow the slots of `self` in each group.
    pub fn tensor_product(&self, other: &TensorField) -> Result<TensorField> {
        if self.chart != other.chart || self.n != other.n {
            return Err(Error::ChartMismatch("tensor product across charts".into()));
        }
        let (r, s) = (self.r + other.r, self.s + other.s);
        let (ra, rb) = (self.r, other.r);
        let (sa, sb) = (self.s, other.s);
        Ok(TensorField::build(self.chart.clone(), self.n, r, s, |idx| {
            let mut ia: Vec<usize> = idx[..ra].to_vec();
            ia.extend_from_slice(&idx[r..r + sa]);
            let mut ib: Vec<usize> = idx[ra..ra + rb].to_vec();
            ib.extend_from_slice(&idx[r + sa..r + sa + sb]);
            self.get(&ia) * other.get(&ib)
        }))
    }

    /// Contraction of contravariant slot `a` with covariant slot `b`
    /// (slot numbers count all slots, contravariant first).
    pub fn contract(&self, a: usize, b: usize) -> Result<TensorField> {
        if a >= self.r {
            return Err(Error::Shape(format!("slot {a} is not contravariant")));
        }
        if b < self.r || b >= self.order() {
            return Err(Error::Shape(format!("slot {b} is not covariant")));
        }
        let n = self.dim();
        Ok(TensorField::build(self.chart.clone(), self.n, self.r - 1, self.s - 1, |idx| {
            let mut full: Vec<usize> = idx.to_vec();
            // reinsert the two contracted slots, lower position first
            full.insert(a, 0);
            full.insert(b, 0);
            (0..n)
                .map(|k| {
                    full[a] = k;
                    full[b] = k;
                    self.get(&full).clone()
                })
                .sum()
        }))
    }

    /// Lowers contravariant slot `a` with the metric `g`; the new covariant
    /// slot is placed first among the covariant slots.
    pub fn lower(&self, a: usize, g: &TensorField) -> Result<TensorField> {
        let t = g.tensor_product(self)?;
        // g has covariant slots (0, 1) after the product; contract g's second slot with slot a
        let ca = a;
        let cb = self.r + 1;
        t.contract(ca, cb)
    }

    /// Exact rational value of every component at a point of the chart.
    pub fn evaluate_at_point(&self, p: &[BigRational]) -> Result<Vec<BigRational>> {
        if p.len() != self.chart.dim() {
            return Err(Error::Shape(format!("point has {} coordinates, chart has {}", p.len(), self.chart.dim())));
        }
        self.comps.iter().map(|c| c.evaluate(p)).collect()
    }

    /// Componentwise composition with `images[i]` in place of coordinate `i` (no index pullback).
    pub fn compose(&self, target: &Chart, images: &[RationalExpr]) -> Result<TensorField> {
        if images.len() != self.chart.dim() {
            return Err(Error::Shape("one image per coordinate is required".into()));
        }
        let comps = self.comps.iter().map(|c| c.substitute(images)).collect::<Result<Vec<_>>>()?;
        Ok(TensorField { chart: target.clone(), n: self.n, r: self.r, s: self.s, comps })
    }
}

/// `[X, Y]^k = X^j d_j Y^k - Y^j d_j X^k` for component vectors on one chart.
pub fn bracket(x: &[RationalExpr], y: &[RationalExpr]) -> Vec<RationalExpr> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let mut acc = RationalExpr::zero();
            for j in 0..n {
                if !x[j].is_zero() {
                    acc = acc + &x[j] * &y[k].differentiate(j);
                }
                if !y[j].is_zero() {
                    acc = acc - &y[j] * &x[k].differentiate(j);
                }
            }
            acc
        })
        .collect()
}

/// Directional derivative `X(f)`.
pub fn directional(x: &[RationalExpr], f: &RationalExpr) -> RationalExpr {
    x.iter().enumerate().filter(|(_, xi)| !xi.is_zero()).map(|(i, xi)| xi * &f.differentiate(i)).sum()
}

pub fn lie_bracket(x: &TensorField, y: &TensorField) -> Result<TensorField> {
    if x.valence() != (1, 0) || y.valence() != (1, 0) {
        return Err(Error::Shape("lie_bracket takes two vector fields".into()));
    }
    if x.chart() != y.chart() {
        return Err(Error::ChartMismatch("vector fields on different charts".into()));
    }
    TensorField::vector(x.chart().clone(), bracket(x.components(), y.components()))
}

/// Exterior derivative of a 1-form with components `(dw)_ij = (d_i w_j - d_j w_i) / 2`,
/// the normalization under which `dw(X, Y)` is the plain contraction with `X^i Y^j`.
pub fn exterior_derivative(w: &TensorField) -> Result<TensorField> {
    if w.valence() != (0, 1) {
        return Err(Error::Shape("exterior_derivative takes a 1-form".into()));
    }
    let half = RationalExpr::from_ratio(1, 2);
    let c = w.components();
    Ok(TensorField::from_fn(w.chart().clone(), 0, 2, |idx| {
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            return RationalExpr::zero();
        }
        (c[j].differentiate(i) - c[i].differentiate(j)) * &half
    }))
}

/// Differential of a function as a 1-form.
pub fn differential(chart: &Chart, f: &RationalExpr) -> TensorField {
    TensorField::from_fn(chart.clone(), 0, 1, |idx| f.differentiate(idx[0]))
}

/// Composes every component with the immersion's coordinate functions.
/// Variance is untouched; index pullback is the hypersurface module's job.
pub fn pullback_substitute(t: &TensorField, f: &Immersion) -> Result<TensorField> {
    if t.chart() != f.x_chart() {
        return Err(Error::ChartMismatch("tensor does not live on the immersion's target".into()));
    }
    t.compose(f.u_chart(), f.components())
}

pub fn evaluate_at_point(t: &TensorField, p: &[BigRational]) -> Result<Vec<BigRational>> {
    t.evaluate_at_point(p)
}

/// Ambient vector field along an immersion: components are functions on the
/// parameter chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldAlong {
    domain: Chart,
    target: Chart,
    comps: Vec<RationalExpr>,
}

impl VectorFieldAlong {
    pub fn new(domain: Chart, target: Chart, comps: Vec<RationalExpr>) -> Result<Self> {
        if comps.len() != target.dim() {
            return Err(Error::Shape(format!(
                "a field along the map needs {} components, got {}",
                target.dim(),
                comps.len()
            )));
        }
        Ok(VectorFieldAlong { domain, target, comps })
    }

    pub fn domain(&self) -> &Chart {
        &self.domain
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn components(&self) -> &[RationalExpr] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}
