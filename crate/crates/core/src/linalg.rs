//! Exact linear algebra over the field of rational functions.
//!
//! Determinants clear denominators row by row and expand the resulting
//! polynomial matrix by minors (fraction-free Bareiss elimination beyond
//! size 8). Everything else uses Gauss-Jordan elimination directly over the
//! fraction field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{lcm, Poly, RationalExpr};

pub type Matrix = Vec<Vec<RationalExpr>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![RationalExpr::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = RationalExpr::one();
    }
    m
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

pub fn matvec(a: &Matrix, v: &[RationalExpr]) -> Vec<RationalExpr> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Bilinear pairing `x^T G y`.
pub fn bilinear(g: &Matrix, x: &[RationalExpr], y: &[RationalExpr]) -> RationalExpr {
    let mut acc = RationalExpr::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() || g[i][j].is_zero() {
                continue;
            }
            acc = acc + xi * &g[i][j] * yj;
        }
    }
    acc
}

/// Matrix with the given row and column removed.
pub fn delete(m: &Matrix, row: Option<usize>, col: Option<usize>) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| Some(*j) != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

pub fn det(m: &Matrix) -> RationalExpr {
    let n = m.len();
    if n == 0 {
        return RationalExpr::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    // scale each row to polynomial entries
    let mut scale = RationalExpr::one();
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n);
    for row in m {
        let mut l = Poly::one();
        for x in row {
            if !x.denom().is_one() {
                l = lcm(&l, x.denom());
            }
        }
        let lr = RationalExpr::from_poly(l.clone());
        let prow: Vec<Poly> = row
            .iter()
            .map(|x| {
                let y = x * &lr;
                debug_assert!(y.is_polynomial());
                y.numer().clone()
            })
            .collect();
        scale = scale * lr;
        rows.push(prow);
    }
    let d = if n <= 8 { expand_minors(&rows) } else { bareiss(rows) };
    RationalExpr::from_poly(d).try_div(&scale).expect("row multipliers are nonzero")
}

/// Division-free determinant: minors on the leading rows, indexed by column
/// subsets, grown one row at a time. Small entries keep every product cheap,
/// where Bareiss pays for exact multivariate divisions.
pub fn expand_minors(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    let mut cur: BTreeMap<u32, Poly> = BTreeMap::new();
    cur.insert(0, Poly::one());
    for row in a {
        let mut next: BTreeMap<u32, Poly> = BTreeMap::new();
        for (&mask, p) in &cur {
            for (j, x) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || x.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let t = x.mul(p);
                let e = next.entry(mask | (1 << j)).or_insert_with(Poly::zero);
                *e = if above % 2 == 0 { e.add(&t) } else { e.sub(&t) };
            }
        }
        next.retain(|_, p| !p.is_zero());
        cur = next;
    }
    cur.remove(&((1u32 << n) - 1)).unwrap_or_else(Poly::zero)
}

/// Fraction-free determinant of a polynomial matrix.
pub fn bareiss(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // prefer the simplest nonzero pivot to limit expression growth
        let pick = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| (!a[i][c].is_constant(), a[i][c].numer().terms().len() + a[i][c].denom().terms().len()));
        let Some(p) = pick else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip().expect("pivot is nonzero");
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if a[r][j].is_zero() {
                    continue;
                }
                a[i][j] = &a[i][j] - &(&f * &a[r][j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel, one vector per free column.
pub fn nullspace(m: &Matrix) -> Vec<Vec<RationalExpr>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let (a, pivots) = rref(m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![RationalExpr::zero(); cols];
        v[free] = RationalExpr::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[r][free];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x = b` (free unknowns set to zero), or `None`.
pub fn solve(a: &Matrix, b: &[RationalExpr]) -> Option<Vec<RationalExpr>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![RationalExpr::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = red[r][cols].clone();
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { RationalExpr::one() } else { RationalExpr::zero() });
            }
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::DegenerateMetric);
    }
    Ok(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Signature `(positive, negative, zero)` of a constant symmetric matrix,
/// computed by symmetric elimination. `None` when an entry is not constant.
pub fn inertia(m: &Matrix) -> Option<(usize, usize, usize)> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for row in m {
        let mut r = Vec::with_capacity(n);
        for x in row {
            r.push(x.as_constant()?);
        }
        a.push(r);
    }
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        // find a nonzero diagonal entry, or manufacture one from an off-diagonal pair
        let k = match alive.iter().find(|&&i| !a[i][i].is_zero()) {
            Some(&k) => k,
            None => {
                let pair = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    None => {
                        zero += alive.len();
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j makes a[i][i] = 2 a[i][j]
                        for t in 0..n {
                            let v = a[j][t].clone();
                            a[i][t] += v;
                        }
                        for t in 0..n {
                            let v = a[t][j].clone();
                            a[t][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&i| i != k);
        for &i in &alive {
            let f = &a[i][k] / &p;
            for &j in &alive {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Some((pos, neg, zero))
}

pub fn constant(n: i64) -> RationalExpr {
    RationalExpr::constant(BigRational::from_integer(BigInt::from(n)))
}
