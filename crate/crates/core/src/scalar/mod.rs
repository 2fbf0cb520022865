//! Exact rational functions over the coordinates of a chart.
//!
//! A [`RationalExpr`] is always stored in canonical form: numerator and
//! denominator share no common factor and the denominator is monic in graded
//! lexicographic order. Two values are equal as functions exactly when they are
//! structurally equal.

mod gcd;
mod parse;
mod poly;
mod print;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chart::Chart;
use crate::error::{Error, Result};

pub use gcd::{gcd, lcm};
pub use parse::parse_expression;
pub use poly::{Monomial, Poly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalExpr {
    num: Poly,
    den: Poly,
}

impl RationalExpr {
    pub fn zero() -> Self {
        RationalExpr { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalExpr::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RationalExpr::from_poly(Poly::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        RationalExpr::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn constant(c: BigRational) -> Self {
        RationalExpr::from_poly(Poly::constant(c))
    }

    pub fn var(i: usize) -> Self {
        RationalExpr::from_poly(Poly::var(i))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalExpr { num: p, den: Poly::one() }
    }

    /// Canonical quotient `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalExpr::zero());
        }
        if let Some(c) = den.as_constant() {
            return Ok(RationalExpr::from_poly(num.scale(&c.recip())));
        }
        if let Some(q) = num.div_exact(&den) {
            return Ok(RationalExpr::from_poly(q));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Ok(RationalExpr { num, den })
        } else {
            let inv = lc.recip();
            Ok(RationalExpr { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    /// Re-reduces the stored quotient. Values are kept canonical by every
    /// operation, so this is the identity.
    pub fn canonicalize(&self) -> Self {
        RationalExpr::new(self.num.clone(), self.den.clone()).expect("denominator is nonzero")
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// One past the highest variable index that occurs.
    pub fn width(&self) -> usize {
        self.num.width().max(self.den.width())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RationalExpr::zero();
        }
        RationalExpr { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return RationalExpr::one();
        }
        RationalExpr { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coeff();
        let inv = lc.recip();
        Ok(RationalExpr { num: self.den.scale(&inv), den: self.num.scale(&inv) })
    }

    pub fn try_div(&self, other: &RationalExpr) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        Ok(self * &other.recip()?)
    }

    /// Exact partial derivative in the coordinate with index `v`.
    pub fn differentiate(&self, v: usize) -> Self {
        if self.den.is_one() {
            return RationalExpr::from_poly(self.num.derivative(v));
        }
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RationalExpr::new(dn, self.den.clone()).expect("nonzero denominator");
        }
        let top = dn.mul(&self.den).sub(&self.num.mul(&dd));
        RationalExpr::new(top, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Composition: variable `i` is replaced by `images[i]`.
    ///
    /// Fails when the composed denominator vanishes identically.
    pub fn substitute(&self, images: &[RationalExpr]) -> Result<Self> {
        if self.width() > images.len() {
            return Err(Error::ChartMismatch(format!(
                "substitution covers {} coordinates but the expression uses {}",
                images.len(),
                self.width()
            )));
        }
        let (nn, nd) = substitute_poly(&self.num, images);
        if self.den.is_one() {
            return RationalExpr::new(nn, nd);
        }
        let (dn, dd) = substitute_poly(&self.den, images);
        if dn.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalExpr::new(nn.mul(&dd), nd.mul(&dn))
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if self.width() > point.len() {
            return Err(Error::ChartMismatch("point has too few coordinates".into()));
        }
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(point) / d)
    }

    /// Text in the expression grammar; parsing it back yields `self`.
    pub fn to_text(&self, chart: &Chart) -> String {
        print::expr_to_text(self, chart.names())
    }

    pub fn display<'a>(&'a self, chart: &'a Chart) -> impl fmt::Display + 'a {
        Shown { e: self, chart }
    }
}

struct Shown<'a> {
    e: &'a RationalExpr,
    chart: &'a Chart,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.e.to_text(self.chart))
    }
}

impl fmt::Debug for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.width()).map(|i| format!("v{i}")).collect();
        f.write_str(&print::expr_to_text(self, &names))
    }
}

impl Default for RationalExpr {
    fn default() -> Self {
        RationalExpr::zero()
    }
}

impl From<i64> for RationalExpr {
    fn from(n: i64) -> Self {
        RationalExpr::from_int(n)
    }
}

impl From<BigRational> for RationalExpr {
    fn from(c: BigRational) -> Self {
        RationalExpr::constant(c)
    }
}

/// Substitutes into a polynomial, returning numerator and denominator over a
/// common denominator built from powers of the image denominators.
fn substitute_poly(p: &Poly, images: &[RationalExpr]) -> (Poly, Poly) {
    if p.is_zero() {
        return (Poly::zero(), Poly::one());
    }
    let width = p.width();
    let maxdeg: Vec<u32> = (0..width).map(|v| p.degree_in(v)).collect();
    let mut num_pows: Vec<Vec<Poly>> = Vec::with_capacity(width);
    let mut den_pows: Vec<Vec<Poly>> = Vec::with_capacity(width);
    for v in 0..width {
        let k = maxdeg[v] as usize;
        let mut np = vec![Poly::one()];
        let mut dp = vec![Poly::one()];
        for j in 1..=k {
            np.push(np[j - 1].mul(&images[v].num));
            dp.push(dp[j - 1].mul(&images[v].den));
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    let mut acc = Poly::zero();
    for (m, c) in p.terms() {
        let mut t = Poly::constant(c.clone());
        for v in 0..width {
            let e = m.exp(v) as usize;
            let k = maxdeg[v] as usize;
            if e > 0 {
                t = t.mul(&num_pows[v][e]);
            }
            if k > e && !images[v].den.is_one() {
                t = t.mul(&den_pows[v][k - e]);
            }
        }
        acc = acc.add(&t);
    }
    let mut den = Poly::one();
    for v in 0..width {
        if !images[v].den.is_one() {
            den = den.mul(&den_pows[v][maxdeg[v] as usize]);
        }
    }
    (acc, den)
}

fn add_impl(a: &RationalExpr, b: &RationalExpr, negate: bool) -> RationalExpr {
    let bn = if negate { b.num.neg() } else { b.num.clone() };
    if a.is_zero() {
        return RationalExpr { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return RationalExpr::from_poly(a.num.add(&bn));
    }
    if a.den.is_one() {
        // gcd(a*d + n, d) = gcd(n, d) = 1
        return RationalExpr { num: a.num.mul(&b.den).add(&bn), den: b.den.clone() };
    }
    if b.den.is_one() {
        return RationalExpr { num: a.num.add(&bn.mul(&a.den)), den: a.den.clone() };
    }
    if a.den == b.den {
        return RationalExpr::new(a.num.add(&bn), a.den.clone()).expect("nonzero denominator");
    }
    let g = gcd(&a.den, &b.den);
    let da = a.den.div_exact(&g).expect("gcd divides");
    let db = b.den.div_exact(&g).expect("gcd divides");
    let num = a.num.mul(&db).add(&bn.mul(&da));
    let den = a.den.mul(&db);
    RationalExpr::new(num, den).expect("nonzero denominator")
}

fn mul_impl(a: &RationalExpr, b: &RationalExpr) -> RationalExpr {
    if a.is_zero() || b.is_zero() {
        return RationalExpr::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RationalExpr::from_poly(a.num.mul(&b.num));
    }
    if let Some(c) = a.as_constant() {
        return b.scale(&c);
    }
    if let Some(c) = b.as_constant() {
        return a.scale(&c);
    }
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let an = a.num.div_exact(&g1).expect("gcd divides");
    let bd = b.den.div_exact(&g1).expect("gcd divides");
    let bn = b.num.div_exact(&g2).expect("gcd divides");
    let ad = a.den.div_exact(&g2).expect("gcd divides");
    let den = ad.mul(&bd);
    let num = an.mul(&bn);
    let lc = den.leading_coeff();
    if lc.is_one() {
        RationalExpr { num, den }
    } else {
        let inv = lc.recip();
        RationalExpr { num: num.scale(&inv), den: den.scale(&inv) }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalExpr> for &RationalExpr {
            type Output = RationalExpr;
            fn $method(self, rhs: &RationalExpr) -> RationalExpr {
                $body(self, rhs)
            }
        }
        impl $tr<RationalExpr> for RationalExpr {
            type Output = RationalExpr;
            fn $method(self, rhs: RationalExpr) -> RationalExpr {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RationalExpr> for RationalExpr {
            type Output = RationalExpr;
            fn $method(self, rhs: &RationalExpr) -> RationalExpr {
                $body(&self, rhs)
            }
        }
        impl $tr<RationalExpr> for &RationalExpr {
            type Output = RationalExpr;
            fn $method(self, rhs: RationalExpr) -> RationalExpr {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| add_impl(a, b, false));
binop!(Sub, sub, |a, b| add_impl(a, b, true));
binop!(Mul, mul, mul_impl);

impl Neg for &RationalExpr {
    type Output = RationalExpr;
    fn neg(self) -> RationalExpr {
        RationalExpr { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RationalExpr {
    type Output = RationalExpr;
    fn neg(self) -> RationalExpr {
        RationalExpr { num: self.num.neg(), den: self.den }
    }
}

impl std::iter::Sum for RationalExpr {
    fn sum<I: Iterator<Item = RationalExpr>>(iter: I) -> Self {
        iter.fold(RationalExpr::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a RationalExpr> for RationalExpr {
    fn sum<I: Iterator<Item = &'a RationalExpr>>(iter: I) -> Self {
        iter.fold(RationalExpr::zero(), |acc, x| acc + x)
    }
}

/// Parses `src` and differentiates in coordinate `v` of `chart`.
pub fn differentiate(e: &RationalExpr, chart: &Chart, v: &str) -> Result<RationalExpr> {
    let i = chart
        .index_of(v)
        .ok_or_else(|| Error::ChartMismatch(format!("`{v}` is not a coordinate of {chart:?}")))?;
    Ok(e.differentiate(i))
}

/// Substitution keyed by coordinate name. Every coordinate of `from` that
/// occurs in `e` must be mapped; images live on a common target chart.
pub fn substitute(
    e: &RationalExpr,
    from: &Chart,
    map: &[(&str, RationalExpr)],
) -> Result<RationalExpr> {
    let mut images: Vec<Option<RationalExpr>> = vec![None; from.dim()];
    for (name, img) in map {
        let i = from
            .index_of(name)
            .ok_or_else(|| Error::ChartMismatch(format!("`{name}` is not a coordinate")))?;
        images[i] = Some(img.clone());
    }
    let mut full = Vec::with_capacity(from.dim());
    for (i, img) in images.into_iter().enumerate() {
        match img {
            Some(x) => full.push(x),
            None if i < e.width() && uses_var(e, i) => {
                return Err(Error::ChartMismatch(format!(
                    "no image given for `{}`",
                    from.name(i)
                )))
            }
            None => full.push(RationalExpr::zero()),
        }
    }
    e.substitute(&full)
}

fn uses_var(e: &RationalExpr, i: usize) -> bool {
    e.num.contains_var(i) || e.den.contains_var(i)
}
