//! Multivariate gcd over Q by recursion on the main variable with a
//! primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    // cheap divisibility test catches the common case where one divides the other
    if let Some(_) = a.div_exact(b) {
        return b.monic();
    }
    if let Some(_) = b.div_exact(a) {
        return a.monic();
    }
    let width = a.width().max(b.width());
    let v = (0..width).rev().find(|&v| a.contains_var(v) || b.contains_var(v)).unwrap();
    let (in_a, in_b) = (a.contains_var(v), b.contains_var(v));
    if !in_a {
        return gcd(a, &content(&b.to_univariate(v)));
    }
    if !in_b {
        return gcd(&content(&a.to_univariate(v)), b);
    }
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd(&ca, &cb);
    let mut pa = primitive(&ua, &ca);
    let mut pb = primitive(&ub, &cb);
    scalar_primitive(&mut pa);
    scalar_primitive(&mut pb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        let r = prem(&pa, &pb);
        if r.iter().all(|p| p.is_zero()) {
            break pb;
        }
        if r.len() == 1 {
            break vec![Poly::one()];
        }
        let cr = content(&r);
        pa = pb;
        pb = primitive(&r, &cr);
        scalar_primitive(&mut pb);
    };
    let cg = content(&g);
    let g = primitive(&g, &cg);
    Poly::from_univariate(&g, v).mul(&c).monic()
}

pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.mul(b).div_exact(&g).expect("gcd divides the product").monic()
}

fn content(u: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

/// Rescales so that all rational coefficients are coprime integers. Without
/// this the pseudo-remainders grow doubly exponentially in size.
fn scalar_primitive(u: &mut [Poly]) {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for p in u.iter() {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
    }
    if num.is_zero() {
        return;
    }
    let k = BigRational::new(den, num);
    if !k.is_one() {
        for p in u.iter_mut() {
            *p = p.scale(&k);
        }
    }
}

fn primitive(u: &[Poly], c: &Poly) -> Vec<Poly> {
    if c.is_one() {
        return u.to_vec();
    }
    u.iter().map(|p| p.div_exact(c).expect("content divides every coefficient")).collect()
}

// Sparse pseudo-remainder; correct up to a factor free of the main variable,
// which the caller removes by taking primitive parts.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let k = j + dr - db;
            r[k] = r[k].sub(&lr.mul(bj));
        }
        trim(&mut r);
    }
    r
}

fn trim(r: &mut Vec<Poly>) {
    while r.len() > 1 && r.last().map(|p| p.is_zero()).unwrap_or(false) {
        r.pop();
    }
    if r.is_empty() {
        r.push(Poly::zero());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }
    fn z() -> Poly {
        Poly::var(2)
    }

    #[test]
    fn remainder_sequence_stays_small() {
        // once took minutes: the scalar content of the remainders was never removed
        let p = |s: &str| crate::scalar::parse_expression(s, &crate::Chart::from_names("a b c")).unwrap().numer().clone();
        let d = p("b^2 - 4/9*b*c - 68/81*c^2 - 4/9");
        let den = d.mul(&d).mul(&p("c + 3/2"));
        let num = p("8/9*c^3 + 4/9*c").mul(&p("c + 3/2")).add(&p("-1/3*b - 16/27*c").mul(&d));
        assert!(gcd(&num, &den).is_one());
        assert_eq!(gcd(&num.mul(&d), &den), d.monic());
    }

    #[test]
    fn coprime_polynomials_have_unit_gcd() {
        assert!(gcd(&x(), &y()).is_one());
        assert!(gcd(&x().add(&Poly::one()), &x()).is_one());
    }

    #[test]
    fn recovers_common_factor() {
        let f = x().add(&y());
        let a = f.mul(&x().sub(&z()));
        let b = f.mul(&y().add(&z())).mul(&x());
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn recovers_nonlinear_common_factor() {
        let f = x().mul(&y()).add(&z().pow(2)).add(&Poly::from_int(3));
        let a = f.mul(&x().pow(2).add(&y()));
        let b = f.mul(&f).mul(&z().sub(&y()));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = x().scale(&num_rational::BigRational::from_integer(3.into()));
        assert_eq!(gcd(&a, &Poly::zero()), x());
    }

    #[test]
    fn lcm_of_shared_factor() {
        let a = x().mul(&y());
        let b = y().mul(&z());
        assert_eq!(lcm(&a, &b), x().mul(&y()).mul(&z()));
    }
}
