//! Canonical text in the expression grammar.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Monomial, Poly, RationalExpr};

pub(super) fn expr_to_text<S: AsRef<str>>(e: &RationalExpr, names: &[S]) -> String {
    if e.denom().is_one() {
        poly_to_text(e.numer(), names)
    } else {
        format!("({})/({})", poly_to_text(e.numer(), names), poly_to_text(e.denom(), names))
    }
}

pub(super) fn poly_to_text<S: AsRef<str>>(p: &Poly, names: &[S]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = monomial_text(m, names);
        if body.is_empty() {
            out.push_str(&rational_text(&mag));
        } else if mag.is_one() {
            // `-x^2` would read as `(-x)^2`, so a leading negative power keeps its unit
            if k == 0 && neg && m.exponents().iter().find(|&&e| e > 0) != Some(&1) {
                out.push_str("1*");
            }
            out.push_str(&body);
        } else {
            out.push_str(&rational_text(&mag));
            out.push('*');
            out.push_str(&body);
        }
    }
    out
}

fn rational_text(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn monomial_text<S: AsRef<str>>(m: &Monomial, names: &[S]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].as_ref().to_string()),
            _ => parts.push(format!("{}^{}", names[i].as_ref(), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use crate::chart::Chart;
    use crate::scalar::parse_expression;

    fn round(s: &str) -> String {
        let c = Chart::from_names("x1 x2 y1 y2 z1 z2");
        parse_expression(s, &c).unwrap().to_text(&c)
    }

    #[test]
    fn prints_in_grlex_order() {
        assert_eq!(round("1/16 + y2^2/8 - y1^2/8"), "-1/8*y1^2 + 1/8*y2^2 + 1/16");
        assert_eq!(round("4*y1"), "4*y1");
        assert_eq!(round("0 - y1"), "-y1");
        assert_eq!(round("0 - y1^2 + x1"), "-1*y1^2 + x1");
        assert_eq!(round("0 - y1*y2^3"), "-y1*y2^3");
        assert_eq!(round("y1 - y1"), "0");
        assert_eq!(round("-1/2"), "-1/2");
    }

    #[test]
    fn prints_quotients() {
        assert_eq!(round("1/(2*y1)"), "(1/2)/(y1)");
        assert_eq!(round("(x1 + 1)/(x1 - 1)"), "(x1 + 1)/(x1 - 1)");
    }

    #[test]
    fn printed_text_parses_back() {
        let c = Chart::from_names("x1 x2 y1 y2 z1 z2");
        for s in ["-1/8*y1^2 + 1/8*y2^2 + 1/16", "(0 - x1^2)/(y2^3 + 2)", "-3/4*x1^3*y1 - 2", "x1/(0 - y1^2)"] {
            let e = parse_expression(s, &c).unwrap();
            assert_eq!(parse_expression(&e.to_text(&c), &c).unwrap(), e, "{s}");
        }
    }
}
