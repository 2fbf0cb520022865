//! Recursive-descent parser for coordinate expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := base ('^' nonneg-int)?
//! base    := rational-literal | identifier | '(' expr ')' | '-' base
//! literal := int ('/' int)?
//! ```
//!
//! A literal `int/int` is read greedily, so `x/2/3` is `x / (2/3)`. Unary minus
//! belongs to `base`, so `-x^2` is `(-x)^2`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Poly, RationalExpr};
use crate::chart::Chart;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

/// Parses `src` over the coordinates of `chart` into canonical form.
/// Error columns are 1-based character positions in `src`.
pub fn parse_expression(src: &str, chart: &Chart) -> Result<RationalExpr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, chart };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(Error::Syntax { col: p.col(), message: format!("unexpected {}", describe(t)) }),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i].is_ascii_alphabetic() {
                return Err(Error::Syntax {
                    col: i + 1,
                    message: "identifiers are letters followed by digits".into(),
                });
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax { col, message: format!("unexpected character `{c}`") })
            }
        };
        out.push((t, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    chart: &'a Chart,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalExpr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.col();
                    let d = self.factor()?;
                    acc = acc.try_div(&d).map_err(|_| Error::ZeroDivisor { col })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalExpr> {
        let b = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let col = self.col();
            match self.bump() {
                Tok::Int(n) => {
                    let k: u32 = n.try_into().map_err(|_| Error::Syntax {
                        col,
                        message: "exponent too large".into(),
                    })?;
                    Ok(b.pow(k))
                }
                t => Err(Error::Syntax {
                    col,
                    message: format!("expected a nonnegative integer exponent, found {}", describe(&t)),
                }),
            }
        } else {
            Ok(b)
        }
    }

    fn base(&mut self) -> Result<RationalExpr> {
        let col = self.col();
        match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = self.peek_at(1).clone() {
                        self.bump();
                        let dcol = self.col();
                        self.bump();
                        if d == BigInt::from(0) {
                            return Err(Error::ZeroDivisor { col: dcol });
                        }
                        return Ok(RationalExpr::constant(BigRational::new(n, d)));
                    }
                }
                Ok(RationalExpr::constant(BigRational::from_integer(n)))
            }
            Tok::Ident(name) => match self.chart.index_of(&name) {
                Some(i) => Ok(RationalExpr::from_poly(Poly::var(i))),
                None => Err(Error::UnknownIdentifier { name, col }),
            },
            Tok::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    Tok::RParen => Ok(e),
                    t => Err(Error::Syntax {
                        col: self.toks[self.pos.saturating_sub(1)].1,
                        message: format!("expected `)`, found {}", describe(&t)),
                    }),
                }
            }
            Tok::Minus => Ok(-self.base()?),
            t => Err(Error::Syntax { col, message: format!("expected an operand, found {}", describe(&t)) }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart() -> Chart {
        Chart::from_names("x1 x2 y1 y2 z1 z2")
    }

    fn p(s: &str) -> Result<RationalExpr> {
        parse_expression(s, &chart())
    }

    #[test]
    fn literal_monomial() {
        let e = p("4*y1").unwrap();
        assert_eq!(e, RationalExpr::from_int(4) * RationalExpr::var(2));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(p(" 1/16+y2 ^ 2/8 - y1^2/8 ").unwrap(), p("1/16 + y2^2/8 - y1^2/8").unwrap());
    }

    #[test]
    fn scaled_cofactor_matches() {
        let a = p("1/2 + y2^2 - y1^2").unwrap();
        let b = p("1/16 + y2^2/8 - y1^2/8").unwrap();
        assert_eq!(a.scale(&BigRational::new(1.into(), 8.into())), b);
    }

    #[test]
    fn unary_minus_binds_tighter_than_power() {
        assert_eq!(p("-x1^2").unwrap(), p("x1*x1").unwrap());
        assert_eq!(p("0 - x1^2").unwrap(), -p("x1^2").unwrap());
        assert_eq!(p("--x1").unwrap(), p("x1").unwrap());
    }

    #[test]
    fn literals_are_greedy() {
        assert_eq!(p("x1/2/3").unwrap(), p("3*x1/2").unwrap());
        assert_eq!(p("x1/2/y1").unwrap(), p("(x1/2)/y1").unwrap());
    }

    #[test]
    fn reports_errors_with_columns() {
        assert_eq!(p("x1 + w").unwrap_err(), Error::UnknownIdentifier { name: "w".into(), col: 6 });
        assert!(matches!(p("x1 +").unwrap_err(), Error::Syntax { col: 5, .. }));
        assert!(matches!(p("(x1").unwrap_err(), Error::Syntax { .. }));
        assert_eq!(p("x1 / (y1 - y1)").unwrap_err(), Error::ZeroDivisor { col: 6 });
        assert_eq!(p("1/0").unwrap_err(), Error::ZeroDivisor { col: 3 });
        assert!(matches!(p("x1^y1").unwrap_err(), Error::Syntax { col: 4, .. }));
        assert!(matches!(p("x1 $").unwrap_err(), Error::Syntax { col: 4, .. }));
        assert!(matches!(p("x1y").unwrap_err(), Error::Syntax { .. }));
    }
}
