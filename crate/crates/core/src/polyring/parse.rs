//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ["^" integer]
//! atom   := integer | name | "(" expr ")"
//! ```
//!
//! Division is only allowed by nonzero constants. Juxtaposition (`2x`) is
//! rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Name(text[start..i].to_string())));
                continue;
            }
            other => return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, S> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [S],
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Poly> {
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let f = self.factor()?;
                    let c = f.constant_term();
                    if f.total_degree().unwrap_or(0) > 0 {
                        return Err(Error::Syntax { pos: at, msg: "division by a non-constant".into() });
                    }
                    if c.is_zero() {
                        return Err(Error::Syntax { pos: at, msg: "division by zero".into() });
                    }
                    acc = acc.div_scalar(&c);
                }
                Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    return self.err("implicit multiplication is not allowed; use `*`");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.toks.get(self.pos) {
                Some((_, Tok::Num(n))) => n.clone(),
                _ => return self.err("expected a non-negative integer exponent"),
            };
            self.pos += 1;
            let e: u32 = e.try_into().map_err(|_| Error::Syntax { pos: self.here(), msg: "exponent too large".into() })?;
            if let Some(Tok::Caret) = self.peek() {
                return self.err("chained exponents are ambiguous; use parentheses");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.vars.len();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(v))) => {
                self.pos += 1;
                Ok(Poly::constant(n, Rat::from_integer(v)))
            }
            Some((p, Tok::Name(name))) => {
                self.pos += 1;
                match self.vars.iter().position(|v| v.as_ref() == name) {
                    Some(i) => Ok(Poly::var(n, i)),
                    None => Err(Error::UnknownVariable { name, pos: p }),
                }
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `vars`, returning the expanded normal form.
pub fn parse_poly<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Poly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;

    #[test]
    fn expands_products() {
        let f = parse_poly("x^2 + y^3", &["x", "y"]).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&Monomial::new(vec![2, 0])), Rat::from_integer(1.into()));

        let vars = ["x", "y", "z"];
        let g = parse_poly("x*y*(x+y)*(x+y*z)", &vars).unwrap();
        let expect = parse_poly("x^3*y + x^2*y^2 + x^2*y^2*z + x*y^3*z", &vars).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn rejects_malformed() {
        let vars = ["x", "y"];
        assert!(matches!(parse_poly("x -", &vars), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("2x", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x/y", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x/0", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("(x+y", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", &vars), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_poly("x + w", &vars).unwrap_err(),
            Error::UnknownVariable { name: "w".into(), pos: 4 }
        );
    }

    #[test]
    fn rationals_and_signs() {
        let vars = ["x", "y"];
        let a = parse_poly("-3/2*x*y + (x - y)^2 / 4", &vars).unwrap();
        let b = parse_poly("1/4*x^2 - 2*x*y + 1/4*y^2", &vars).unwrap();
        assert_eq!(a, b);
    }
}
