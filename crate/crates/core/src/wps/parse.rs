//! Polynomial input language.
//!
//! ```text
//! expr   = term , { ("+" | "-") , term } ;
//! term   = factor , { ("*" | "/") , factor } ;
//! factor = ("+" | "-") , factor | power ;
//! power  = atom , [ "^" , integer ] ;
//! atom   = integer | variable | "(" , expr , ")" ;
//! variable = "x" | "y" | "z" | "w" ;
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/4*x` is a rational
//! coefficient. Whitespace is ignored. Error positions are 0-based byte
//! offsets into the input.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactalg::{Rational, Scalar};

pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

// exponents above this are rejected before any expansion happens
const MAX_EXPONENT: u32 = 4096;

/// Exponent vector over `(x, y, z, w)`.
pub type Exponents = [u32; 4];

/// Sparse polynomial in `x, y, z, w`.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<F> {
    terms: BTreeMap<Exponents, F>,
}

impl<F: Scalar> MPoly<F> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        MPoly::term(c, [0; 4])
    }

    pub fn term(c: F, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        MPoly::term(F::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponents) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let v = terms.remove(e).unwrap_or_else(F::zero) + c.clone();
            if !v.is_zero() {
                terms.insert(*e, v);
            }
        }
        MPoly { terms }
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Exponents, F> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                let v = terms.remove(&e).unwrap_or_else(F::zero) + c1.clone() * c2.clone();
                if !v.is_zero() {
                    terms.insert(e, v);
                }
            }
        }
        MPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MPoly::constant(F::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes a polynomial for each variable.
    pub fn substitute(&self, images: &[MPoly<F>; 4]) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (k, img) in images.iter().enumerate() {
                if e[k] > 0 {
                    t = t.mul(&img.pow(e[k]));
                }
            }
            out = out.add(&t);
        }
        out
    }
}

/// Human-readable monomial such as `x^2*y*z`.
pub fn fmt_monomial(e: &Exponents) -> String {
    let parts: Vec<String> = VARIABLES
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl<F: Scalar> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending order reads more naturally
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(e);
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
    text: String,
}

fn syntax(pos: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Syntax {
        position: pos,
        token: token.to_string(),
        message: message.into(),
    }
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let n: BigInt = s.parse().expect("digits");
            out.push(Token {
                tok: Tok::Num(n),
                pos,
                text: s,
            });
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let idx = match s.as_str() {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                "w" => 3,
                _ => return Err(syntax(pos, &s, "unknown variable; expected one of x, y, z, w")),
            };
            out.push(Token {
                tok: Tok::Var(idx),
                pos,
                text: s,
            });
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(syntax(pos, &ch.to_string(), "unexpected character")),
        };
        out.push(Token {
            tok,
            pos,
            text: ch.to_string(),
        });
        chars.next();
    }
    out.push(Token {
        tok: Tok::End,
        pos: input.len(),
        text: "<end of input>".to_string(),
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    max_degree: u32,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    let slash = self.bump();
                    let at = self.peek().clone();
                    let d = self.factor()?;
                    let c = d.as_constant().ok_or_else(|| {
                        syntax(at.pos, &at.text, "division is only allowed by a constant")
                    })?;
                    let inv = Scalar::inv(&c)
                        .ok_or_else(|| syntax(slash.pos, &slash.text, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly<Rational>> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly<Rational>> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        let Tok::Num(n) = &t.tok else {
            return Err(syntax(t.pos, &t.text, "expected a non-negative integer exponent"));
        };
        let e = n
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| syntax(t.pos, &t.text, "exponent too large"))?;
        if base.as_constant().is_none() && e > self.max_degree {
            return Err(syntax(
                t.pos,
                &t.text,
                format!("exponent exceeds the total degree bound {}", self.max_degree),
            ));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MPoly<Rational>> {
        let t = self.bump();
        match t.tok {
            Tok::Num(n) => Ok(MPoly::constant(Rational::from_integer(n))),
            Tok::Var(i) => Ok(MPoly::var(i)),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(syntax(close.pos, &close.text, "expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(syntax(t.pos, &t.text, "expected a number, variable or `(`")),
        }
    }
}

/// Parses a polynomial in `x, y, z, w` with rational coefficients.
/// Powers of non-constant subexpressions above `max_degree` are rejected
/// before expansion.
pub fn parse_polynomial(text: &str, max_degree: u32) -> Result<MPoly<Rational>> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        max_degree,
    };
    let poly = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(syntax(t.pos, &t.text, "unexpected token"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn precedence() {
        let p = parse_polynomial("-x^2 + 2*x*y - 3/4", 10).unwrap();
        assert_eq!(p.coeff(&[2, 0, 0, 0]), int(-1));
        assert_eq!(p.coeff(&[1, 1, 0, 0]), int(2));
        assert_eq!(p.coeff(&[0, 0, 0, 0]), rat(-3, 4));
    }

    #[test]
    fn expands_powers_of_sums() {
        let p = parse_polynomial("(x + y)^3 - x^3 - y^3", 10).unwrap();
        let q = parse_polynomial("3*x^2*y + 3*x*y^2", 10).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn error_positions() {
        match parse_polynomial("x + t", 4) {
            Err(Error::Syntax { position, token, .. }) => {
                assert_eq!(position, 4);
                assert_eq!(token, "t");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("x * (y + 1", 4) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 10),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("x / y", 4).is_err());
        assert!(parse_polynomial("x / 0", 4).is_err());
        assert!(parse_polynomial("x ^ y", 4).is_err());
        assert!(parse_polynomial("x y", 4).is_err());
        assert!(parse_polynomial("(x+y)^9", 4).is_err());
    }

    #[test]
    fn display_reparses() {
        let p = parse_polynomial("z*w - 1/2*x^2*y^2 + 3*x^4 - y^4", 8).unwrap();
        assert_eq!(parse_polynomial(&p.to_string(), 8).unwrap(), p);
    }

    #[test]
    fn substitution() {
        let p = parse_polynomial("x*y", 4).unwrap();
        let images = [
            parse_polynomial("x + y", 4).unwrap(),
            parse_polynomial("x - y", 4).unwrap(),
            MPoly::var(2),
            MPoly::var(3),
        ];
        assert_eq!(
            p.substitute(&images),
            parse_polynomial("x^2 - y^2", 4).unwrap()
        );
    }
}
