//! Text syntax for field elements (`a^2+a`), polynomials
//! (`x^8 + x^5 + (a^2+a)*x + 1`) and field moduli (`y^4+y+1`).
//!
//! The parser accepts `+`, `-`, `*`, `^`, parentheses, integer literals and
//! juxtaposition (`2a^3x`). Printing is canonical, highest degree first.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf::{FieldElement, FieldSpec};
use crate::poly::{Poly, PolyRing};

const MAX_PARSED_DEGREE: u64 = 1 << 20;

#[derive(Clone, Copy, PartialEq, Debug)]
enum Tok {
    Num(u64),
    Gen,
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str, var: char, allow_gen: bool) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(v as u64))
                        .ok_or_else(|| Error::Parse("integer literal exceeds 64 bits".to_string()))?;
                    chars.next();
                }
                out.push(Tok::Num(n));
            }
            _ => {
                chars.next();
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    'a' if allow_gen => Tok::Gen,
                    c if c.eq_ignore_ascii_case(&var) => Tok::Var,
                    other => {
                        return Err(Error::Parse(format!("unexpected character '{other}'")))
                    }
                };
                out.push(tok);
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    ring: &'a PolyRing<FieldSpec>,
}

type P = Poly<FieldElement>;

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                let t = self.term()?;
                self.ring.neg(&t)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::Num(_) | Tok::Gen | Tok::Var | Tok::Open) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
    }

    fn factor(&mut self) -> Result<P> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let Some(Tok::Num(e)) = self.bump() else {
            return Err(Error::Parse("expected integer exponent after '^'".to_string()));
        };
        match base.degree() {
            None | Some(0) => {
                let c = base.coeff(0).copied().unwrap_or_default();
                if e == 0 {
                    return Ok(self.ring.one());
                }
                Ok(self.ring.constant(self.ring.field().pow(&c, e as u128)))
            }
            Some(d) => {
                if (d as u64).saturating_mul(e) > MAX_PARSED_DEGREE {
                    return Err(Error::Parse("polynomial degree too large".to_string()));
                }
                Ok(self.ring.pow(&base, e))
            }
        }
    }

    fn atom(&mut self) -> Result<P> {
        let field = self.ring.field();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(self.ring.constant(field.from_u64(n))),
            Some(Tok::Gen) => Ok(self.ring.constant(field.generator())),
            Some(Tok::Var) => Ok(self.ring.x()),
            Some(Tok::Open) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::Close) {
                    return Err(Error::Parse("unbalanced parenthesis".to_string()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".to_string())),
        }
    }
}

fn parse_with(field: &FieldSpec, text: &str, var: char, allow_gen: bool) -> Result<P> {
    let toks = tokenize(text, var, allow_gen)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    let ring = PolyRing::new(field.clone());
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        ring: &ring,
    };
    let out = parser.expr()?;
    if parser.pos != toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            parser.pos + 1
        )));
    }
    Ok(out)
}

/// Parses a polynomial in `x` with coefficients written in `a`.
pub fn parse_poly(field: &FieldSpec, text: &str) -> Result<P> {
    parse_with(field, text, 'x', true)
}

/// Parses a field element written as a polynomial in `a`.
pub fn parse_element(field: &FieldSpec, text: &str) -> Result<FieldElement> {
    let p = parse_with(field, text, 'a', false)?;
    // here `a` was parsed as the variable; reduce by substituting the generator
    let ring = PolyRing::new(field.clone());
    Ok(ring.eval(&p, &field.generator()))
}

/// Parses a polynomial over `F_p` in the variable `y`, returning its
/// coefficients degree 0 first.
pub fn parse_prime_poly(p: u64, text: &str) -> Result<Vec<u64>> {
    let prime = FieldSpec::prime(p)?;
    let poly = parse_with(&prime, text, 'y', false)?;
    Ok(poly.coeffs().iter().map(|c| c.packed() as u64).collect())
}

fn monomial_text(coeff: &str, var: char, exp: usize) -> String {
    let power = match exp {
        0 => return coeff.to_string(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    };
    if coeff == "1" {
        power
    } else {
        format!("{coeff}*{power}")
    }
}

pub(crate) fn format_prime_poly(coeffs: &[u32], var: char) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| monomial_text(&c.to_string(), var, i))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

pub fn format_element(field: &FieldSpec, x: FieldElement) -> String {
    if field.m() == 1 {
        return x.packed().to_string();
    }
    format_prime_poly(&field.coeffs(x), 'a')
}

pub fn format_poly(field: &FieldSpec, f: &P) -> String {
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, &c)| {
            let mut text = format_element(field, c);
            if text.contains('+') {
                text = format!("({text})");
            }
            monomial_text(&text, 'x', i)
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl FieldSpec {
    pub fn parse_poly(&self, text: &str) -> Result<P> {
        parse_poly(self, text)
    }

    pub fn format_poly(&self, f: &P) -> String {
        format_poly(self, f)
    }
}
