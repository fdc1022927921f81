//! Expressions over the hyperplane generators of a [`MultiProjRing`].
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*        juxtaposition multiplies: 3b, 2(a+b)
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```

use super::ring::{ChowElement, MultiProjRing};
use crate::error::{Error, Result};
use crate::exactq::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().map_err(|_| Error::Expr {
                    pos: start,
                    msg: "integer literal too large".into(),
                })?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Expr {
                    pos: start,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a MultiProjRing,
    gens: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Expr {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<ChowElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ChowElement> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => acc = &acc * &self.unary()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ChowElement> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Tok::Int(k)) => {
                    self.pos += 1;
                    let k = u32::try_from(k).or_else(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ChowElement> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(Rational::int(n)))
            }
            Some(Tok::Ident(name)) => {
                let Some(j) = self.gens.iter().position(|g| *g == name) else {
                    return self.err(format!(
                        "unknown generator {name:?} (declared: {})",
                        self.gens.join(", ")
                    ));
                };
                self.pos += 1;
                Ok(self.ring.generator(j))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, generator, or '('"),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Default generator names `a, b, c, ...`, one per factor.
pub fn default_generators(factors: usize) -> Vec<String> {
    (0..factors)
        .map(|j| ((b'a' + j as u8) as char).to_string())
        .collect()
}

/// Parses a comma-separated list of factor dimensions such as `"1,3"`.
pub fn parse_dims(s: &str) -> Result<MultiProjRing> {
    let dims = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidRing(format!("bad dimension {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    MultiProjRing::new(dims)
}

/// Evaluates `src` in `ring`. Generator `gens[j]` is the hyperplane class of
/// factor `j`; when `gens` is `None` they are named `a, b, c, ...`.
pub fn eval_expression(
    src: &str,
    ring: &MultiProjRing,
    gens: Option<&[String]>,
) -> Result<ChowElement> {
    let default;
    let gens = match gens {
        Some(g) => {
            if g.len() != ring.factors() {
                return Err(Error::Dimension {
                    expected: ring.factors(),
                    got: g.len(),
                });
            }
            g
        }
        None => {
            default = default_generators(ring.factors());
            &default
        }
    };
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        ring,
        gens,
    };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(value)
}
