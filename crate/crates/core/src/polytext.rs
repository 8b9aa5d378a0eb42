//! Shared term grammar for univariate and bivariate polynomials.
//!
//! A term is an optional sign followed by factors, optionally joined by `*`.
//! A factor is a field element (`w`, `w^k`, an integer) or a variable with an
//! optional `^k`. Whitespace between tokens is ignored.

use crate::error::{Error, Result};
use crate::field::FieldCtx;

pub(crate) struct Term {
    pub coef: u32,
    pub exps: Vec<u32>,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, i: 0, src }
    }
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }
    fn pos(&self) -> usize {
        self.chars.get(self.i).map(|&(p, _)| p).unwrap_or(self.src.len())
    }
    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.i += 1;
        c
    }
    fn digits(&mut self) -> Option<(usize, String)> {
        let start = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.i += 1;
        }
        (!s.is_empty()).then_some((start, s))
    }
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

pub(crate) fn parse_terms(field: &FieldCtx, src: &str, vars: &[&str]) -> Result<Vec<Term>> {
    let mut lx = Lexer::new(src);
    if lx.peek().is_none() {
        return Err(err(0, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let mut negate = false;
        match lx.peek() {
            Some('+') if !first => {
                lx.bump();
            }
            Some('-') => {
                lx.bump();
                negate = true;
            }
            Some(_) if first => {}
            Some(c) => return Err(err(lx.pos(), format!("expected '+' or '-', found '{c}'"))),
            None => unreachable!(),
        }
        first = false;
        let mut coef = 1u32;
        let mut exps = vec![0u32; vars.len()];
        let mut factors = 0;
        loop {
            let pos = lx.pos();
            match lx.peek() {
                Some('w') => {
                    lx.bump();
                    let mut tok = String::from("w");
                    if lx.peek() == Some('^') {
                        lx.bump();
                        let (_, d) = lx.digits().ok_or_else(|| err(lx.pos(), "expected exponent"))?;
                        tok.push('^');
                        tok.push_str(&d);
                    }
                    coef = field.mul_raw(coef, field.parse_at(&tok, pos)?.value);
                }
                Some(c) if c.is_ascii_digit() => {
                    let (p, d) = lx.digits().unwrap();
                    coef = field.mul_raw(coef, field.parse_at(&d, p)?.value);
                }
                Some('x') => {
                    lx.bump();
                    let mut name = String::from("x");
                    if vars.len() > 1 {
                        if let Some((_, d)) = lx.digits() {
                            name.push_str(&d);
                        }
                    }
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| err(pos, format!("unknown variable '{name}'")))?;
                    let mut k = 1u32;
                    if lx.peek() == Some('^') {
                        lx.bump();
                        let (p, d) = lx.digits().ok_or_else(|| err(lx.pos(), "expected exponent"))?;
                        k = d.parse().map_err(|_| err(p, "exponent too large"))?;
                    }
                    exps[idx] += k;
                }
                Some(c) => return Err(err(pos, format!("unexpected '{c}'"))),
                None => return Err(err(pos, "unexpected end of input")),
            }
            factors += 1;
            match lx.peek() {
                Some('*') => {
                    lx.bump();
                }
                Some('w') | Some('x') => {}
                Some(c) if c.is_ascii_digit() && factors > 0 => {
                    return Err(err(lx.pos(), "number must come first in a term"));
                }
                _ => break,
            }
        }
        if negate {
            coef = field.neg_raw(coef);
        }
        terms.push(Term { coef, exps });
    }
    Ok(terms)
}

/// Renders one monomial body such as `x^2` or `x1*x2^3` (empty for the unit).
pub(crate) fn monomial(vars: &[&str], exps: &[u32], compact: bool) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    parts.join(if compact { "" } else { "*" })
}

/// Renders `coef * monomial` for a nonzero coefficient.
pub(crate) fn term(field: &FieldCtx, coef: u32, mono: &str, compact: bool) -> String {
    if mono.is_empty() {
        field.format_raw(coef)
    } else if coef == 1 {
        mono.to_string()
    } else if compact {
        format!("{}{}", field.format_raw(coef), mono)
    } else {
        format!("{}*{}", field.format_raw(coef), mono)
    }
}
