//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := int ('*' factor)* | factor ('*' factor)*
//! factor := ident ['^' int]
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, PolyError, Polynomial, VariableSet};
use crate::arith::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            _ if c.is_ascii_whitespace() => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && matches!(bytes[i], b'.' | b'/' | b'e' | b'E') {
                    return Err(PolyError::NonIntegerCoefficient { pos: start });
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            '.' => return Err(PolyError::NonIntegerCoefficient { pos: i }),
            _ => {
                return Err(PolyError::Syntax { pos: i, msg: format!("unexpected character `{c}`") });
            }
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a Arc<VariableSet>,
    field: &'a F,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos: self.pos(), msg: msg.to_string() })
    }

    fn poly(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut out = Polynomial::zero(self.field, self.vars);
        let mut negative = false;
        if self.peek() == Some(&Tok::Minus) {
            negative = true;
            self.at += 1;
        }
        loop {
            let (m, c) = self.term()?;
            let c = if negative { self.field.neg(&c) } else { c };
            out.add_term(m, c);
            match self.peek() {
                None => return Ok(out),
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, F::Elem), PolyError> {
        let n = self.vars.len();
        let mut exps = vec![0u32; n];
        let mut coeff = self.field.one();
        match self.peek() {
            Some(Tok::Int(v)) => {
                coeff = self.field.from_bigint(v);
                self.at += 1;
            }
            Some(Tok::Ident(_)) => self.factor(&mut exps)?,
            _ => return self.err("expected a coefficient or a variable"),
        }
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), PolyError> {
        let pos = self.pos();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            return self.err("expected a variable");
        };
        let idx = self
            .vars
            .index_of(&name)
            .ok_or(PolyError::UnknownVariable { name, pos })?;
        self.at += 1;
        let mut e = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            match self.peek() {
                Some(Tok::Int(v)) => {
                    e = u32::try_from(v).or_else(|_| self.err("exponent too large"))?;
                    self.at += 1;
                }
                _ => return self.err("expected an exponent"),
            }
        }
        exps[idx] += e;
        Ok(())
    }
}

/// Parses `text` into a polynomial over `field` in the variables `vars`.
pub fn parse_polynomial<F: Field>(
    text: &str,
    vars: &Arc<VariableSet>,
    field: &F,
) -> Result<Polynomial<F>, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Syntax { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, at: 0, end: text.len(), vars, field };
    p.poly()
}
