//! Recursive-descent parser for the polynomial input grammar.
//!
//! Grammar: integer or rational coefficients (`3`, `-7/2`), the named
//! variables, operators `+ - * ^`, and parentheses. Exponents are integers
//! (negative exponents produce Laurent monomials). Errors carry the byte
//! position of the offending token.

use anyhow::{bail, Result};
use oredyn::{parse_rational, RatLaurent, Rational};

pub struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [(&'a str, usize)],
    arity: usize,
}

pub fn parse_poly(text: &str, vars: &[(&str, usize)], arity: usize) -> Result<RatLaurent> {
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        vars,
        arity,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        bail!(
            "unexpected input at byte {} of `{}`: `{}`",
            p.pos,
            p.text,
            &p.text[p.pos..]
        );
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatLaurent> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatLaurent> {
        let mut acc = self.power()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<RatLaurent> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let e = self.integer()?;
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            // Negative exponent: only single monomials invert exactly.
            if base.num_terms() != 1 {
                bail!(
                    "negative exponent on a non-monomial at byte {} of `{}`",
                    self.pos,
                    self.text
                );
            }
            let (exps, coeff) = base
                .terms()
                .next()
                .map(|(x, c)| (x.clone(), c.clone()))
                .expect("one term");
            let inv_exps: Vec<i64> = exps.iter().map(|x| x * e).collect();
            let inv_coeff = oredyn::unipoly::rat_pow(&coeff, e);
            return Ok(RatLaurent::monomial(self.arity, inv_coeff, inv_exps));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatLaurent> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => bail!(
                        "expected `)` at byte {} of `{}`",
                        self.pos,
                        self.text
                    ),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                Ok(RatLaurent::constant(self.arity, q))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match self.vars.iter().find(|(v, _)| *v == name) {
                    Some((_, idx)) => Ok(RatLaurent::var(self.arity, *idx)),
                    None => bail!(
                        "unknown variable `{name}` at byte {start} of `{}` (expected one of {})",
                        self.text,
                        self.vars
                            .iter()
                            .map(|(v, _)| *v)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                }
            }
            Some(c) => bail!(
                "unexpected character `{}` at byte {} of `{}`",
                c as char,
                self.pos,
                self.text
            ),
            None => bail!("unexpected end of input in `{}`", self.text),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && self.bytes[start] == b'-') {
            bail!(
                "expected an integer at byte {} of `{}`",
                start,
                self.text
            );
        }
        Ok(self.text[start..self.pos].parse()?)
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        Ok(parse_rational(&self.text[start..self.pos])
            .map_err(|e| anyhow::anyhow!("{e} at byte {start} of `{}`", self.text))?)
    }
}
