//! Parser for the expression strings admitted in JSON files and CLI flags.
//!
//! Grammar: integers, unknown names, `+ - * / ( )` and `^` with a small
//! nonnegative integer exponent. Division requires a nonzero constant
//! divisor. A constraint string contains a single `=`.

use crate::poly::Poly;
use crate::{Error, Rational};
use num::Zero;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse { input: self.src.to_string(), reason: reason.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Poly, Error> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc += self.term()?;
                }
                b'-' => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, Error> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.bump();
                    acc = acc * self.power()?;
                }
                b'/' => {
                    self.bump();
                    let divisor = self.power()?;
                    let c = divisor.as_constant().ok_or(Error::BadDivisor)?;
                    if c.is_zero() {
                        return Err(Error::BadDivisor);
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(Rational::from_integer(n.into())))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Poly::var(&self.src[start..self.pos]))
            }
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn finish(&mut self) -> Result<(), Error> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err(format!("trailing input at offset {}", self.pos)));
        }
        Ok(())
    }
}

/// Parses an expression into a polynomial.
pub fn parse_poly(src: &str) -> Result<Poly, Error> {
    let mut p = Parser::new(src);
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses `lhs = rhs` into the polynomial `lhs - rhs` (to be read as `= 0`).
pub fn parse_constraint(src: &str) -> Result<Poly, Error> {
    let Some((lhs, rhs)) = src.split_once('=') else {
        return Err(Error::Parse { input: src.to_string(), reason: "constraint needs `=`".into() });
    };
    Ok(parse_poly(lhs)? - parse_poly(rhs)?)
}
