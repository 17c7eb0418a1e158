//! Text syntax for polynomials: `3*x^2*y - 1/2*z^3`, with parentheses allowed.

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    field: F,
    names: &'a [String],
    order: MonomialOrder,
    line: usize,
    col0: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { line: self.line, col: self.col0 + self.pos + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn constant(&self, c: F::Elem) -> Polynomial<F> {
        Polynomial::constant(self.field, self.nvars(), self.order, c)
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
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
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            let k: u32 = match k.try_into() {
                Ok(k) => k,
                Err(_) => return self.err("exponent out of range"),
            };
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                        let den = self.integer()?;
                        return match self.field.from_ratio(&num, &den) {
                            Ok(c) => Ok(self.constant(c)),
                            Err(_) => {
                                self.pos = save;
                                self.err("division by zero in coefficient")
                            }
                        };
                    }
                    return self.err("expected integer denominator");
                }
                self.pos = save;
                let c = self.field.from_ratio(&num, &BigInt::from(1)).expect("unit denominator");
                Ok(self.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::monomial(
                        self.field,
                        self.order,
                        Monomial::var(self.nvars(), i),
                        self.field.one(),
                    )),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable '{name}'"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in the variables `names`.
pub fn parse_polynomial<F: Field>(
    text: &str,
    field: F,
    names: &[String],
    order: MonomialOrder,
) -> Result<Polynomial<F>> {
    parse_polynomial_at(text, field, names, order, 1, 0)
}

/// As [`parse_polynomial`], reporting positions relative to `line` and column offset `col0`.
pub fn parse_polynomial_at<F: Field>(
    text: &str,
    field: F,
    names: &[String],
    order: MonomialOrder,
    line: usize,
    col0: usize,
) -> Result<Polynomial<F>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, field, names, order, line, col0 };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(poly)
}
