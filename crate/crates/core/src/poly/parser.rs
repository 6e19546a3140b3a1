//! Recursive-descent parser for integer polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | identifier | '(' expr ')'
//! ```

use super::MultiPoly;
use crate::error::{Error, Result};

pub(super) fn parse(text: &str, variables: &[String]) -> Result<MultiPoly> {
    let mut parser = Parser {
        text,
        pos: 0,
        variables,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(Error::parse(parser.pos, "unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    variables: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat(b'-') {
            return self.unary()?.neg();
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(Error::parse(
                start,
                "exponent must be a non-negative integer literal",
            ));
        }
        let e: u32 = digits
            .parse()
            .map_err(|_| Error::parse(start, "exponent out of range"))?;
        base.pow(e)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let value: i64 = digits
                    .parse()
                    .map_err(|_| Error::parse(start, "integer coefficient out of range"))?;
                if self.peek() == Some(b'.') || self.peek() == Some(b'/') {
                    return Err(Error::parse(
                        self.pos,
                        "only integer coefficients are supported",
                    ));
                }
                Ok(MultiPoly::constant(self.variables, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                match self.variables.iter().position(|v| v == name) {
                    Some(i) => Ok(MultiPoly::variable(self.variables, i)),
                    None => Err(Error::parse(start, format!("undeclared variable `{name}`"))),
                }
            }
            Some(_) => Err(Error::parse(start, "expected a number, variable or `(`")),
            None => Err(Error::parse(start, "unexpected end of input")),
        }
    }
}
