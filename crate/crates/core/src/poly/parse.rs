//! Parser for the canonical polynomial text form.
//!
//! Grammar: a sum of terms separated by `+`/`-`; each term is a product of
//! integer literals and variable powers (`s^3`, `t`, `x^2`), with `*`
//! optional and whitespace insignificant. Malformed input is rejected with
//! the byte position of the offending character.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One parsed term: coefficient and per-variable exponents.
pub(super) struct RawTerm {
    pub coeff: BigInt,
    pub exponents: Vec<(char, u32)>,
}

pub(super) fn parse_terms(input: &str, allowed_vars: &[char]) -> Result<Vec<RawTerm>> {
    Parser {
        bytes: input.as_bytes(),
        pos: 0,
        allowed_vars,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    allowed_vars: &'a [char],
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(c) => {
                    return Err(self.error(format!("expected '+' or '-', found {:?}", c as char)))
                }
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = BigInt::one();
        let mut exponents: Vec<(char, u32)> = Vec::new();
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.integer()?;
                    saw_factor = true;
                }
                Some(c) if self.allowed_vars.contains(&(c as char)) => {
                    let var = c as char;
                    self.pos += 1;
                    let exp = self.optional_exponent()?;
                    match exponents.iter_mut().find(|(v, _)| *v == var) {
                        Some((_, e)) => *e += exp,
                        None => exponents.push((var, exp)),
                    }
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    return Err(self.error(format!(
                        "unknown variable {:?} (expected one of {:?})",
                        c as char, self.allowed_vars
                    )));
                }
                _ if !saw_factor => return Err(self.error("expected a term")),
                _ => break,
            }
            // optional '*' between factors
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                // after '*', a factor is mandatory
                self.skip_ws();
                match self.peek() {
                    Some(c)
                        if c.is_ascii_digit() || self.allowed_vars.contains(&(c as char)) => {}
                    _ => return Err(self.error("expected a factor after '*'")),
                }
            }
        }
        if coeff.is_zero() {
            exponents.clear();
        }
        Ok(RawTerm { coeff, exponents })
    }

    fn optional_exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error("exponent out of range"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("digits are ascii");
        text.parse::<BigInt>()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }
}
