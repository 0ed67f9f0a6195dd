//! Text format for integer polynomials in one variable.
//!
//! ```text
//! poly  := ws [sign] term (sign term)* ws
//! term  := coeff ['*'] var ['^' exp] | coeff | var ['^' exp]
//! ```
//!
//! e.g. `x^9 - x`, `-3*x^2 + 2x + 1`, `x^4 - 2x^2`. Every term must use the
//! same variable letter; repeated powers are summed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Poly, PolyRing};
use crate::ring::Integers;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: Option<char>,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            let s: String = self.chars[start..self.pos].iter().collect();
            s.parse().expect("digits")
        })
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        match self.number() {
            Some(n) => n.try_into().or_else(|_| self.err("exponent too large")),
            None => self.err("expected exponent after '^'"),
        }
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        self.skip_ws();
        let coeff = self.number();
        self.skip_ws();
        let mut had_star = false;
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            had_star = true;
            self.skip_ws();
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                match self.var {
                    None => self.var = Some(c),
                    Some(v) if v != c => {
                        return self.err(format!("mixed variables '{v}' and '{c}'"))
                    }
                    _ => {}
                }
                self.pos += 1;
                self.skip_ws();
                let e = if self.peek() == Some('^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                Ok((coeff.unwrap_or_else(|| BigInt::from(1)), e))
            }
            _ if had_star => self.err("expected variable after '*'"),
            _ => match coeff {
                Some(c) => Ok((c, 0)),
                None => self.err("expected a term"),
            },
        }
    }

    fn poly(&mut self) -> Result<Poly<BigInt>, ParseError> {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        self.skip_ws();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, e) = self.term()?;
            let entry = acc.entry(e).or_insert_with(BigInt::zero);
            if negative {
                *entry -= c;
            } else {
                *entry += c;
            }
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return self.err(format!("unexpected '{c}'")),
            }
            self.pos += 1;
        }
        let degree = acc.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (e, c) in acc {
            coeffs[e] = c;
        }
        Ok(PolyRing::new(Integers).from_coeffs(coeffs))
    }
}

/// Parse an integer polynomial such as `x^9 - x`.
pub fn parse_poly(s: &str) -> Result<Poly<BigInt>, ParseError> {
    let mut p = Parser {
        chars: s.chars().collect(),
        pos: 0,
        var: None,
    };
    if s.trim().is_empty() {
        return p.err("empty polynomial");
    }
    p.poly()
}
