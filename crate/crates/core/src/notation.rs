//! Text syntax for slopes, continued fractions, links and lens spaces.
//!
//! ```text
//! SLOPE := INT "/" UINT | INT
//! CF    := "[" (INT ("," INT)*)? "]"
//! LINK  := "S(" INT "," INT ")"
//! LENS  := "L(" INT "," INT ")"
//! ```
//!
//! Whitespace is allowed between tokens. Errors carry the byte offset.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::lens::LensSpace;
use crate::slope::Slope;
use crate::two_bridge::TwoBridgeLink;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Either syntax accepted by [`parse_tangle_notation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Notation {
    Slope(Slope),
    Cf(ContinuedFraction),
}

impl Notation {
    pub fn value(&self) -> Slope {
        match self {
            Notation::Slope(s) => s.clone(),
            Notation::Cf(cf) => cf.eval(),
        }
    }
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Notation::Slope(s) => s.fmt(f),
            Notation::Cf(cf) => cf.fmt(f),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.found(&format!("'{c}'")))
        }
    }

    fn found(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn int(&mut self, signed: bool) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if signed && end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            self.pos = digits;
            return Err(self.found(if signed {
                "an integer"
            } else {
                "an unsigned integer"
            }));
        }
        self.pos = end;
        let text = self.src[start..end].trim_start_matches('+');
        Ok(text.parse().expect("validated digits"))
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing '{c}'"))),
        }
    }

    fn slope(&mut self) -> Result<Slope> {
        self.skip_ws();
        let start = self.pos;
        let num = self.int(true)?;
        let den = if self.eat('/') {
            self.int(false)?
        } else {
            BigInt::from(1)
        };
        if num.is_zero() && den.is_zero() {
            return Err(self.error_at(start, "0/0 is not a slope"));
        }
        Ok(Slope::reduce(num, den))
    }

    fn cf(&mut self) -> Result<ContinuedFraction> {
        self.expect('[')?;
        let mut coeffs = Vec::new();
        if !self.eat(']') {
            loop {
                coeffs.push(self.int(true)?);
                if self.eat(']') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.found("',' or ']'"));
                }
            }
        }
        Ok(ContinuedFraction::new(coeffs))
    }

    fn tagged_pair(&mut self, tag: char) -> Result<(BigInt, BigInt)> {
        self.expect(tag)?;
        self.expect('(')?;
        let a = self.int(true)?;
        self.expect(',')?;
        let b = self.int(true)?;
        self.expect(')')?;
        Ok((a, b))
    }
}

pub fn parse_slope(input: &str) -> Result<Slope> {
    let mut c = Cursor::new(input);
    let s = c.slope()?;
    c.finish()?;
    Ok(s)
}

pub fn parse_cf(input: &str) -> Result<ContinuedFraction> {
    let mut c = Cursor::new(input);
    let cf = c.cf()?;
    c.finish()?;
    Ok(cf)
}

pub fn parse_tangle_notation(input: &str) -> Result<Notation> {
    let mut c = Cursor::new(input);
    let out = if c.peek() == Some('[') {
        Notation::Cf(c.cf()?)
    } else {
        Notation::Slope(c.slope()?)
    };
    c.finish()?;
    Ok(out)
}

/// `S(p,q)` in canonical form.
pub fn parse_link(input: &str) -> Result<TwoBridgeLink> {
    let mut c = Cursor::new(input);
    let (p, q) = c.tagged_pair('S')?;
    c.finish()?;
    TwoBridgeLink::new(p, q)
}

/// `L(p,q)`, normalized to canonical form.
pub fn parse_lens(input: &str) -> Result<LensSpace> {
    let mut c = Cursor::new(input);
    let (p, q) = c.tagged_pair('L')?;
    c.finish()?;
    LensSpace::new(p, q)
}
