//! Human-readable polynomial input such as `2t^2-3t+2` or `t^-1 + 1`.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Parse a Laurent polynomial in `t`.
///
/// Terms are `[sign] [coeff] [*] [t [^ exp]]`, where `exp` may be negative
/// and may be wrapped in `()` or `{}`. A leading `[` switches to the JSON
/// pair-list form `[[exp, coeff], ...]`.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    let trimmed = src.trim();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| Error::parse(e.column(), e.to_string()));
    }
    let mut p = Parser {
        s: src.as_bytes(),
        i: 0,
    };
    let mut terms = Vec::new();
    p.ws();
    if p.done() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut first = true;
    while !p.done() {
        let sign = match p.peek() {
            Some(b'+') => {
                p.i += 1;
                1
            }
            Some(b'-') => {
                p.i += 1;
                -1
            }
            _ if first => 1,
            _ => return Err(Error::parse(p.i, "expected '+' or '-'")),
        };
        first = false;
        p.ws();
        let start = p.i;
        let coeff = p.digits();
        p.ws();
        if coeff.is_some() && p.peek() == Some(b'*') {
            p.i += 1;
            p.ws();
        }
        let exp = if matches!(p.peek(), Some(b't') | Some(b'x')) {
            p.i += 1;
            p.ws();
            if p.peek() == Some(b'^') {
                p.i += 1;
                p.ws();
                p.exponent()?
            } else {
                1
            }
        } else {
            if coeff.is_none() {
                return Err(Error::parse(start, "expected a coefficient or 't'"));
            }
            0
        };
        let c = coeff.unwrap_or_else(BigInt::one) * sign;
        terms.push((exp, c));
        p.ws();
    }
    Ok(LaurentPoly::from_terms(terms))
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn done(&self) -> bool {
        self.i >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.i += 1;
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.i]).ok()?.parse().ok()
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = match self.peek() {
            Some(b'(') => Some(b')'),
            Some(b'{') => Some(b'}'),
            _ => None,
        };
        if close.is_some() {
            self.i += 1;
            self.ws();
        }
        let neg = if self.peek() == Some(b'-') {
            self.i += 1;
            true
        } else {
            false
        };
        let at = self.i;
        let v = self.digits().ok_or_else(|| Error::parse(at, "expected an exponent"))?;
        let v: i64 = v.try_into().map_err(|_| Error::parse(at, "exponent out of range"))?;
        if let Some(c) = close {
            self.ws();
            if self.peek() != Some(c) {
                return Err(Error::parse(self.i, "unclosed exponent"));
            }
            self.i += 1;
        }
        Ok(if neg { -v } else { v })
    }
}
