//! Infix polynomial parser: `3*x1^2*x2 - x3`, `(a+b)^2`, `1/2*y`.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use super::poly::Poly;
use super::vars::VarNames;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at offset {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("division by a non-constant or zero at offset {pos}")]
    BadDivision { pos: usize },
    #[error("exponent must be a non-negative integer at offset {pos}")]
    BadExponent { pos: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a mut VarNames,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            Some(&c) => ParseError::UnexpectedChar {
                ch: c as char,
                pos: self.pos,
            },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
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
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        _ => return Err(ParseError::BadDivision { pos: at }),
                    }
                }
                // implicit multiplication: `2x1`, `x1 x2`, `(a)(b)`
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer().ok_or(ParseError::BadExponent { pos: at })?;
            let e = u32::try_from(e).map_err(|_| ParseError::BadExponent { pos: at })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit present");
                Ok(Poly::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Poly::var(self.names.intern(name)))
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses `src`, interning any new variable names into `names`.
pub fn parse_poly(src: &str, names: &mut VarNames) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        names,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) -> String {
        let mut names = VarNames::standard(3);
        let p = parse_poly(s, &mut names).unwrap();
        p.display(&names).to_string()
    }

    #[test]
    fn parses_infix() {
        assert_eq!(roundtrip("3*x1^2*x2 - x3"), "3*x1^2*x2 - x3");
        assert_eq!(roundtrip("(x1+x2)*(x1-x2)"), "x1^2 - x2^2");
        assert_eq!(roundtrip("-a"), "-a");
        assert_eq!(roundtrip("1/2*y + 0"), "1/2*y");
        assert_eq!(roundtrip("2x1 x2"), "2*x1*x2");
        assert_eq!(roundtrip("(a+b)^2 - a^2 - b^2"), "2*a*b");
        assert_eq!(roundtrip("0"), "0");
    }

    #[test]
    fn new_names_extend_table() {
        let mut names = VarNames::standard(3);
        let p = parse_poly("a*x2", &mut names).unwrap();
        assert_eq!(names.index_of("a"), Some(3));
        assert_eq!(p, &Poly::var(3) * &Poly::var(1));
    }

    #[test]
    fn rejects_garbage() {
        let mut names = VarNames::default();
        assert!(parse_poly("x1 +", &mut names).is_err());
        assert!(parse_poly("x1 / x2", &mut names).is_err());
        assert!(parse_poly("x1^-1", &mut names).is_err());
        assert!(parse_poly("(x1", &mut names).is_err());
        assert!(parse_poly("x1 $", &mut names).is_err());
    }
}
