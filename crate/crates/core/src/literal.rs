//! Text syntax for exact scalars.
//!
//! Accepts sums and differences of products such as `1/2*sqrt(3)`, `-i`,
//! `(1/2)√2`, `2i√3 - 1`. Adjacent factors multiply implicitly, `/` divides
//! left to right, and the output of `Display` parses back to the same value.

use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::error::Error;
use crate::radical::{RadicalScalar, Rational};

impl FromStr for RadicalScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        if parser.chars.is_empty() {
            return Err(Error::Parse(String::from("empty scalar literal")));
        }
        let value = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

struct Parser {
    chars: alloc::vec::Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in `{text}`", self.pos))
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<RadicalScalar, Error> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RadicalScalar, Error> {
        let mut acc = self.signed_factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.signed_factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.signed_factor()?;
                    acc = acc
                        .checked_div(&rhs)
                        .ok_or_else(|| self.error("division by zero or by a multi-term value"))?;
                }
                Some(c) if starts_factor(c) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_factor(&mut self) -> Result<RadicalScalar, Error> {
        if self.peek() == Some('-') {
            self.pos += 1;
            Ok(-self.factor()?)
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<RadicalScalar, Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RadicalScalar::from_rational(Rational::from_integer(n)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('i') => {
                self.pos += 1;
                Ok(RadicalScalar::i())
            }
            Some('√') => {
                self.pos += 1;
                let n = if self.peek() == Some('(') {
                    self.pos += 1;
                    let n = self.radicand()?;
                    self.expect(')')?;
                    n
                } else {
                    self.radicand()?
                };
                Ok(RadicalScalar::sqrt(n))
            }
            Some('s') => {
                for expected in "sqrt(".chars() {
                    self.expect(expected)?;
                }
                let n = self.radicand()?;
                self.expect(')')?;
                Ok(RadicalScalar::sqrt(n))
            }
            _ => Err(self.error("expected a number, `i`, `sqrt(..)` or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse::<BigInt>()
            .map_err(|_| self.error("expected digits"))
    }

    fn radicand(&mut self) -> Result<u64, Error> {
        let n = self.integer()?;
        u64::try_from(n).map_err(|_| self.error("radicand must fit in 64 bits"))
    }
}

fn starts_factor(c: char) -> bool {
    c.is_ascii_digit() || matches!(c, '(' | 'i' | '√' | 's')
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn parse(s: &str) -> RadicalScalar {
        s.parse().unwrap()
    }

    #[test]
    fn cli_literals() {
        assert_eq!(parse("1"), RadicalScalar::one());
        assert_eq!(parse("-3/4"), RadicalScalar::ratio(-3, 4));
        assert_eq!(parse("1/2*sqrt(2)"), RadicalScalar::sqrt(2) * RadicalScalar::ratio(1, 2));
        assert_eq!(
            parse("1/2*sqrt(2) + 3*sqrt(3)"),
            RadicalScalar::sqrt(2) * RadicalScalar::ratio(1, 2)
                + RadicalScalar::sqrt(3) * RadicalScalar::from_integer(3)
        );
        assert_eq!(parse("-i"), -RadicalScalar::i());
        assert_eq!(parse("sqrt(8)"), RadicalScalar::sqrt(2) * RadicalScalar::from_integer(2));
    }

    #[test]
    fn display_round_trip() {
        let samples = [
            "(1/2)√2",
            "i√3",
            "-3/2",
            "1 - √2",
            "(1+2i)√5",
            "(1/2-(3/4)i)√7 + 2",
            "-(1/3)i√6",
        ];
        for s in samples {
            let v = parse(s);
            assert_eq!(parse(&v.to_string()), v, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<RadicalScalar>().is_err());
        assert!("1/0".parse::<RadicalScalar>().is_err());
        assert!("sqrt(2".parse::<RadicalScalar>().is_err());
        assert!("2x".parse::<RadicalScalar>().is_err());
    }
}
