//! Text form of polynomials.
//!
//! ```text
//! poly   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := int | "(" ["-"] int "/" int ")" | var ["^" posint]
//! var    := "x" | "y" | "z" | "w" digits
//! ```
//!
//! Whitespace between tokens is ignored. Printing (`Display` on
//! [`Polynomial`]) emits the same grammar, so parsing printed output is the
//! identity on canonical polynomials.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Variable};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let d = self.digits()?;
        Ok(d.parse().expect("digit string"))
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -Rational::one()
        } else {
            self.eat(b'+');
            Rational::one()
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((c * &sign, m));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                None => break,
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            }
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'0'..=b'9') => coeff *= Rational::from_integer(self.integer()?),
                Some(b'(') => coeff *= self.fraction()?,
                Some(b'x' | b'y' | b'z' | b'w') => {
                    let (v, e) = self.power()?;
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        if let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'(' {
                return self.err("juxtaposition is not allowed; use '*'");
            }
        }
        Ok((coeff, mono))
    }

    fn fraction(&mut self) -> Result<Rational, ParseError> {
        self.expect(b'(')?;
        let neg = self.eat(b'-');
        let num = self.integer()?;
        self.expect(b'/')?;
        let den = self.integer()?;
        if den.is_zero() {
            return self.err("zero denominator");
        }
        self.expect(b')')?;
        let r = Rational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    fn power(&mut self) -> Result<(Variable, u32), ParseError> {
        self.skip_ws();
        let v = match self.src[self.pos] {
            b'x' => Variable::X,
            b'y' => Variable::Y,
            b'z' => Variable::Z,
            _ => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return self.err("expected index after 'w'");
                }
                let idx = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match idx.parse::<u32>() {
                    Ok(i) => Variable::W(i),
                    Err(_) => return self.err("w index out of range"),
                }
            }
        };
        if !matches!(v, Variable::W(_)) {
            self.pos += 1;
        }
        if let Some(c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() {
                return self.err("juxtaposition is not allowed; use '*'");
            }
        }
        if !self.eat(b'^') {
            return Ok((v, 1));
        }
        if self.peek() == Some(b'-') {
            return self.err("negative exponents are not allowed");
        }
        let d = self.digits()?;
        if matches!(self.src.get(self.pos), Some(b'.' | b'/')) {
            return self.err("exponent must be an integer");
        }
        match d.parse::<u32>() {
            Ok(0) => self.err("exponent must be positive"),
            Ok(e) => Ok((v, e)),
            Err(_) => self.err("exponent out of range"),
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return p.err("empty input");
    }
    p.polynomial()
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn parses_f0() {
        let p: Polynomial = "x*w0 - z^2".parse().unwrap();
        let expected = Polynomial::from_terms([
            (int(1), Monomial::new(1, 0, 0, &[(0, 1)])),
            (int(-1), Monomial::new(0, 0, 2, &[])),
        ]);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "-z^2 + x*w0");
    }

    #[test]
    fn zero_and_fraction() {
        assert!(parse_polynomial("0").unwrap().is_zero());
        let p = parse_polynomial("(1/2)*y*w1^2").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].coeff, rat(1, 2));
        assert_eq!(p.to_string(), "(1/2)*y*w1^2");
        assert_eq!(parse_polynomial(" - ( -3/6 ) * w12 ").unwrap().to_string(), "(1/2)*w12");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "x^-1", "x^1.5", "x^0", "2x", "x y", "x +", "(1/0)*x", "w", "q", "x**y"] {
            assert!(parse_polynomial(bad).is_err(), "{bad:?} should be rejected");
        }
        let e = parse_polynomial("x*w0 - z^-2").unwrap_err();
        assert_eq!(e.position, 9);
    }

    #[test]
    fn constants_and_products() {
        assert_eq!(parse_polynomial("2*3*x*x").unwrap().to_string(), "6*x^2");
        assert_eq!(parse_polynomial("-1 + 1").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("-(3/4)").unwrap().to_string(), "-(3/4)");
    }
}
