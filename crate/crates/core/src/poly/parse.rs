//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ['^' digits]
//! coeff  := digits ['/' digits]
//! ```

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use super::ring::PolyRing;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let terms = p.poly()?;
    Ok(Polynomial::from_terms(ring, terms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
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

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<Vec<(Monomial, Rational)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return self.err(self.pos, "empty input"),
            _ => 1,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if sign < 0 { -&c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => {
                    return self.err(self.pos, format!("unexpected `{}`", ch as char));
                }
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut mono = Monomial::one(self.ring.arity());
        let mut coeff = Rational::one();
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => coeff = self.coeff()?,
            Some(ch) if is_ident_start(ch) => self.factor(&mut mono)?,
            Some(ch) => {
                return self.err(self.pos, format!("expected a term, found `{}`", ch as char))
            }
            None => return self.err(self.pos, "expected a term"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            match self.peek() {
                Some(ch) if is_ident_start(ch) => self.factor(&mut mono)?,
                _ => return self.err(self.pos, "expected a variable after `*`"),
            }
        }
        Ok((mono, coeff))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.digits()?.to_string();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.bytes().all(|b| b == b'0') {
                return self.err(at, "zero denominator");
            }
            return format!("{num}/{den}").parse();
        }
        num.parse()
    }

    fn factor(&mut self, mono: &mut Monomial) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && is_ident_char(self.src[self.pos]) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
        let idx = self.ring.var_index(name)?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?.to_string();
            exp = match d.parse::<u32>() {
                Ok(e) if e >= 1 => e,
                _ => return self.err(at, format!("bad exponent `{d}`")),
            };
        }
        let slot = &mut mono.exps_mut()[idx];
        *slot = slot.checked_add(exp).ok_or(Error::Syntax {
            offset: start,
            message: "exponent overflow".into(),
        })?;
        Ok(())
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::plane()
    }

    #[test]
    fn parses_three_terms() {
        let p = parse_polynomial("x^2*y - 3*x*y*z + 2*y*z^2", &ring()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "x^2*y - 3*x*y*z + 2*y*z^2");
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_polynomial("0", &ring()).unwrap().is_zero());
        assert!(parse_polynomial("x - x", &ring()).unwrap().is_zero());
        assert_eq!(
            parse_polynomial(" -7/14 ", &ring()).unwrap().to_string(),
            "-1/2"
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [
            ("x +", 3),
            ("x ** y", 3),
            ("2x", 1),
            ("x^0", 2),
            ("", 0),
            ("1/0", 2),
        ];
        for (text, off) in cases {
            match parse_polynomial(text, &ring()) {
                Err(Error::Syntax { offset, .. }) => assert_eq!(offset, off, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_polynomial("x*w", &ring()),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn repeated_factors_multiply() {
        let p = parse_polynomial("x*x^2*y", &ring()).unwrap();
        assert_eq!(p.to_string(), "x^3*y");
    }
}
