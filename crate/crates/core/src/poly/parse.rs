//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

pub(super) fn parse(text: &str, vars: &[String]) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty input"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { position: self.pos, message: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
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

    fn expr(&mut self) -> Result<Poly> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.nat()?;
            let e = u32::try_from(&e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.nat()?;
                let mut value = Rational::from_integer(num);
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos = save;
                        return Err(self.error("expected denominator after `/`"));
                    }
                    let den = self.nat()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), den);
                }
                Ok(Poly::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                Ok(Poly::from_terms(self.vars, [(Monomial::var(i), Rational::one())]))
            }
            Some(c) => Err(self.error(&format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rationals_and_precedence() {
        let v = vars(&["x"]);
        let f = parse("3/2*x^2 - 1/3", &v).unwrap();
        assert_eq!(f.coefficient(&Monomial::from_exponents(&[2])), rat(3, 2));
        assert_eq!(f.constant_term(), rat(-1, 3));
        let g = parse("-(x - 1)^2", &v).unwrap();
        assert_eq!(g.constant_term(), int(-1));
    }

    #[test]
    fn syntax_errors_report_position() {
        let v = vars(&["x", "y"]);
        match parse("x + * y", &v) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("x^", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x + y", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x y", &v), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_variable() {
        let v = vars(&["x", "y"]);
        assert_eq!(parse("x + w", &v), Err(Error::UnknownVariable("w".into())));
    }
}
