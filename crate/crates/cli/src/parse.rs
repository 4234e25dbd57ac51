//! Recursive-descent parser for rational expressions in `x`, with optional
//! solution variables (`Y`, `Y1`, `Y11`, ...) for matrix entries.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' ['-'] int | '^' '(' ['-'] int ')')?
//! atom   := int | 'x' | 'zeta(' int ')' | 't' int | var | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use pvkit_core::arith::{Constant, Elem, Field};
use pvkit_core::pv::RPoly;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse { position: self.pos, message: message.into() })
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

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn integer(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        match self.digits() {
            Some(d) => Ok(d.parse().unwrap()),
            None => self.fail("expected an integer"),
        }
    }

    fn small(&mut self, what: &str) -> Result<u32, ExprError> {
        let at = self.pos;
        let n = self.integer()?;
        u32::try_from(n).ok().filter(|&n| n >= 1).ok_or(ExprError::Parse {
            position: at,
            message: format!("{what} must be a positive integer below 2^32"),
        })
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn constant(&self, c: Elem) -> RPoly {
        RPoly::constant(self.vars.len(), c)
    }

    fn expr(&mut self) -> Result<RPoly, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RPoly, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.mul(&self.invert(&d, at)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn invert(&self, d: &RPoly, position: usize) -> Result<RPoly, ExprError> {
        if d.is_zero() {
            return Err(ExprError::DivisionByZero { position });
        }
        if let Some(c) = d.as_constant() {
            return Ok(self.constant(Field::inv(&c).ok_or(ExprError::DivisionByZero { position })?));
        }
        d.monomial_inverse().ok_or(ExprError::Parse {
            position,
            message: "only constants and monomials in the solution variables can be inverted".into(),
        })
    }

    fn unary(&mut self) -> Result<RPoly, ExprError> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RPoly, ExprError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let e = self.integer()?;
        if paren {
            self.expect(b')')?;
        }
        let e = u32::try_from(e).map_err(|_| ExprError::Parse { position: at, message: "exponent too large".into() })?;
        let p = base.pow(e);
        if neg { self.invert(&p, at) } else { Ok(p) }
    }

    fn atom(&mut self) -> Result<RPoly, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.constant(Elem::from_const(Constant::from_rational(&BigRational::from_integer(n)))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.identifier();
                if let Some(i) = self.vars.iter().position(|v| v == name) {
                    return Ok(RPoly::var(self.vars.len(), i));
                }
                match name {
                    "x" => Ok(self.constant(Elem::x())),
                    "zeta" => {
                        self.expect(b'(')?;
                        let n = self.small("root of unity order")?;
                        self.expect(b')')?;
                        Ok(self.constant(Elem::from_const(Constant::zeta(n))))
                    }
                    _ => match name.strip_prefix('t').and_then(|l| l.parse::<u32>().ok()).filter(|&l| l >= 1) {
                        Some(level) => Ok(self.constant(Elem::from_const(Constant::symbol(level)))),
                        None => Err(ExprError::Parse { position: at, message: format!("unknown name '{name}'") }),
                    },
                }
            }
            Some(c) => self.fail(format!("unexpected '{}'", c as char)),
            None => self.fail("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial expression in `vars` over the rational
/// functions in `x`.
pub fn parse_with_vars(text: &str, vars: &[String]) -> Result<RPoly, ExprError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(value)
}

/// Parses a rational function in `x` with constants built from rationals,
/// `zeta(N)` and the transcendentals `t1, t2, ...`.
pub fn parse_expression(text: &str) -> Result<Elem, ExprError> {
    let value = parse_with_vars(text, &[])?;
    Ok(value.as_constant().expect("no variables were declared"))
}

/// The smallest cyclotomic conductor and number of transcendentals that
/// contain every coefficient of `f`.
pub fn constants_needed(f: &Elem) -> (u32, u32) {
    f.num().coeffs().iter().chain(f.den().coeffs()).fold((1, 0), |(n, t), c| {
        (num_integer::lcm(n, c.conductor()), t.max(c.level()))
    })
}
