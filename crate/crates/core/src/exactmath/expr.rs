//! Expression trees and a small infix parser that lower into [`MultiPoly`].
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{MultiPoly, PolyError, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Const(BigInt),
    Neg(Box<Expr>),
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_owned())
    }

    pub fn int(n: i64) -> Expr {
        Expr::Const(BigInt::from(n))
    }

    pub fn pow(self, e: i64) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn build(&self) -> Result<MultiPoly, PolyError> {
        Ok(match self {
            Expr::Var(v) => MultiPoly::var(v),
            Expr::Const(c) => MultiPoly::constant(c.clone()),
            Expr::Neg(e) => -e.build()?,
            Expr::Add(items) => items.iter().try_fold(MultiPoly::zero(), |acc, e| {
                Ok::<_, PolyError>(acc + e.build()?)
            })?,
            Expr::Sub(a, b) => a.build()? - b.build()?,
            Expr::Mul(items) => items.iter().try_fold(MultiPoly::constant(1), |acc, e| {
                Ok::<_, PolyError>(acc * e.build()?)
            })?,
            Expr::Pow(base, e) => {
                let exp = u32::try_from(*e).map_err(|_| PolyError::NegativeExponent(*e))?;
                base.build()?.power(exp)
            }
        })
    }

    pub fn parse(src: &str) -> Result<Expr, PolyError> {
        let mut parser = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

impl MultiPoly {
    /// Parses an infix expression such as `2*e1*e3 - 8*e4` and expands it.
    pub fn parse(src: &str) -> Result<MultiPoly, PolyError> {
        Expr::parse(src)?.build()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_owned(),
        }
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

    fn expr(&mut self) -> Result<Expr, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = match acc {
                    Expr::Add(mut v) => {
                        v.push(rhs);
                        Expr::Add(v)
                    }
                    other => Expr::Add(vec![other, rhs]),
                };
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, PolyError> {
        let first = self.unary()?;
        let mut factors = vec![first];
        while self.eat(b'*') {
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Mul(factors)
        })
    }

    fn unary(&mut self) -> Result<Expr, PolyError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let negative = self.eat(b'-');
            let digits = self
                .digits()
                .ok_or_else(|| self.error("expected exponent"))?;
            let mag: i64 = digits
                .parse()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(if negative { -mag } else { mag }));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Expr, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                Ok(Expr::Const(d.parse().expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Var(
                    String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
                ))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}
