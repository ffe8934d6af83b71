//! Infix expression parser for polynomials and rational functions.
//!
//! Accepts `+ - * / ^`, parentheses, unary minus, rational literals, `sqrt(d)`
//! and bracketed finite-field literals such as `[1 0 3]`. Literals are handed
//! to the coefficient domain's own parser.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::poly::{var_list, MultiPoly};
use crate::ratfunc::RationalFunction;
use crate::scalar::Scalar;

/// Parses a polynomial over the given variables; division is allowed only by
/// constants.
pub fn parse_polynomial<F: Scalar>(text: &str, vars: &[&str], domain: &F::Domain) -> Result<MultiPoly<F>> {
    match Parser::new(text, var_list(vars), domain).run()? {
        Value::Poly(p) => Ok(p),
        Value::Frac(r) => r
            .to_polynomial()
            .ok_or_else(|| AlgebraError::parse(0, "expression is not a polynomial")),
    }
}

/// Parses a rational function over the given variables.
pub fn parse_rational_function<F: Scalar>(
    text: &str,
    vars: &[&str],
    domain: &F::Domain,
) -> Result<RationalFunction<F>> {
    Ok(match Parser::new(text, var_list(vars), domain).run()? {
        Value::Poly(p) => RationalFunction::from_poly(p),
        Value::Frac(r) => r,
    })
}

enum Value<F: Scalar> {
    Poly(MultiPoly<F>),
    Frac(RationalFunction<F>),
}

impl<F: Scalar> Value<F> {
    fn frac(self) -> RationalFunction<F> {
        match self {
            Value::Poly(p) => RationalFunction::from_poly(p),
            Value::Frac(r) => r,
        }
    }

    fn add(self, rhs: Self, negate: bool) -> Result<Self> {
        Ok(match (self, rhs) {
            (Value::Poly(a), Value::Poly(b)) => {
                Value::Poly(if negate { a.checked_sub(&b)? } else { a.checked_add(&b)? })
            }
            (a, b) => {
                let (a, b) = (a.frac(), b.frac());
                Value::Frac(if negate { a.checked_sub(&b)? } else { a.checked_add(&b)? })
            }
        })
    }

    /// Products and powers of polynomials with several terms stay factored,
    /// so that a denominator such as `v*Q^2` keeps its factors apart.
    fn mul(self, rhs: Self) -> Result<Self> {
        Ok(match (self, rhs) {
            (Value::Poly(a), Value::Poly(b)) if a.num_terms() <= 1 || b.num_terms() <= 1 => {
                Value::Poly(a.checked_mul(&b)?)
            }
            (a, b) => Value::Frac(a.frac().checked_mul(&b.frac())?),
        })
    }

    fn div(self, rhs: Self) -> Result<Self> {
        if let Value::Poly(b) = &rhs {
            if b.is_constant() {
                let c = b.constant_term();
                let inv = c.inverse().ok_or(AlgebraError::DivisionByZero)?;
                return Ok(match self {
                    Value::Poly(a) => Value::Poly(a.scale(&inv)),
                    Value::Frac(a) => Value::Frac(a.scale(&inv)),
                });
            }
        }
        Ok(Value::Frac(self.frac().checked_div(&rhs.frac())?))
    }

    fn neg(self) -> Self {
        match self {
            Value::Poly(a) => Value::Poly(a.negate()),
            Value::Frac(a) => Value::Frac(a.negate()),
        }
    }

    fn pow(self, e: i64) -> Result<Self> {
        Ok(match self {
            Value::Poly(a) if e >= 0 && a.num_terms() <= 1 => Value::Poly(a.pow(e as u32)),
            v => Value::Frac(v.frac().pow(e)?),
        })
    }
}

struct Parser<'a, F: Scalar> {
    src: &'a str,
    pos: usize,
    vars: Arc<[String]>,
    domain: &'a F::Domain,
}

impl<'a, F: Scalar> Parser<'a, F> {
    fn new(src: &'a str, vars: Arc<[String]>, domain: &'a F::Domain) -> Self {
        Parser {
            src,
            pos: 0,
            vars,
            domain,
        }
    }

    fn run(mut self) -> Result<Value<F>> {
        let v = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(AlgebraError::parse(self.pos, "unexpected trailing input"));
        }
        Ok(v)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Value<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?, false)?;
            } else if self.eat('-') {
                acc = acc.add(self.term()?, true)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.unary()?)?;
            } else if self.eat('/') {
                let at = self.pos;
                acc = acc.div(self.unary()?).map_err(|e| match e {
                    AlgebraError::DivisionByZero => AlgebraError::parse(at, "division by zero"),
                    other => other,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value<F>> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value<F>> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        let e: i64 = digits
            .parse()
            .map_err(|_| AlgebraError::parse(start, "expected an integer exponent"))?;
        if paren && !self.eat(')') {
            return Err(AlgebraError::parse(self.pos, "expected `)`"));
        }
        base.pow(if neg { -e } else { e })
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        &self.src[start..self.pos]
    }

    fn constant(&self, c: F) -> Value<F> {
        Value::Poly(MultiPoly::constant_in(self.vars.clone(), c))
    }

    fn atom(&mut self) -> Result<Value<F>> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::parse(self.pos, "expected `)`"));
                }
                Ok(v)
            }
            Some('[') => {
                let end = self.src[start..]
                    .find(']')
                    .map(|i| start + i + 1)
                    .ok_or_else(|| AlgebraError::parse(start, "unclosed `[`"))?;
                self.pos = end;
                let c = F::parse(&self.src[start..end], self.domain).map_err(|e| shift(e, start))?;
                Ok(self.constant(c))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let c = F::parse(digits, self.domain).map_err(|e| shift(e, start))?;
                Ok(self.constant(c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if name == "sqrt" && self.peek() == Some('(') {
                    let end = self.src[self.pos..]
                        .find(')')
                        .map(|i| self.pos + i + 1)
                        .ok_or_else(|| AlgebraError::parse(self.pos, "unclosed `sqrt(`"))?;
                    self.pos = end;
                    let c = F::parse(&self.src[start..end], self.domain).map_err(|e| shift(e, start))?;
                    return Ok(self.constant(c));
                }
                let index = self
                    .vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
                let mut exps = vec![0; self.vars.len()];
                exps[index] = 1;
                let one = F::one(self.domain);
                let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
                Ok(Value::Poly(MultiPoly::from_terms(&vars, self.domain, [(exps, one)])?))
            }
            Some(c) => Err(AlgebraError::parse(start, format!("unexpected `{c}`"))),
            None => Err(AlgebraError::parse(start, "unexpected end of input")),
        }
    }
}

fn shift(e: AlgebraError, by: usize) -> AlgebraError {
    match e {
        AlgebraError::Parse { position, message } => AlgebraError::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}
