//! Expression parser for the `factor` subcommand.
//!
//! The polynomial grammar accepted by [`terncode::poly::parse_poly`] covers a
//! single sum of monomials, which is fine for pasting a finished polynomial
//! but painful for inputs that are naturally written as a formula, such as
//! `(x+1)^122 + x^122 + 1`.  This module layers the usual arithmetic
//! expression grammar on top and evaluates it exactly in GF(3)[x]:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)*
//! atom   := '(' expr ')' | 'x' | integer
//! ```
//!
//! Whitespace is ignored between tokens.  Exponents are capped so a typo like
//! `x^99999999` fails fast instead of allocating a gigantic polynomial; the
//! cap matches the plain polynomial parser's limit.

use terncode::poly::TritPoly;
use terncode::{Error, Result};

/// Largest exponent (and largest intermediate degree) the evaluator accepts.
const MAX_EXPR_DEGREE: usize = 1_000_000;

/// Parse and evaluate an expression, returning the reduced polynomial.
pub fn eval_expr(text: &str) -> Result<TritPoly> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    /// Consume `want` if it is the next non-space byte.
    fn eat(&mut self, want: u8) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<TritPoly> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.eat(b'+');
            self.term()?
        };
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

    fn term(&mut self) -> Result<TritPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
            self.check_degree(&acc)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TritPoly> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            let exp = self.integer("exponent")?;
            let degree = base.degree().unwrap_or(0);
            if degree.saturating_mul(exp as usize) > MAX_EXPR_DEGREE {
                return Err(self.error(format!(
                    "result degree exceeds the supported maximum {MAX_EXPR_DEGREE}"
                )));
            }
            base = base.pow(exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TritPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(TritPoly::x())
            }
            Some(b) if b.is_ascii_digit() => {
                let value = self.integer("constant")?;
                Ok(TritPoly::constant((value % 3) as i64))
            }
            Some(b) => Err(self.error(format!(
                "expected '(', 'x', or a digit, found {:?}",
                char::from(b)
            ))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self, what: &str) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected {what}")));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match text.parse::<u64>() {
            Ok(v) if v as usize <= MAX_EXPR_DEGREE => Ok(v),
            _ => {
                self.pos = start;
                Err(self.error(format!(
                    "{what} exceeds the supported maximum {MAX_EXPR_DEGREE}"
                )))
            }
        }
    }

    fn check_degree(&self, poly: &TritPoly) -> Result<()> {
        if poly.degree().unwrap_or(0) > MAX_EXPR_DEGREE {
            Err(self.error(format!(
                "result degree exceeds the supported maximum {MAX_EXPR_DEGREE}"
            )))
        } else {
            Ok(())
        }
    }
}
