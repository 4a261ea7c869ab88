//! Parsing and rendering of GF(3) polynomials.
//!
//! Two interchangeable textual forms are supported:
//!
//! * human form: a signed sum of terms such as `x^5+x^2+x-1`, coefficients
//!   drawn from `{-1, 0, 1}` on output (any integer coefficients accepted on
//!   input, reduced mod 3), highest degree first, no spaces;
//! * machine form: `t:` followed by the trit string lowest degree first, e.g.
//!   `t:211001` for the same polynomial.
//!
//! `parse` accepts both; rendering uses the human form, with `t:` strings
//! available via [`TritPoly::trit_string`].

use super::TritPoly;
use crate::error::{Error, Result};

/// Render in human form with coefficients in `{-1, 0, 1}` (2 prints as a
/// subtracted term), highest degree first; the zero polynomial is `"0"`.
pub(super) fn render_poly(p: &TritPoly) -> String {
    render_poly_var(p, 'x')
}

pub(super) fn render_poly_var(p: &TritPoly, var: char) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        // Trit 2 renders as -1.
        let negative = c == 2;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        if i == 0 {
            out.push('1');
        } else {
            out.push(var);
            if i > 1 {
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
    }
    out
}

/// Degrees above this are rejected by the parser to keep memory bounded.
const MAX_PARSE_DEGREE: usize = 1_000_000;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    var: char,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_owned(),
        }
    }

    /// Parse a decimal number, reducing mod `modulo` on the fly so that
    /// arbitrarily long digit strings cannot overflow.
    fn number_mod(&mut self, modulo: u64) -> Result<u64> {
        let start = self.pos;
        let mut value = 0u64;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = (value * 10 + (b - b'0') as u64) % modulo;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(value)
    }

    fn number_capped(&mut self, cap: usize) -> Result<usize> {
        let start = self.pos;
        let mut value = 0usize;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as usize))
                .filter(|&v| v <= cap)
                .ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("exponent exceeds the supported maximum {cap}"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an exponent"));
        }
        Ok(value)
    }

    /// One term: `coeff`, `coeff var [^exp]`, or `var [^exp]`.
    /// Returns (coefficient trit, degree).
    fn term(&mut self) -> Result<(u8, usize)> {
        let mut coeff: Option<u8> = None;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = Some(self.number_mod(3)? as u8);
        }
        self.skip_ws();
        let var_len = self.var.len_utf8();
        let at_var = self.bytes[self.pos..]
            .get(..var_len)
            .is_some_and(|s| std::str::from_utf8(s) == Ok(self.var.to_string().as_str()));
        if !at_var {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.err("expected a coefficient or the variable")),
            };
        }
        self.pos += var_len;
        self.skip_ws();
        let mut deg = 1usize;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            deg = self.number_capped(MAX_PARSE_DEGREE)?;
        }
        Ok((coeff.unwrap_or(1), deg))
    }
}

/// Parse either textual form with `x` as the variable.
pub fn parse_poly(s: &str) -> Result<TritPoly> {
    parse_poly_var(s, 'x')
}

/// Parse either textual form with a caller-chosen variable letter.
pub fn parse_poly_var(s: &str, var: char) -> Result<TritPoly> {
    let trimmed = s.trim();
    if let Some(trits) = trimmed.strip_prefix("t:") {
        return parse_trits(trits, s.len() - trimmed.len() + 2);
    }
    let mut cur = Cursor {
        bytes: s.as_bytes(),
        pos: 0,
        var,
    };
    let mut coeffs: Vec<i64> = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                1i64
            }
            Some(b'-') => {
                cur.pos += 1;
                -1i64
            }
            None if !first => break,
            Some(_) if first => 1,
            Some(_) => return Err(cur.err("expected '+' or '-' between terms")),
            None => return Err(cur.err("empty input")),
        };
        cur.skip_ws();
        let (c, deg) = cur.term()?;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += sign * c as i64;
        first = false;
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(TritPoly::from_coeffs(coeffs))
}

fn parse_trits(trits: &str, offset: usize) -> Result<TritPoly> {
    if trits.is_empty() {
        return Err(Error::Parse {
            pos: offset,
            msg: "empty trit string after 't:'".to_owned(),
        });
    }
    let mut coeffs = Vec::with_capacity(trits.len());
    for (i, ch) in trits.char_indices() {
        match ch {
            '0' | '1' | '2' => coeffs.push((ch as u8 - b'0') as i64),
            _ => {
                return Err(Error::Parse {
                    pos: offset + i,
                    msg: format!("invalid trit {ch:?}; expected 0, 1, or 2"),
                })
            }
        }
    }
    Ok(TritPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    #[test]
    fn renders_signed_compact_form() {
        let p = TritPoly::from_coeffs([2, 1, 1, 0, 0, 1]);
        assert_eq!(p.to_string(), "x^5+x^2+x-1");
        assert_eq!(TritPoly::from_coeffs([2, 2, 1]).to_string(), "x^2-x-1");
        assert_eq!(TritPoly::zero().to_string(), "0");
        assert_eq!(TritPoly::from_coeffs([2]).to_string(), "-1");
        assert_eq!(TritPoly::x().to_string(), "x");
    }

    #[test]
    fn parses_human_form() {
        assert_eq!(
            parse_poly("x^5+x^2+x-1").unwrap(),
            TritPoly::from_coeffs([2, 1, 1, 0, 0, 1])
        );
        assert_eq!(parse_poly("-x+1").unwrap(), TritPoly::from_coeffs([1, 2]));
        assert_eq!(parse_poly("2x^2+2").unwrap(), TritPoly::from_coeffs([2, 0, 2]));
        assert_eq!(parse_poly("0").unwrap(), TritPoly::zero());
        assert_eq!(parse_poly(" x ^ 2 + 1 ").unwrap(), parse_poly("x^2+1").unwrap());
        // Repeated terms accumulate, multi-digit coefficients reduce mod 3.
        assert_eq!(parse_poly("x+x+x").unwrap(), TritPoly::zero());
        assert_eq!(parse_poly("7x^2").unwrap(), parse_poly("x^2").unwrap());
    }

    #[test]
    fn parses_machine_form_and_round_trips() {
        let p = parse_poly("t:211001").unwrap();
        assert_eq!(p.to_string(), "x^5+x^2+x-1");
        assert_eq!(p.trit_string(), "211001");
        assert_eq!(parse_poly("t:0").unwrap(), TritPoly::zero());
        // Trailing zeros normalize away, so the round trip is canonical.
        assert_eq!(parse_poly("t:1200").unwrap().trit_string(), "12");
        for s in ["x^17-x^9+x-1", "-x^3+x^2-1", "1"] {
            let p = parse_poly(s).unwrap();
            let t = format!("t:{}", p.trit_string());
            assert_eq!(parse_poly(&t).unwrap(), p);
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn alternate_variable() {
        let p = parse_poly_var("y^2-y", 'y').unwrap();
        assert_eq!(p, TritPoly::from_coeffs([0, 2, 1]));
        assert!(parse_poly_var("x^2", 'y').is_err());
        assert_eq!(render_poly_var(&p, 'y'), "y^2-y");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "  ", "x^", "x^x", "^3", "x+", "+", "x y", "t:", "t:012x", "3*x"] {
            let r = parse_poly(bad);
            assert!(r.is_err(), "expected parse failure for {bad:?}");
        }
        // Error positions are byte offsets into the input.
        match parse_poly("x^2+q").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 4),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_oversized_exponent() {
        assert!(parse_poly("x^1000001").is_err());
        assert!(parse_poly("x^999999999999999999999").is_err());
    }
}
