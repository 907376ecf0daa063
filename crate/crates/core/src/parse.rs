//! Text syntax for ring elements and skew polynomials.
//!
//! A polynomial is a sum of products of atoms: integers, `u` or `u^j`, `x` or
//! `x^i`, and parenthesized sub-expressions with an optional power. Juxtaposition
//! (or `*`) is the skew product taken left to right, so `(1+u)x^2` and `2ux^3`
//! read as expected and `x u` means `x·u = θ(u)·x`.

use crate::error::{Error, Result};
use crate::ring::{ChainRingElement, RingContext};
use crate::skew_poly::SkewPoly;

pub fn parse_poly(ctx: RingContext, text: &str) -> Result<SkewPoly> {
    let mut parser = Parser {
        ctx,
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if parser.chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let value = parser.sum()?;
    if parser.pos != parser.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected '{}' at offset {}",
            parser.chars[parser.pos], parser.pos
        )));
    }
    Ok(value)
}

/// Parses an element of `R_k` such as `1+4u+u^2`.
pub fn parse_element(ctx: RingContext, text: &str) -> Result<ChainRingElement> {
    let f = parse_poly(ctx, text)?;
    match f.degree() {
        None => Ok(ctx.zero()),
        Some(0) => Ok(f.coeff(0)),
        Some(_) => Err(Error::Parse(format!("'{text}' is not a constant"))),
    }
}

struct Parser {
    ctx: RingContext,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<SkewPoly> {
        let mut total = SkewPoly::zero(self.ctx);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let term = self.product()?;
            total = if negate { &total - &term } else { &total + &term };
        }
        Ok(total)
    }

    fn product(&mut self) -> Result<SkewPoly> {
        let mut acc: Option<SkewPoly> = None;
        loop {
            if self.peek() == Some('*') && acc.is_some() {
                self.pos += 1;
            }
            let atom = match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.number()?;
                    let reduced = (v % u64::from(self.ctx.p())) as u32;
                    SkewPoly::constant(self.ctx, self.ctx.constant(reduced))
                }
                Some('u') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    SkewPoly::constant(self.ctx, self.ctx.u_pow(e))
                }
                Some('x') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    SkewPoly::x_pow(self.ctx, e)
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sum()?;
                    if self.peek() != Some(')') {
                        return Err(Error::Parse(format!("missing ')' at offset {}", self.pos)));
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    let mut power = SkewPoly::one(self.ctx);
                    for _ in 0..e {
                        power = &power * &inner;
                    }
                    power
                }
                Some(c) if acc.is_none() => {
                    return Err(Error::Parse(format!("unexpected '{c}' at offset {}", self.pos)))
                }
                None if acc.is_none() => return Err(Error::Parse("expression ends where a term was expected".into())),
                _ => break,
            };
            acc = Some(match acc {
                None => atom,
                Some(prev) => &prev * &atom,
            });
        }
        Ok(acc.expect("loop produces at least one atom"))
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let v = self.number()?;
        usize::try_from(v).map_err(|_| Error::Parse(format!("exponent {v} too large")))
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at offset {start}")));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("number '{digits}' out of range")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> RingContext {
        RingContext::new(3, 3, 2).unwrap()
    }

    #[test]
    fn parses_parenthesized_generator() {
        let c = ctx();
        let h = parse_poly(c, "x^4+(1+u+u^2)x^2-(u+u^2)x+(1+u+u^2)").unwrap();
        let expected = SkewPoly::from_ints(c, &[&[1, 1, 1], &[0, 2, 2], &[1, 1, 1], &[], &[1]]).unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn implicit_coefficients_and_products() {
        let c = ctx();
        assert_eq!(parse_poly(c, "ux^2").unwrap(), SkewPoly::monomial(c, c.u_pow(1), 2));
        assert_eq!(
            parse_poly(c, "2u^2x^4").unwrap(),
            SkewPoly::monomial(c, c.element(&[0, 0, 2]).unwrap(), 4)
        );
        assert_eq!(parse_poly(c, "x u").unwrap(), parse_poly(c, "2ux").unwrap());
        assert_eq!(
            parse_poly(c, "u(x^2-x+1)").unwrap(),
            parse_poly(c, "ux^2+2ux+u").unwrap()
        );
        assert_eq!(parse_poly(c, "5").unwrap(), parse_poly(c, "2").unwrap());
        assert_eq!(parse_poly(c, "-1").unwrap(), parse_poly(c, "2").unwrap());
        assert!(parse_poly(c, "0").unwrap().is_zero());
        assert_eq!(parse_poly(c, "(x-1)^2").unwrap(), parse_poly(c, "x^2+x+1").unwrap());
        assert_eq!(parse_poly(c, "(x+u)^0").unwrap(), SkewPoly::one(c));
    }

    #[test]
    fn display_round_trips() {
        let c = ctx();
        for text in [
            "(1+u+2u^2)x^5 + (2u+u^2)x^4 + 1",
            "ux^2 + x + 2u",
            "0",
            "(1+2u)x^3 + u^2",
        ] {
            let f = parse_poly(c, text).unwrap();
            assert_eq!(f.to_string(), text);
            assert_eq!(parse_poly(c, &f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn element_parsing() {
        let c = RingContext::new(5, 3, 4).unwrap();
        assert_eq!(parse_element(c, "1+4u+u^2").unwrap(), c.element(&[1, 4, 1]).unwrap());
        assert!(parse_element(c, "x+1").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        let c = ctx();
        for bad in ["", "x^", "(1+u", "1+", "x^2 ) ", "y", "2**x", "+"] {
            assert!(parse_poly(c, bad).is_err(), "{bad:?} should fail");
        }
    }
}
