//! Expression parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := number | ident | '(' expr ')'
//! number := integer ('/' integer)?
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is ignored between tokens. Juxtaposition (`2x`, `x y`) is rejected.

use num_bigint::BigInt;

use super::field::Field;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(v), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring<K>,
}

impl<'a, K: Field> Parser<'a, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            message: message.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Poly<K>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<K>> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<K>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let p = self.unary()?;
                Ok(-&p)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<K>> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let off = self.offset();
            match self.peek().cloned() {
                Some(Tok::Minus) => return Err(Error::NegativeExponent { offset: off }),
                Some(Tok::Int(v)) => {
                    self.pos += 1;
                    let e: u32 = v.try_into().map_err(|_| Error::Syntax {
                        offset: off,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<K>> {
        let off = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            den = d;
                        }
                        _ => return self.err("expected integer denominator"),
                    }
                }
                let c = self.ring.field().from_ratio(&num, &den).map_err(|_| Error::Syntax {
                    offset: off,
                    message: format!("invalid rational literal {num}/{den}"),
                })?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => Err(Error::UndeclaredVariable { name, offset: off }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression over the variables of `ring`.
pub fn parse_poly<K: Field>(text: &str, ring: &Ring<K>) -> Result<Poly<K>> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected token (implicit multiplication is not allowed)");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Rationals;
    use crate::poly::ring::{Monomial, MonomialOrder, RingCtx};
    use num_rational::BigRational;

    fn ring(vars: &[&str]) -> Ring<Rationals> {
        RingCtx::new(Rationals, vars, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn sum_of_variable_and_square() {
        let r = ring(&["x1", "x2", "x3", "x4", "x5"]);
        let p = parse_poly("x1 + x5^2", &r).unwrap();
        let terms = p.terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0, Monomial::from_exps(&[0, 0, 0, 0, 2]));
        assert_eq!(terms[1].0, Monomial::from_exps(&[1, 0, 0, 0, 0]));
        assert!(terms.iter().all(|(_, c)| *c == BigRational::from_integer(1.into())));
    }

    #[test]
    fn zero_and_rationals() {
        let r = ring(&["x", "y"]);
        assert!(parse_poly("0", &r).unwrap().is_zero());
        let p = parse_poly("3/2*x^2*y - 7", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.terms()[0].0, Monomial::from_exps(&[2, 1]));
        assert_eq!(
            p.terms()[0].1,
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(p.terms()[1].1, BigRational::from_integer((-7).into()));
        assert_eq!(p.to_string(), "3/2*x^2*y - 7");
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            parse_poly("x+*y", &r),
            Err(Error::Syntax {
                offset: 2,
                message: "expected a number, variable or `(`".into()
            })
        );
        assert!(matches!(parse_poly("2x", &r), Err(Error::Syntax { offset: 1, .. })));
        assert_eq!(
            parse_poly("x + q", &r),
            Err(Error::UndeclaredVariable {
                name: "q".into(),
                offset: 4
            })
        );
        assert_eq!(
            parse_poly("x^-2", &r),
            Err(Error::NegativeExponent { offset: 2 })
        );
        assert!(matches!(parse_poly("(x", &r), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("1/0", &r), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn print_round_trip() {
        let r = ring(&["x", "y", "z"]);
        for s in ["-x^3 + 2*y*z - 1/3", "0", "-1", "x*y*z^4 - x"] {
            let p = parse_poly(s, &r).unwrap();
            let q = parse_poly(&p.to_string(), &r).unwrap();
            assert_eq!(p, q);
        }
    }
}
