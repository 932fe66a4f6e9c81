//! Text syntax for polynomials.
//!
//! `3/2*t_ab^2*t_c - t_abc + 4`: terms joined by `+`/`-`, factors joined by
//! `*`, integer or rational coefficients, `^` for exponents. Variable names
//! are the ring's variable names. The printer in [`super::Polynomial::to_text`]
//! emits exactly this syntax.

use super::{Coef, Monomial, Polynomial, TraceRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("zero denominator in coefficient")]
    ZeroDenominator,
    #[error("exponent out of range in `{0}`")]
    ExponentOutOfRange(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Num(n) => n.to_string(),
            Token::Ident(s) => s.clone(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Caret => "^".into(),
            Token::Slash => "/".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Token>, PolyParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Num(digits.parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(name));
            }
            other => return Err(PolyParseError::UnexpectedChar(other)),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    ring: &'a Arc<TraceRing>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, PolyParseError> {
        let t = self.tokens.get(self.pos).cloned().ok_or(PolyParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn parse_sum(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut terms: Vec<(Monomial, Coef)> = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some(Token::Plus) => {
                self.pos += 1;
            }
            Some(Token::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        loop {
            let (m, c) = self.parse_term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                None => break,
                Some(Token::Plus) => {
                    self.pos += 1;
                    negate = false;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    negate = true;
                }
                Some(t) => return Err(PolyParseError::UnexpectedToken(t.describe())),
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn parse_term(&mut self) -> Result<(Monomial, Coef), PolyParseError> {
        let mut coef: Coef = BigRational::one();
        let mut exps = vec![0u16; self.ring.num_vars()];
        loop {
            match self.next()? {
                Token::Num(n) => {
                    let mut value = BigRational::from_integer(n);
                    if matches!(self.peek(), Some(Token::Slash)) {
                        self.pos += 1;
                        match self.next()? {
                            Token::Num(d) => {
                                if d.is_zero() {
                                    return Err(PolyParseError::ZeroDenominator);
                                }
                                value /= BigRational::from_integer(d);
                            }
                            t => return Err(PolyParseError::UnexpectedToken(t.describe())),
                        }
                    }
                    coef *= value;
                }
                Token::Ident(name) => {
                    let idx = self
                        .ring
                        .var_names()
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| PolyParseError::UnknownVariable(name.clone()))?;
                    let mut exp: u32 = 1;
                    if matches!(self.peek(), Some(Token::Caret)) {
                        self.pos += 1;
                        match self.next()? {
                            Token::Num(e) => {
                                exp = u32::try_from(&e).map_err(|_| {
                                    PolyParseError::ExponentOutOfRange(format!("{}^{}", name, e))
                                })?;
                            }
                            t => return Err(PolyParseError::UnexpectedToken(t.describe())),
                        }
                    }
                    let total = exps[idx] as u32 + exp;
                    exps[idx] = u16::try_from(total).map_err(|_| {
                        PolyParseError::ExponentOutOfRange(format!("{}^{}", name, total))
                    })?;
                }
                t => return Err(PolyParseError::UnexpectedToken(t.describe())),
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exps(exps), coef))
    }
}

pub fn parse_polynomial(
    text: &str,
    ring: &Arc<TraceRing>,
) -> Result<Polynomial, PolyParseError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(PolyParseError::UnexpectedEnd);
    }
    let mut parser = Parser { tokens, ring, pos: 0 };
    parser.parse_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn ring3() -> Arc<TraceRing> {
        TraceRing::for_rank(3)
    }

    #[test]
    fn parse_and_print() {
        let r = ring3();
        let p = parse_polynomial("3/2*t_ab^2*t_c - t_abc + 4", &r).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "3/2*t_ab^2*t_c - t_abc + 4");
    }

    #[test]
    fn roundtrip_is_identity() {
        let r = ring3();
        for text in [
            "3/2*t_ab^2*t_c - t_abc + 4",
            "-t_a*t_b + t_ab",
            "t_a^2 - 2",
            "7",
            "-1/3",
            "0",
            "t_a*t_bc + t_b*t_ac + t_c*t_ab - t_a*t_b*t_c",
        ] {
            let p = parse_polynomial(text, &r).unwrap();
            let q = parse_polynomial(&p.to_string(), &r).unwrap();
            assert_eq!(p, q);
            let via_lex = parse_polynomial(&p.to_text(&MonomialOrder::lex()), &r).unwrap();
            assert_eq!(p, via_lex);
        }
    }

    #[test]
    fn merges_repeated_factors() {
        let r = ring3();
        let p = parse_polynomial("t_a*t_a*t_a", &r).unwrap();
        assert_eq!(p, parse_polynomial("t_a^3", &r).unwrap());
        let q = parse_polynomial("2*t_a*3*t_a", &r).unwrap();
        assert_eq!(q, parse_polynomial("6*t_a^2", &r).unwrap());
    }

    #[test]
    fn like_terms_collapse() {
        let r = ring3();
        let p = parse_polynomial("t_a + t_a - 2*t_a", &r).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn errors() {
        let r = ring3();
        assert_eq!(
            parse_polynomial("t_ba", &r),
            Err(PolyParseError::UnknownVariable("t_ba".into()))
        );
        assert_eq!(
            parse_polynomial("t_acb", &r),
            Err(PolyParseError::UnknownVariable("t_acb".into()))
        );
        assert_eq!(parse_polynomial("1/0", &r), Err(PolyParseError::ZeroDenominator));
        assert_eq!(parse_polynomial("", &r), Err(PolyParseError::UnexpectedEnd));
        assert_eq!(parse_polynomial("t_a +", &r), Err(PolyParseError::UnexpectedEnd));
        assert_eq!(
            parse_polynomial("t_a $ t_b", &r),
            Err(PolyParseError::UnexpectedChar('$'))
        );
        assert!(matches!(
            parse_polynomial("t_a t_b", &r),
            Err(PolyParseError::UnexpectedToken(_))
        ));
        assert!(matches!(
            parse_polynomial("t_a^-1", &r),
            Err(PolyParseError::UnexpectedToken(_))
        ));
    }
}
