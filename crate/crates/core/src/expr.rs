//! Parser for polynomial expressions in `i`, `r` and `y`.
//!
//! Accepts integers, the three symbols, `+ - * / ^`, parentheses and
//! implicit multiplication (`2y`, `3 r (r+8)`). Division is only allowed by
//! nonzero constants.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{MultiPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::jfraction::IndexPoly;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

fn error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((at, ch)) = chars.next() {
        let token = match ch {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = String::from(ch);
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                Token::Num(digits.parse().expect("ascii digits"))
            }
            'i' | 'r' | 'y' => Token::Sym(ch),
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(error(at, format!("unexpected character '{other}'"))),
        };
        tokens.push((at, token));
    }
    Ok(tokens)
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<IndexPoly> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            let negate = match op {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            acc = if negate { &acc - &rhs } else { &acc + &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IndexPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let at = self.here();
                    let divisor = self.unary()?;
                    let value = divisor
                        .as_constant()
                        .and_then(|p| p.as_constant())
                        .filter(|q| !q.is_zero())
                        .ok_or_else(|| error(at, "can only divide by a nonzero number"))?;
                    acc = acc.scale(&value.recip());
                }
                Some(Token::Num(_) | Token::Sym(_) | Token::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<IndexPoly> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<IndexPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some(Token::Num(n)) => {
                let exp = n.to_u32().filter(|&e| e <= 64).ok_or_else(|| error(at, "exponent too large"))?;
                Ok(base.pow(exp))
            }
            _ => Err(error(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<IndexPoly> {
        let at = self.here();
        match self.bump() {
            Some(Token::Num(n)) => Ok(IndexPoly::constant(MultiPoly::from(n))),
            Some(Token::Sym('i')) => Ok(IndexPoly::index()),
            Some(Token::Sym('r')) => Ok(IndexPoly::constant(MultiPoly::var(Var::R))),
            Some(Token::Sym(_)) => Ok(IndexPoly::constant(MultiPoly::var(Var::Y))),
            Some(Token::Open) => {
                let inner = self.expr()?;
                let close = self.here();
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(error(close, "expected ')'")),
                }
            }
            Some(_) => Err(error(at, "expected a number, a symbol or '('")),
            None => Err(error(at, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `i`, `r` and `y`.
pub fn parse_index_poly(input: &str) -> Result<IndexPoly> {
    let mut parser = Parser { tokens: tokenize(input)?, pos: 0, end: input.len() };
    if parser.tokens.is_empty() {
        return Err(error(0, "empty expression"));
    }
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(error(parser.here(), "unexpected token"));
    }
    Ok(value)
}

/// Parses a polynomial in `r` and `y`; the index symbol `i` is rejected.
pub fn parse_poly(input: &str) -> Result<MultiPoly> {
    let value = parse_index_poly(input)?;
    value.as_constant().ok_or_else(|| {
        let at = input.find('i').unwrap_or(0);
        error(at, "the index symbol 'i' is not allowed here")
    })
}

/// Parses a rational number such as `3`, `-2` or `1/2`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    parse_poly(input)?.as_constant().ok_or_else(|| error(0, "expected a number"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(s: &str) -> String {
        parse_poly(s).unwrap().to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(show("2*y+1"), "2*y + 1");
        assert_eq!(show("(2y+1)^2"), "4*y^2 + 4*y + 1");
        assert_eq!(show("3 r (r+8)+16"), "3*r^2 + 24*r + 16");
        assert_eq!(show("2 (3 r^2+24 r+16)"), "6*r^2 + 48*r + 32");
        assert_eq!(show("-r + 4"), "-r + 4");
        assert_eq!(show("r/2"), "1/2*r");
        assert_eq!(show("1 - -y"), "y + 1");
        assert_eq!(show("0"), "0");
    }

    #[test]
    fn index_polynomials() {
        let beta = parse_index_poly("i*r*y*(y+1)").unwrap();
        assert_eq!(beta.eval(3).to_string(), "3*r*y^2 + 3*r*y");
        let alpha = parse_index_poly("(i+1)*(2y+1)").unwrap();
        assert_eq!(alpha.eval(0).to_string(), "2*y + 1");
        assert_eq!(alpha.eval(2).to_string(), "6*y + 3");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("2*x"), Err(error(2, "unexpected character 'x'")));
        assert!(matches!(parse_poly("(r+1"), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(parse_poly("r/y"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_poly("r/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("r^y"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_poly("i+1"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1 +"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_poly("1 )"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), crate::algebra::rational(1, 2));
        assert!(parse_rational("r").is_err());
    }
}
