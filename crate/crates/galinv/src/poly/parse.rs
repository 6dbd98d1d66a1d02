//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! sign   := '+' | '-'
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := ident ('^' uint)?
//! coeff  := uint ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. A sign in front of a term negates it, which
//! also covers negative coefficients produced by the canonical formatter.

use thiserror::Error;

use super::{Monomial, Polynomial};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

struct Lexer<'a> {
    text: &'a str,
    tokens: Vec<(Token, usize)>,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, PolyParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            b'-' => {
                tokens.push((Token::Minus, i));
                i += 1;
            }
            b'*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            b'^' => {
                tokens.push((Token::Caret, i));
                i += 1;
            }
            b'/' => {
                tokens.push((Token::Slash, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((Token::Number(text[start..i].to_string()), start));
            }
            b if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((Token::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(PolyParseError {
                    position: i,
                    message: format!("unexpected character {:?}", bytes[i] as char),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn var_index(&self, name: &str) -> Result<usize, PolyParseError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| self.error(format!("unknown variable {name:?}")))
    }

    fn parse_uint(&mut self, what: &str) -> Result<String, PolyParseError> {
        match self.bump() {
            Some(Token::Number(n)) => Ok(n),
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    /// coeff := uint ('/' uint)?  — the sign is handled at term level.
    fn parse_coeff(&mut self) -> Result<Rational, PolyParseError> {
        let at = self.here();
        let numer = self.parse_uint("a number")?;
        let literal = if self.peek() == Some(&Token::Slash) {
            self.bump();
            let denom = self.parse_uint("a denominator")?;
            format!("{numer}/{denom}")
        } else {
            numer
        };
        Rational::parse(&literal).map_err(|e| PolyParseError {
            position: at,
            message: e.reason,
        })
    }

    /// factor := ident ('^' uint)?
    fn parse_factor(&mut self, exps: &mut [u32]) -> Result<(), PolyParseError> {
        match self.bump() {
            Some(Token::Ident(name)) => {
                let idx = self.var_index(&name)?;
                let power: u32 = if self.peek() == Some(&Token::Caret) {
                    self.bump();
                    let at = self.here();
                    self.parse_uint("an exponent")?
                        .parse()
                        .map_err(|_| PolyParseError {
                            position: at,
                            message: "exponent out of range".into(),
                        })?
                } else {
                    1
                };
                exps[idx] += power;
                Ok(())
            }
            _ => Err(self.error("expected a variable")),
        }
    }

    fn parse_term(&mut self) -> Result<(Monomial, Rational), PolyParseError> {
        let mut exps = vec![0u32; self.vars.len()];
        let coeff = match self.peek() {
            Some(Token::Number(_)) => self.parse_coeff()?,
            _ => {
                self.parse_factor(&mut exps)?;
                Rational::one()
            }
        };
        while self.peek() == Some(&Token::Star) {
            self.bump();
            self.parse_factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn parse_poly(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut poly = Polynomial::zero(self.vars);
        let mut negate = match self.peek() {
            Some(Token::Plus) => {
                self.bump();
                false
            }
            Some(Token::Minus) => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let (m, c) = self.parse_term()?;
            let signed = if negate { -c } else { c };
            poly = poly.add(&Polynomial::from_terms(self.vars, vec![(m, signed)]));
            match self.bump() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected '+', '-' or end of input"));
                }
            }
        }
        Ok(poly)
    }
}

pub(super) fn parse_polynomial(
    text: &str,
    vars: &[String],
) -> Result<Polynomial, PolyParseError> {
    let lexer = Lexer {
        text,
        tokens: lex(text)?,
    };
    if lexer.tokens.is_empty() {
        return Err(PolyParseError {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        tokens: lexer.tokens,
        pos: 0,
        end: lexer.text.len(),
        vars,
    };
    parser.parse_poly()
}
