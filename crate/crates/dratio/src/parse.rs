//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := integer | integer '/' positive-integer | variable | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit: `2x` is a syntax error, `2*x` is
//! required. The optional leading `-` lets the canonical printing of a
//! polynomial with a negative leading coefficient parse back.

use num::{BigInt, Signed, Zero};
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let start = lx.pos;
            let c = lx.src[lx.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    lx.pos += 1;
                }
                b'+' => {
                    lx.pos += 1;
                    out.push((Tok::Plus, start));
                }
                b'-' => {
                    lx.pos += 1;
                    out.push((Tok::Minus, start));
                }
                b'*' => {
                    lx.pos += 1;
                    out.push((Tok::Star, start));
                }
                b'/' => {
                    lx.pos += 1;
                    out.push((Tok::Slash, start));
                }
                b'^' => {
                    lx.pos += 1;
                    out.push((Tok::Caret, start));
                }
                b'(' => {
                    lx.pos += 1;
                    out.push((Tok::LParen, start));
                }
                b')' => {
                    lx.pos += 1;
                    out.push((Tok::RParen, start));
                }
                b'0'..=b'9' => {
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Int(text.parse().unwrap()), start));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.src.len()
                        && (lx.src[lx.pos].is_ascii_alphanumeric() || lx.src[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), start));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos: start,
                        expected: format!("unexpected character `{}`", c as char),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected: format!("expected {expected}"),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut negate_first = false;
        if self.peek() == Some(&Tok::Minus) {
            self.idx += 1;
            negate_first = true;
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.idx += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.idx += 1;
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp = u32::try_from(&n).map_err(|_| ParseError::Syntax {
                        pos,
                        expected: "exponent too large".to_string(),
                    })?;
                    Ok(base.pow(exp))
                }
                _ => Err(ParseError::Syntax {
                    pos,
                    expected: "expected natural-number exponent".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.idx += 1;
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() || d.is_negative() {
                                return Err(ParseError::Syntax {
                                    pos: dpos,
                                    expected: "positive-integer denominator".to_string(),
                                });
                            }
                            Ok(MultiPoly::constant(self.vars, Rational::new(n, d)))
                        }
                        _ => Err(ParseError::Syntax {
                            pos: dpos,
                            expected: "expected positive-integer denominator".to_string(),
                        }),
                    }
                } else {
                    Ok(MultiPoly::constant(
                        self.vars,
                        Rational::from_integer(n),
                    ))
                }
            }
            Some(Tok::Ident(name)) => {
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::variable(self.vars, i)),
                    None => Err(ParseError::UnknownVariable { pos, name }),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(inner)
            }
            _ => Err(ParseError::Syntax {
                pos,
                expected: "expected integer, variable, or `(`".to_string(),
            }),
        }
    }
}

/// Parse `text` into a canonical polynomial over the given variables.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<MultiPoly, ParseError> {
    let toks = Lexer::tokenize(text)?;
    let mut parser = Parser {
        toks,
        idx: 0,
        vars,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.idx != parser.toks.len() {
        return Err(parser.err("end of input"));
    }
    Ok(p)
}

/// Parse a rational scalar such as `3`, `-5/2`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let p = parse_poly(text, &[])?;
    p.constant_value().ok_or(ParseError::Syntax {
        pos: 0,
        expected: "expected a rational constant".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_named_examples() {
        let vs = vars(&["x", "y"]);
        let p = parse_poly("x^3 + y", &vs).unwrap();
        let mut terms: Vec<(Vec<u32>, Rational)> =
            p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        terms.sort();
        assert_eq!(
            terms,
            vec![
                (vec![0, 1], Rational::one()),
                (vec![3, 0], Rational::one()),
            ]
        );

        let z = parse_poly("0", &vs).unwrap();
        assert!(z.is_zero());

        let q = parse_poly("2*x*y - 1/2", &vs).unwrap();
        let mut terms: Vec<(Vec<u32>, Rational)> =
            q.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        terms.sort();
        assert_eq!(
            terms,
            vec![
                (vec![0, 0], -Rational::new(1.into(), 2.into())),
                (vec![1, 1], Rational::from_integer(2.into())),
            ]
        );
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        let vs = vars(&["x", "y"]);
        assert!(matches!(
            parse_poly("2x", &vs),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn unknown_variable_is_reported_with_position() {
        let vs = vars(&["x", "y"]);
        match parse_poly("x + w", &vs) {
            Err(ParseError::UnknownVariable { pos, name }) => {
                assert_eq!(pos, 4);
                assert_eq!(name, "w");
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let vs = vars(&["x", "y"]);
        for text in [
            "x^3 + y",
            "2*x*y - 1/2",
            "-x + 3",
            "-1/2",
            "0",
            "x^2 - 2*x*y + y^2 - 7",
        ] {
            let p = parse_poly(text, &vs).unwrap();
            let printed = p.to_string();
            let q = parse_poly(&printed, &vs).unwrap();
            assert_eq!(p, q, "round trip failed for `{text}` -> `{printed}`");
        }
    }

    #[test]
    fn parenthesized_expressions() {
        let vs = vars(&["x", "y"]);
        let p = parse_poly("(x + y)^2", &vs).unwrap();
        let q = parse_poly("x^2 + 2*x*y + y^2", &vs).unwrap();
        assert_eq!(p, q);
    }
}
