//! Parser for the polynomial input grammar:
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coef ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := ('x' | 'y') ['^' nat]
//! coef   := int ['/' nat]
//! ```
//!
//! Whitespace is insignificant. There are no parentheses.

use std::fmt;

use equimult_core::poly::{BiPoly, Monomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A parse failure at a 1-based character position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Var(v) => write!(f, "variable '{v}'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((pos, Tok::Num(chars[start..i].iter().collect())));
                continue;
            }
            'x' | 'y' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            c if c.is_alphabetic() => {
                return Err(ParseError {
                    position: pos,
                    message: format!("unknown variable '{c}' (only x and y are allowed)"),
                })
            }
            c => {
                return Err(ParseError {
                    position: pos,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<BiPoly, ParseError> {
        let mut sign = Rational::one();
        if *self.peek() == Tok::Minus {
            self.bump();
            sign = -sign;
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            let sign = match self.peek() {
                Tok::Plus => Rational::one(),
                Tok::Minus => -Rational::one(),
                Tok::End => return Ok(acc),
                other => return self.error(format!("expected '+', '-' or end of input, found {other}")),
            };
            self.bump();
            acc = &acc + &self.term()?.scale(&sign);
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let (coef, mut mono) = match self.peek() {
            Tok::Num(_) => {
                let c = self.coef()?;
                if *self.peek() != Tok::Star {
                    return Ok(BiPoly::constant(c));
                }
                self.bump();
                (c, self.factor()?)
            }
            Tok::Var(_) => (Rational::one(), self.factor()?),
            other => return self.error(format!("expected a number or x/y, found {other}")),
        };
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            mono = Monomial::new(mono.x + f.x, mono.y + f.y);
        }
        Ok(BiPoly::monomial(coef, mono.x, mono.y))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        let var = match self.peek() {
            Tok::Var(v) => *v,
            Tok::Num(_) => return self.error("coefficient must come first in a term"),
            other => return self.error(format!("expected x or y, found {other}")),
        };
        self.bump();
        let mut exp = 1;
        if *self.peek() == Tok::Caret {
            self.bump();
            exp = match self.peek() {
                Tok::Num(n) => match n.parse::<u32>() {
                    Ok(e) => e,
                    Err(_) => return self.error(format!("exponent {n} is too large")),
                },
                Tok::Minus => return self.error("negative exponents are not allowed"),
                other => return self.error(format!("expected an exponent, found {other}")),
            };
            self.bump();
        }
        Ok(if var == 'x' {
            Monomial::new(exp, 0)
        } else {
            Monomial::new(0, exp)
        })
    }

    fn coef(&mut self) -> Result<Rational, ParseError> {
        let Tok::Num(n) = self.bump() else {
            unreachable!("coef() is only called on a number");
        };
        let num: BigInt = n.parse().expect("lexer yields digits only");
        if *self.peek() != Tok::Slash {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let den: BigInt = match self.peek() {
            Tok::Num(d) => d.parse().expect("lexer yields digits only"),
            other => return self.error(format!("expected a denominator, found {other}")),
        };
        if den.is_zero() {
            return self.error("zero denominator");
        }
        self.bump();
        Ok(Rational::new(num, den))
    }
}

pub fn parse_poly(src: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    p.poly()
}

/// Parses a rational constant such as `-3/2`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let p = parse_poly(src)?;
    match p.total_degree() {
        None | Some(0) => Ok(p.constant_term()),
        Some(_) => Err(ParseError {
            position: 1,
            message: format!("expected a rational constant, found {p}"),
        }),
    }
}
