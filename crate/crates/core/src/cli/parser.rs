//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '-'? factor ('*' factor)*
//! factor   := base ('^' natural)?
//! base     := rational | variable | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! variable := 'x' positive-integer
//! ```
//!
//! Whitespace is ignored. There is no implicit multiplication, so `x12` is
//! always the twelfth variable.

use num_bigint::BigInt;
use thiserror::Error;

use crate::polyring::Polynomial;
use crate::rational::Rational;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable x{index} at byte {position} exceeds arity {arity}")]
    VariableOutOfRange {
        index: usize,
        arity: usize,
        position: usize,
    },
    #[error("exponent at byte {position} exceeds {MAX_EXPONENT}")]
    ExponentOverflow { position: usize },
    #[error("arity must be positive")]
    ZeroArity,
}

/// Expression tree produced by the parser; variables are 1-based as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(Rational),
    Variable(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Expands the tree into a polynomial of the given arity. Variable indices
    /// must already be within range.
    pub fn to_polynomial(&self, arity: usize) -> Polynomial {
        match self {
            Expr::Literal(c) => Polynomial::constant(arity, c.clone()),
            Expr::Variable(i) => Polynomial::var(arity, i - 1).expect("index checked by parser"),
            Expr::Add(a, b) => &a.to_polynomial(arity) + &b.to_polynomial(arity),
            Expr::Sub(a, b) => &a.to_polynomial(arity) - &b.to_polynomial(arity),
            Expr::Neg(a) => -a.to_polynomial(arity),
            Expr::Mul(a, b) => &a.to_polynomial(arity) * &b.to_polynomial(arity),
            Expr::Pow(a, k) => a.to_polynomial(arity).pow(*k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, arity: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((start, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((start, Tok::Int(n)));
        } else if c == b'x' {
            i += 1;
            let digits = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if digits == i {
                return Err(ParseError::Syntax {
                    position: start,
                    message: "expected a variable index after `x`".into(),
                });
            }
            let index: usize = text[digits..i].parse().unwrap_or(usize::MAX);
            if index == 0 {
                return Err(ParseError::Syntax {
                    position: start,
                    message: "variables are numbered from x1".into(),
                });
            }
            if index > arity {
                return Err(ParseError::VariableOutOfRange {
                    index,
                    arity,
                    position: start,
                });
            }
            out.push((start, Tok::Var(index)));
        } else {
            let ch = text[start..].chars().next().unwrap_or('?');
            return Err(ParseError::Syntax {
                position: start,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.to_string(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(if negate { Expr::Neg(Box::new(acc)) } else { acc })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(k)) => {
                let k = u32::try_from(&k)
                    .ok()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or(ParseError::ExponentOverflow { position: at })?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => {
                self.pos -= 1;
                self.error("expected a nonnegative integer exponent")
            }
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.bump();
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.bump();
                            Ok(Expr::Literal(Rational::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.error("zero denominator"),
                        _ => self.error("expected a positive integer denominator"),
                    }
                } else {
                    Ok(Expr::Literal(Rational::from_int(n)))
                }
            }
            Some(Tok::Var(i)) => {
                self.bump();
                Ok(Expr::Variable(i))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Some(_) => self.error("expected a number, a variable or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` into an expression tree over `arity` variables.
pub fn parse_expr(text: &str, arity: usize) -> Result<Expr, ParseError> {
    if arity == 0 {
        return Err(ParseError::ZeroArity);
    }
    let toks = tokenize(text, arity)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse(text: &str, arity: usize) -> Result<Polynomial, ParseError> {
    Ok(parse_expr(text, arity)?.to_polynomial(arity))
}
