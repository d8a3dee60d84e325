//! Generator expressions.
//!
//! ```text
//! list   := expr (',' expr)*
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' UINT)*
//! atom   := INT | 't' | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use parafrob_core::{Polynomial, QuasiPolynomial};
use thiserror::Error;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            Expr::Int(n) => Polynomial::from_int(n.clone()),
            Expr::Var => Polynomial::var(),
            Expr::Neg(e) => -e.to_polynomial(),
            Expr::Add(a, b) => &a.to_polynomial() + &b.to_polynomial(),
            Expr::Sub(a, b) => &a.to_polynomial() - &b.to_polynomial(),
            Expr::Mul(a, b) => &a.to_polynomial() * &b.to_polynomial(),
            Expr::Pow(a, e) => a.to_polynomial().pow(*e as usize),
        }
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        match self {
            Expr::Int(n) => n.clone(),
            Expr::Var => t.clone(),
            Expr::Neg(e) => -e.eval(t),
            Expr::Add(a, b) => a.eval(t) + b.eval(t),
            Expr::Sub(a, b) => a.eval(t) - b.eval(t),
            Expr::Mul(a, b) => a.eval(t) * b.eval(t),
            Expr::Pow(a, e) => a.eval(t).pow(*e),
        }
    }
}

/// One parsed generator with the source text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorExpr {
    pub source: String,
    /// Byte offset of the expression in the full input.
    pub offset: usize,
    pub expr: Expr,
}

impl GeneratorExpr {
    pub fn polynomial(&self) -> Polynomial {
        self.expr.to_polynomial()
    }

    pub fn to_quasi_polynomial(&self) -> QuasiPolynomial {
        QuasiPolynomial::from_polynomial(self.polynomial())
            .expect("integer polynomials are integer-valued")
    }

    /// The value when the expression does not involve `t`.
    pub fn as_constant(&self) -> Option<BigInt> {
        self.polynomial().as_constant().map(|c| c.to_integer())
    }
}

impl fmt::Display for GeneratorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Var => "'t'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits parse");
            out.push((start, Tok::Int(n)));
            continue;
        }
        let tok = match c {
            b't' => Tok::Var,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                let hint = match ch {
                    '/' => "; division is not allowed in generators",
                    _ => "",
                };
                return Err(ParseError::new(i, format!("unexpected character '{ch}'{hint}")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(self.offset(), format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let at = self.offset();
            let Tok::Int(n) = self.peek().clone() else {
                return Err(self.unexpected("a nonnegative integer exponent"));
            };
            self.bump();
            let e = n
                .to_u32()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(at, format!("exponent {n} exceeds {MAX_EXPONENT}")))?;
            acc = Expr::Pow(Box::new(acc), e);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Var => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, 't' or '('")),
        }
    }
}

/// Parses a comma-separated list of generator expressions.
pub fn parse_generators(text: &str) -> Result<Vec<GeneratorExpr>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut out = Vec::new();
    loop {
        let start = p.offset();
        let expr = p.expr()?;
        let end = p.offset();
        out.push(GeneratorExpr {
            source: text[start..end].trim().to_string(),
            offset: start,
            expr,
        });
        match p.peek() {
            Tok::Comma => {
                p.bump();
            }
            Tok::End => return Ok(out),
            _ => return Err(p.unexpected("',' or end of input")),
        }
    }
}

/// Parses a single expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut list = parse_generators(text)?;
    if list.len() != 1 {
        return Err(ParseError::new(list[1].offset, "expected a single expression"));
    }
    Ok(list.remove(0).expr)
}

/// Positive integer constants, for the oracle.
pub fn parse_integers(text: &str) -> Result<Vec<u64>, ParseError> {
    parse_generators(text)?
        .iter()
        .map(|g| {
            g.as_constant()
                .filter(|c| !c.is_zero())
                .and_then(|c| c.to_u64())
                .ok_or_else(|| ParseError::new(g.offset, format!("'{}' is not a positive integer", g.source)))
        })
        .collect()
}
