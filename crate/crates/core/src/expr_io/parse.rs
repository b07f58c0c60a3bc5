//! Recursive-descent polynomial parser.
//!
//! Grammar (implicit multiplication is rejected):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)*
//! atom   := INT | INT '/' INT | IDENT | '(' expr ')'
//! ```
//!
//! A rational literal `p/q` must not contain whitespace.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::polyring::{Polynomial, Rational, Vars};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    BadExponent(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::BadExponent(m) => write!(f, "bad exponent: {m}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ratio(p, q) => write!(f, "`{p}/{q}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
}

impl Lexer {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: column + self.col_offset, kind }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            let col = self.pos + 1;
            if c.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '0'..='9' => {
                    let num: BigInt = self.digits().parse().expect("digit run");
                    if self.chars.get(self.pos) == Some(&'/') {
                        self.pos += 1;
                        if !self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                            return Err(self.err(
                                self.pos + 1,
                                ParseErrorKind::Syntax("rational literal needs a denominator `p/q`".into()),
                            ));
                        }
                        let den: BigInt = self.digits().parse().expect("digit run");
                        if den.is_zero() {
                            return Err(self.err(col, ParseErrorKind::Syntax("zero denominator".into())));
                        }
                        out.push((Tok::Ratio(num, den), col));
                    } else {
                        out.push((Tok::Int(num), col));
                    }
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < self.chars.len()
                        && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                    {
                        self.pos += 1;
                    }
                    out.push((Tok::Ident(self.chars[start..self.pos].iter().collect()), col));
                    continue;
                }
                '/' => {
                    return Err(self.err(
                        col,
                        ParseErrorKind::Syntax("division is only allowed inside a rational literal `p/q`".into()),
                    ))
                }
                other => return Err(self.err(col, ParseErrorKind::Syntax(format!("unexpected character `{other}`")))),
            };
            self.pos += 1;
            out.push((tok, col));
        }
        out.push((Tok::End, self.chars.len() + 1));
        Ok(out)
    }
}

struct Parser<'v> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'v Vars,
    line: usize,
    col_offset: usize,
}

impl<'v> Parser<'v> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.col() + self.col_offset, kind }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let e = match self.peek().clone() {
                Tok::Int(n) => n.to_u32().ok_or_else(|| {
                    self.err(ParseErrorKind::BadExponent(format!("exponent {n} is too large")))
                })?,
                Tok::Minus => return Err(self.err(ParseErrorKind::BadExponent("negative exponent".into()))),
                Tok::Ratio(..) => return Err(self.err(ParseErrorKind::BadExponent("non-integer exponent".into()))),
                other => {
                    return Err(self.err(ParseErrorKind::BadExponent(format!(
                        "expected a non-negative integer literal, found {other}"
                    ))))
                }
            };
            self.bump();
            base = base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Polynomial::constant(self.vars, Rational::from_integer(n)))
            }
            Tok::Ratio(p, q) => {
                self.bump();
                Ok(Polynomial::constant(self.vars, Rational::new(p, q)))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    self.bump();
                    Ok(Polynomial::var_at(self.vars, i))
                }
                None => Err(self.err(ParseErrorKind::UnknownVariable(name))),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    let found = self.peek().clone();
                    return Err(self.err(ParseErrorKind::Syntax(format!("expected `)`, found {found}"))));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(self.err(ParseErrorKind::Syntax(format!("expected an operand, found {other}")))),
        }
    }
}

/// Parses `text` as a polynomial over `vars`; errors carry line 1.
pub fn parse_polynomial(text: &str, vars: &Vars) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, vars, 1, 0)
}

/// Parses with error positions shifted to `line` and `column_offset`.
pub fn parse_polynomial_at(
    text: &str,
    vars: &Vars,
    line: usize,
    column_offset: usize,
) -> Result<Polynomial, ParseError> {
    let lexer = Lexer { chars: text.chars().collect(), pos: 0, line, col_offset: column_offset };
    let toks = lexer.tokenize()?;
    let mut parser = Parser { toks, pos: 0, vars, line, col_offset: column_offset };
    let p = parser.expr()?;
    if *parser.peek() != Tok::End {
        let found = parser.peek().clone();
        return Err(parser.err(ParseErrorKind::Syntax(format!("unexpected {found}"))));
    }
    Ok(p)
}

/// True if `name` is a valid variable identifier.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
