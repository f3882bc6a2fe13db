//! Region expressions.
//!
//! ```text
//! statement := expr (pred expr)?
//! pred      := "<<" | "C" | "<=" | "O" | "=="
//! expr      := term ("|" term)*
//! term      := unary ("&" unary)*
//! unary     := "~" unary | atom
//! atom      := "(" bound "," bound ")" | "(" expr ")" | "empty"
//!            | "tail" "(" rat "," rat "," expr ")" | "ltail" "(" rat "," rat "," expr ")"
//! ```

use super::rational::{self as rat, Bound, Q};
use super::region::Region;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Region(Region),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Region(r) => write!(f, "{r}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Bar,
    Amp,
    Tilde,
    WellInside,
    Leq,
    Eq,
    Number(Q),
    Inf(bool),
    Word(String),
    End,
}

struct Lexer;

impl Lexer {
    fn run(src: &str) -> Result<Vec<(Tok, usize)>> {
        let chars: Vec<char> = src.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let (tok, len) = match c {
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                ',' => (Tok::Comma, 1),
                '|' => (Tok::Bar, 1),
                '&' => (Tok::Amp, 1),
                '~' => (Tok::Tilde, 1),
                '<' if two == "<<" => (Tok::WellInside, 2),
                '<' if two == "<=" => (Tok::Leq, 2),
                '=' if two == "==" => (Tok::Eq, 2),
                '-' | '+' | '0'..='9' => {
                    let start = i;
                    let mut j = i + 1;
                    while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '/') {
                        j += 1;
                    }
                    let text: String = chars[start..j].iter().collect();
                    let tok = match text.as_str() {
                        "-inf" => Tok::Inf(false),
                        "inf" | "+inf" => Tok::Inf(true),
                        t => match rat::parse(t.strip_prefix('+').unwrap_or(t)) {
                            Some(q) => Tok::Number(q),
                            None => return Err(parse_error(col, format!("bad number `{text}`"))),
                        },
                    };
                    (tok, j - start)
                }
                c if c.is_ascii_alphabetic() => {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                        j += 1;
                    }
                    let word: String = chars[i..j].iter().collect();
                    let tok = if word == "inf" { Tok::Inf(true) } else { Tok::Word(word) };
                    (tok, j - i)
                }
                other => return Err(parse_error(col, format!("unexpected character `{other}`"))),
            };
            out.push((tok, col));
            i += len;
        }
        out.push((Tok::End, chars.len() + 1));
        Ok(out)
    }
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(parse_error(self.col(), format!("expected {what}")))
        }
    }

    fn statement(&mut self) -> Result<Value> {
        let left = self.expr()?;
        let pred = match self.peek() {
            Tok::WellInside => Some(Region::well_inside as fn(&Region, &Region) -> bool),
            Tok::Leq => Some(Region::leq as fn(&Region, &Region) -> bool),
            Tok::Eq => Some((|a: &Region, b: &Region| a == b) as fn(&Region, &Region) -> bool),
            Tok::Word(w) if w == "C" => Some(Region::contact as fn(&Region, &Region) -> bool),
            Tok::Word(w) if w == "O" => Some(Region::overlaps as fn(&Region, &Region) -> bool),
            _ => None,
        };
        let value = match pred {
            Some(f) => {
                self.bump();
                let right = self.expr()?;
                Value::Bool(f(&left, &right))
            }
            None => Value::Region(left),
        };
        if *self.peek() != Tok::End {
            return Err(parse_error(self.col(), "unexpected trailing input"));
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<Region> {
        let mut r = self.term()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            r = r.join(&self.term()?);
        }
        Ok(r)
    }

    fn term(&mut self) -> Result<Region> {
        let mut r = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            r = r.meet(&self.unary()?);
        }
        Ok(r)
    }

    fn unary(&mut self) -> Result<Region> {
        if *self.peek() == Tok::Tilde {
            self.bump();
            return Ok(self.unary()?.complement());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Region> {
        let col = self.col();
        match self.peek().clone() {
            Tok::LParen => {
                let is_interval = matches!(self.peek_at(1), Tok::Number(_) | Tok::Inf(_))
                    && *self.peek_at(2) == Tok::Comma;
                self.bump();
                if is_interval {
                    let a = self.bound()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let b = self.bound()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Region::interval(a, b).map_err(|e| parse_error(col, e.to_string()))
                } else {
                    let r = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(r)
                }
            }
            Tok::Word(w) if w == "empty" => {
                self.bump();
                Ok(Region::zero())
            }
            Tok::Word(w) if w == "tail" || w == "ltail" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let p = self.number()?;
                self.expect(Tok::Comma, "`,`")?;
                let t = self.number()?;
                self.expect(Tok::Comma, "`,`")?;
                let pattern = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                let built = if w == "tail" {
                    Region::right_tail(&p, &t, &pattern)
                } else {
                    Region::left_tail(&p, &t, &pattern)
                };
                built.map_err(|e| parse_error(col, e.to_string()))
            }
            Tok::End => Err(parse_error(col, "unexpected end of input")),
            other => Err(parse_error(col, format!("unexpected token {other:?}"))),
        }
    }

    fn number(&mut self) -> Result<Q> {
        match self.bump() {
            Tok::Number(q) => Ok(q),
            _ => Err(parse_error(self.toks[self.pos.saturating_sub(1)].1, "expected a rational")),
        }
    }

    fn bound(&mut self) -> Result<Bound> {
        let col = self.col();
        match self.bump() {
            Tok::Number(q) => Ok(Bound::Finite(q)),
            Tok::Inf(true) => Ok(Bound::PosInf),
            Tok::Inf(false) => Ok(Bound::NegInf),
            _ => Err(parse_error(col, "expected an endpoint")),
        }
    }
}

/// Evaluates a region expression or a predicate between two expressions.
pub fn evaluate(src: &str) -> Result<Value> {
    let toks = Lexer::run(src)?;
    Parser { toks, pos: 0 }.statement()
}

/// Parses an expression that must denote a region.
pub fn parse_region(src: &str) -> Result<Region> {
    match evaluate(src)? {
        Value::Region(r) => Ok(r),
        Value::Bool(_) => Err(parse_error(1, "expected a region, found a predicate")),
    }
}
