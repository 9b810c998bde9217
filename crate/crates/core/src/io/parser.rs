//! Recursive-descent parser for polynomial strings.
//!
//! ```text
//! expr        := ['+' | '-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := primary ('^' nat)*
//! primary     := coefficient | var | '(' expr ')'
//! coefficient := integer ('/' positive-integer)?
//! ```
//!
//! Implicit multiplication is rejected; whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
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
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: l, column: col });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Spanned {
                tok: Tok::Int(text.parse().expect("digits")),
                line: l,
                column: col,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Spanned {
                tok: Tok::Ident(text),
                line: l,
                column: col,
            });
            continue;
        }
        return Err(Error::Parse {
            line: l,
            column: col,
            expected: vec!["number".into(), "variable".into(), "operator".into()],
        });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let s = &self.toks[self.pos];
        Err(Error::Parse {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let mut base = self.primary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            match self.bump().tok {
                Tok::Int(n) => {
                    let e = u32::try_from(n).map_err(|_| Error::Schema("exponent too large".into()))?;
                    base = base.pow(e);
                }
                _ => {
                    self.pos -= 1;
                    return self.fail(&["natural number"]);
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut c = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(d) if !d.is_zero() => {
                            self.bump();
                            c /= Rational::from_integer(d);
                        }
                        _ => return self.fail(&["positive integer"]),
                    }
                }
                self.no_implicit_product()?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => {
                self.bump();
                let p = Polynomial::var_named(self.ring, &name).ok_or(Error::UnknownVariable(name))?;
                self.no_implicit_product()?;
                Ok(p)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail(&["')'", "'+'", "'-'", "'*'", "'^'"]);
                }
                self.bump();
                self.no_implicit_product()?;
                Ok(inner)
            }
            _ => self.fail(&["number", "variable", "'('"]),
        }
    }

    fn no_implicit_product(&self) -> Result<()> {
        match self.peek() {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => self.fail(&["'*'", "'+'", "'-'", "'^'", "')'", "end of input"]),
            _ => Ok(()),
        }
    }
}

/// Parses `src` as a polynomial over `ring`.
pub fn parse_polynomial(src: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'+'", "'-'", "'*'", "end of input"]);
    }
    Ok(out)
}
