//! Polynomial expression grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | 'x' INT | '(' expr ')'
//! ```
//!
//! `^` binds tightest, so `-x1^2` is `-(x1^2)`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(String),
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
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {}", n),
        Tok::Var(v) => format!("identifier '{}'", v),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, column);
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
            out.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            let n: BigInt = s.parse().expect("digits only");
            out.push(Token {
                tok: Tok::Int(n),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Var(s),
                line: tl,
                column: tc,
            });
            continue;
        }
        return Err(Error::Parse {
            line: tl,
            column: tc,
            message: format!("unexpected character '{}'", c),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: String) -> Error {
        Error::Parse {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
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
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match &t.tok {
            Tok::Int(k) => match k.to_u32() {
                Some(k) => Ok(base.pow(k)),
                None => Err(Self::error_at(&t, format!("exponent {} is too large", k))),
            },
            other => Err(Self::error_at(
                &t,
                format!(
                    "exponent must be a non-negative integer, found {}",
                    describe(other)
                ),
            )),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match t.tok {
            Tok::Int(ref num) => {
                let mut value = Rational::from_integer(num.clone());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    match d.tok {
                        Tok::Int(ref den) if !den.is_zero() => {
                            value = Rational::new(num.clone(), den.clone());
                        }
                        Tok::Int(_) => return Err(Self::error_at(&d, "zero denominator".into())),
                        ref other => {
                            return Err(Self::error_at(
                                &d,
                                format!(
                                    "expected a denominator after '/', found {}",
                                    describe(other)
                                ),
                            ))
                        }
                    }
                }
                Ok(Polynomial::constant(self.nvars, value))
            }
            Tok::Var(ref name) => {
                let index = name
                    .strip_prefix('x')
                    .filter(|d| {
                        !d.is_empty()
                            && d.bytes().all(|b| b.is_ascii_digit())
                            && !d.starts_with('0')
                    })
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= self.nvars);
                match index {
                    Some(i) => Ok(Polynomial::var(self.nvars, i - 1)),
                    None => Err(Self::error_at(
                        &t,
                        format!("unknown variable '{}' (expected x1..x{})", name, self.nvars),
                    )),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(Self::error_at(
                        &close,
                        format!("expected ')', found {}", describe(&close.tok)),
                    ));
                }
                Ok(inner)
            }
            ref other => Err(Self::error_at(
                &t,
                format!(
                    "expected a number, variable or '(', found {}",
                    describe(other)
                ),
            )),
        }
    }
}

/// Parses an expression in `x1..xn` into an exact polynomial.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    let end = p.peek();
    if end.tok != Tok::End {
        return Err(Parser::error_at(
            end,
            format!("unexpected {} after expression", describe(&end.tok)),
        ));
    }
    Ok(poly)
}
