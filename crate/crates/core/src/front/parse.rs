use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::symbolic::{GeneratorSet, NCPolynomial, Scalar};

/// Position-tagged parse failure; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownIdentifier(String),
    MalformedRational(String),
    ZeroDenominator,
    UnbalancedParenthesis,
    UnexpectedCharacter(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    ExponentTooLarge(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier `{s}`"),
            ParseErrorKind::MalformedRational(s) => write!(f, "malformed rational `{s}`"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
            ParseErrorKind::UnbalancedParenthesis => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::UnexpectedCharacter(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            ParseErrorKind::ExponentTooLarge(s) => write!(f, "exponent `{s}` is too large"),
        }
    }
}

/// Largest accepted exponent in `ident^n`.
const MAX_EXPONENT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Int(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Slash => "/".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Equals => "=".into(),
        }
    }
}

/// Parses `expr` or `expr = expr` (read as `lhs - rhs`).
///
/// ```text
/// expr     := ("+" | "-")* term (("+" | "-") ("+" | "-")* term)*
/// term     := rational ("*"? factor ("*" factor)*)? | factor ("*" factor)*
/// factor   := ident ("^" nat)? | "(" expr ")"
/// rational := int ("/" posint)?
/// ```
pub fn parse_poly(text: &str, gens: &Arc<GeneratorSet>) -> Result<NCPolynomial, ParseError> {
    parse_poly_at(text, gens, 1, 1)
}

/// Like [`parse_poly`], reporting positions as if `text` began at `line:column`.
pub fn parse_poly_at(
    text: &str,
    gens: &Arc<GeneratorSet>,
    line: usize,
    column: usize,
) -> Result<NCPolynomial, ParseError> {
    let toks = lex(text, line, column)?;
    let mut p = Parser {
        toks,
        pos: 0,
        gens,
        end: (line, column + text.chars().count()),
        open: Vec::new(),
    };
    let lhs = p.expr()?;
    let out = if p.eat(&Tok::Equals) {
        let rhs = p.expr()?;
        let mut d = lhs;
        d.add_scaled(&rhs, &-Scalar::one());
        d
    } else {
        lhs
    };
    if let Some((t, l, c)) = p.peek_full() {
        let kind = if *t == Tok::RParen {
            ParseErrorKind::UnbalancedParenthesis
        } else {
            ParseErrorKind::UnexpectedToken {
                found: t.text(),
                expected: "`+`, `-`, `*` or end of input",
            }
        };
        return Err(ParseError { line: l, column: c, kind });
    }
    Ok(out)
}

fn lex(text: &str, line: usize, column: usize) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = column + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), line, col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '.') {
                let mut end = i;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '.') {
                    end += 1;
                }
                return Err(ParseError {
                    line,
                    column: col,
                    kind: ParseErrorKind::MalformedRational(chars[start..end].iter().collect()),
                });
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), line, col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Equals,
            other => {
                return Err(ParseError {
                    line,
                    column: col,
                    kind: ParseErrorKind::UnexpectedCharacter(other),
                })
            }
        };
        out.push((tok, line, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    gens: &'a Arc<GeneratorSet>,
    end: (usize, usize),
    open: Vec<(usize, usize)>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn peek_full(&self) -> Option<(&Tok, usize, usize)> {
        self.toks.get(self.pos).map(|(t, l, c)| (t, *l, *c))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.end)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.here();
        ParseError { line, column, kind }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(Tok::RParen) if self.open.is_empty() => self.error(ParseErrorKind::UnbalancedParenthesis),
            Some(t) => self.error(ParseErrorKind::UnexpectedToken {
                found: t.text(),
                expected,
            }),
            None => match self.open.last() {
                Some(&(line, column)) => ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::UnbalancedParenthesis,
                },
                None => self.error(ParseErrorKind::UnexpectedEnd { expected }),
            },
        }
    }

    fn signs(&mut self) -> bool {
        let mut neg = false;
        loop {
            if self.eat(&Tok::Minus) {
                neg = !neg;
            } else if !self.eat(&Tok::Plus) {
                return neg;
            }
        }
    }

    fn expr(&mut self) -> Result<NCPolynomial, ParseError> {
        let mut acc = NCPolynomial::zero(self.gens);
        let neg = self.signs();
        let t = self.term()?;
        acc.add_scaled(&t, &sign(neg));
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) | Some(Tok::Minus) => self.signs(),
                _ => return Ok(acc),
            };
            let t = self.term()?;
            acc.add_scaled(&t, &sign(neg));
        }
    }

    fn term(&mut self) -> Result<NCPolynomial, ParseError> {
        let mut acc = if let Some(Tok::Int(_)) = self.peek() {
            let c = self.rational()?;
            if self.eat(&Tok::Star) || self.starts_factor() {
                self.factor()?.scale(&c)
            } else {
                return Ok(NCPolynomial::constant(self.gens, c));
            }
        } else {
            self.factor()?
        };
        while self.eat(&Tok::Star) {
            let f = self.factor()?;
            acc = acc.mul_unchecked(&f);
        }
        if self.starts_factor() {
            return Err(self.unexpected("`*` between factors"));
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::LParen))
    }

    fn rational(&mut self) -> Result<Scalar, ParseError> {
        let (l, c) = self.here();
        let num = match self.peek() {
            Some(Tok::Int(s)) => s.clone(),
            _ => return Err(self.unexpected("a number")),
        };
        self.pos += 1;
        let num: BigInt = num.parse().expect("lexer yields digits");
        if !self.eat(&Tok::Slash) {
            return Ok(Scalar::from(num));
        }
        let den = match self.peek() {
            Some(Tok::Int(s)) => s.clone(),
            _ => {
                let found = self.peek().map(Tok::text).unwrap_or_default();
                return Err(ParseError {
                    line: l,
                    column: c,
                    kind: ParseErrorKind::MalformedRational(format!("{num}/{found}")),
                });
            }
        };
        let (dl, dc) = self.here();
        self.pos += 1;
        let den: BigInt = den.parse().expect("lexer yields digits");
        if den == BigInt::from(0) {
            return Err(ParseError {
                line: dl,
                column: dc,
                kind: ParseErrorKind::ZeroDenominator,
            });
        }
        Ok(Scalar::from(num) / Scalar::from(den))
    }

    fn factor(&mut self) -> Result<NCPolynomial, ParseError> {
        let base = match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let g = self
                    .gens
                    .index_of(&name)
                    .ok_or_else(|| self.error(ParseErrorKind::UnknownIdentifier(name.clone())))?;
                self.pos += 1;
                NCPolynomial::generator(self.gens, g)
            }
            Some(Tok::LParen) => {
                let at = self.here();
                self.pos += 1;
                self.open.push(at);
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(match self.peek() {
                        None => ParseError {
                            line: at.0,
                            column: at.1,
                            kind: ParseErrorKind::UnbalancedParenthesis,
                        },
                        Some(_) => self.unexpected("`)`"),
                    });
                }
                self.open.pop();
                return Ok(inner);
            }
            _ => return Err(self.unexpected("a generator, number or `(`")),
        };
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let exp = match self.peek() {
            Some(Tok::Int(s)) => s.clone(),
            _ => return Err(self.unexpected("an exponent")),
        };
        let e: u32 = match exp.parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(self.error(ParseErrorKind::ExponentTooLarge(exp))),
        };
        self.pos += 1;
        let mut acc = NCPolynomial::one(self.gens);
        for _ in 0..e {
            acc = acc.mul_unchecked(&base);
        }
        Ok(acc)
    }
}

fn sign(neg: bool) -> Scalar {
    if neg {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}
