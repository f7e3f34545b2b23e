//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Binding strength, tightest first: `~`, `*`, `&`, `|`, then `=>` and
//! `->` (right associative, same level), then `<=>`. The biconditional is
//! desugared on the spot into `(a => b) & (b => a)`.

use std::sync::Arc;

use thiserror::Error;

use super::{BinOp, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown connective `{symbol}` at offset {pos}")]
    UnknownConnective { pos: usize, symbol: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(Arc<str>),
    Zero,
    One,
    Not,
    Bin(BinOp),
    Iff,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = pos;
            while let Some(&(i, d)) = it.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = i + d.len_utf8();
                    it.next();
                } else {
                    break;
                }
            }
            toks.push((pos, Tok::Ident(Arc::from(&text[pos..end]))));
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = it.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = i + d.len_utf8();
                    it.next();
                } else {
                    break;
                }
            }
            let tok = match &text[pos..end] {
                "0" => Tok::Zero,
                "1" => Tok::One,
                other => {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: format!("`{other}` is not a constant or identifier"),
                    })
                }
            };
            toks.push((pos, tok));
            continue;
        }
        let rest = &text[pos..];
        let (tok, len) = if rest.starts_with("<=>") {
            (Tok::Iff, 3)
        } else if rest.starts_with("=>") {
            (Tok::Bin(BinOp::Imp), 2)
        } else if rest.starts_with("->") {
            (Tok::Bin(BinOp::WeakImp), 2)
        } else {
            let single = match c {
                '~' | '¬' => Some(Tok::Not),
                '&' | '∧' => Some(Tok::Bin(BinOp::And)),
                '|' | '∨' => Some(Tok::Bin(BinOp::Or)),
                '*' | '∗' => Some(Tok::Bin(BinOp::Fuse)),
                '⇒' => Some(Tok::Bin(BinOp::Imp)),
                '→' => Some(Tok::Bin(BinOp::WeakImp)),
                '⇔' => Some(Tok::Iff),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            match single {
                Some(t) => (t, c.len_utf8()),
                None => {
                    let symbol: String = rest
                        .chars()
                        .take_while(|d| !d.is_whitespace() && !d.is_ascii_alphanumeric() && *d != '(' && *d != ')')
                        .collect();
                    return Err(ParseError::UnknownConnective { pos, symbol });
                }
            }
        };
        toks.push((pos, tok));
        for _ in 0..rest[..len].chars().count() {
            it.next();
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if self.peek() == Some(&Tok::Iff) {
            self.at += 1;
            let rhs = self.iff()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.left_assoc(0)?;
        match self.peek() {
            Some(Tok::Bin(op @ (BinOp::Imp | BinOp::WeakImp))) => {
                let op = *op;
                self.at += 1;
                let rhs = self.implication()?;
                Ok(Formula::bin(op, lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    /// Levels 0, 1, 2 are `|`, `&`, `*`.
    fn left_assoc(&mut self, level: usize) -> Result<Formula, ParseError> {
        const LEVELS: [BinOp; 3] = [BinOp::Or, BinOp::And, BinOp::Fuse];
        if level == LEVELS.len() {
            return self.unary();
        }
        let mut lhs = self.left_assoc(level + 1)?;
        while self.peek() == Some(&Tok::Bin(LEVELS[level])) {
            self.at += 1;
            let rhs = self.left_assoc(level + 1)?;
            lhs = Formula::bin(LEVELS[level], lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Ident(name) => Ok(Formula::Var(name)),
            Tok::Zero => Ok(Formula::Zero),
            Tok::One => Ok(Formula::One),
            Tok::LParen => {
                let inner = self.iff()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            _ => {
                self.at -= 1;
                self.err("expected a formula")
            }
        }
    }
}

/// Parses a formula written in the ASCII syntax (Unicode aliases allowed).
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let f = p.iff()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}
