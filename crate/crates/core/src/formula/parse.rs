use thiserror::Error;

use super::{ClassicalSequent, Formula, IntSequent, Multiset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    /// Character offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    Unexpected { found: String, expected: &'static str },
    #[error("`*` is reserved and cannot be used in input formulas")]
    ReservedStar,
    #[error("equivalence is not part of the language")]
    Equivalence,
    #[error("expected exactly one succedent formula, found {0}")]
    SuccedentArity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bot,
    Star,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    Comma,
    Turnstile,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::Bot => "`bot`".into(),
            Tok::Star => "`*`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Turnstile => "`=>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos, kind| ParseError { pos, kind };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            'a'..='z' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push((start, if s == "bot" { Tok::Bot } else { Tok::Ident(s) }));
                continue;
            }
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Imp,
            '⊥' => Tok::Bot,
            '⇒' => Tok::Turnstile,
            '↔' => Tok::Iff,
            '*' | '∗' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Imp
            }
            '=' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Turnstile
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Tok::Iff
            }
            other => return Err(err(start, ParseErrorKind::UnexpectedChar(other))),
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((chars.len(), Tok::Eof));
    Ok(out)
}

/// Result of [`parse`]: a bare formula or a sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Formula(Formula),
    Sequent(ClassicalSequent),
}

/// Recursive-descent parser over the ASCII grammar.
///
/// Precedence from tightest: `~`, `&`, `|`, `->`. `&` and `|` associate to
/// the left, `->` to the right.
pub struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    allow_star: bool,
}

impl Parser {
    pub fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
            allow_star: false,
        })
    }

    /// Accept the placeholder `*`. Only for reading back proofs this
    /// library produced.
    pub fn allow_star(mut self) -> Parser {
        self.allow_star = true;
        self
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Tok::Iff => ParseErrorKind::Equivalence,
            Tok::Star if !self.allow_star => ParseErrorKind::ReservedStar,
            t => ParseErrorKind::Unexpected {
                found: t.describe(),
                expected,
            },
        };
        ParseError {
            pos: self.pos(),
            kind,
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name.into()))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Star if self.allow_star => {
                self.bump();
                Ok(Formula::Star)
            }
            Tok::LParen => {
                self.bump();
                let f = self.imp()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(f)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn list(&mut self) -> Result<Vec<Formula>, ParseError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Tok::Turnstile | Tok::Eof) {
            return Ok(out);
        }
        out.push(self.imp()?);
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.imp()?);
        }
        Ok(out)
    }

    pub fn formula(mut self) -> Result<Formula, ParseError> {
        let f = self.imp()?;
        self.expect_eof()?;
        Ok(f)
    }

    pub fn classical_sequent(mut self) -> Result<ClassicalSequent, ParseError> {
        let ante = self.list()?;
        if *self.peek() != Tok::Turnstile {
            return Err(self.unexpected("`,` or `=>`"));
        }
        self.bump();
        let succ = self.list()?;
        self.expect_eof()?;
        Ok(ClassicalSequent::new(ante, succ))
    }

    pub fn int_sequent(self) -> Result<IntSequent, ParseError> {
        let end = self.toks.last().map_or(0, |t| t.0);
        let s = self.classical_sequent()?;
        s.to_intuitionistic().ok_or(ParseError {
            pos: end,
            kind: ParseErrorKind::SuccedentArity(s.succ.len()),
        })
    }

    pub fn any(self) -> Result<Parsed, ParseError> {
        if self.toks.iter().any(|t| t.1 == Tok::Turnstile) {
            self.classical_sequent().map(Parsed::Sequent)
        } else {
            self.formula().map(Parsed::Formula)
        }
    }
}

/// Parses a formula or, if the text contains `=>`, a sequent.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    Parser::new(text)?.any()
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    Parser::new(text)?.formula()
}

pub fn parse_classical_sequent(text: &str) -> Result<ClassicalSequent, ParseError> {
    Parser::new(text)?.classical_sequent()
}

pub fn parse_int_sequent(text: &str) -> Result<IntSequent, ParseError> {
    Parser::new(text)?.int_sequent()
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl std::str::FromStr for Multiset {
    type Err = ParseError;

    /// Comma-separated formulas; the empty string is the empty multiset.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s)?;
        let v = p.list()?;
        p.expect_eof()?;
        Ok(v.into())
    }
}
