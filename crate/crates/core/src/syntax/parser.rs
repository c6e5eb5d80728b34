//! Lexer and recursive-descent parser for program and theory text.
//!
//! Both modes share one statement grammar:
//!
//! ```text
//! statement ::= formula [ ":-" formula { "," formula } ] "." | ":-" formula { "," formula } "."
//! formula   ::= imp [ "<->" imp ]
//! imp       ::= disj [ "->" imp ]
//! disj      ::= conj { "|" conj }
//! conj      ::= unary { "&" unary }
//! unary     ::= "not" unary | "K" unary | primary
//! primary   ::= atom | "#bot" | "#top" | "(" formula ")"
//! ```
//!
//! In program mode every statement must then fit the rule fragment.

use super::{Formula, Program, Rule, Signature, Theory};
use crate::error::{Error, Position, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Know,
    Not,
    Pipe,
    Comma,
    Amp,
    Arrow,
    Iff,
    If,
    Dot,
    LParen,
    RParen,
    Bot,
    Top,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::Know => "`K`".into(),
            Tok::Not => "`not`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::If => "`:-`".into(),
            Tok::Dot => "`.`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bot => "`#bot`".into(),
            Tok::Top => "`#top`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Position,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    while i < chars.len() {
        let c = chars[i];
        let pos = Position { line, column: col };
        let lexical = |message: String| Error::Lexical { pos, message };

        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }

        let next = chars.get(i + 1).copied();
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '.' => (Tok::Dot, 1),
            ',' => (Tok::Comma, 1),
            '|' => (Tok::Pipe, 1),
            '&' => (Tok::Amp, 1),
            ':' if next == Some('-') => (Tok::If, 2),
            '-' if next == Some('>') => (Tok::Arrow, 2),
            '<' if next == Some('-') && chars.get(i + 2) == Some(&'>') => (Tok::Iff, 3),
            '#' => {
                let word: String =
                    chars[i + 1..].iter().take_while(|c| c.is_ascii_alphanumeric()).collect();
                match word.as_str() {
                    "bot" => (Tok::Bot, 4),
                    "top" => (Tok::Top, 4),
                    _ => return Err(lexical(format!("unknown directive `#{word}`"))),
                }
            }
            c if c.is_ascii_alphabetic() => {
                let word: String = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .collect();
                let len = word.chars().count();
                let tok = if word == "K" {
                    Tok::Know
                } else if word == "not" {
                    Tok::Not
                } else if c.is_ascii_lowercase() {
                    Tok::Ident(word)
                } else {
                    return Err(Error::UnexpectedToken {
                        pos,
                        message: format!("unknown token `{word}` (atoms start with a lowercase letter)"),
                    });
                };
                (tok, len)
            }
            other => return Err(lexical(format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, pos });
        i += len;
        col += len;
    }
    out.push(Token { tok: Tok::Eof, pos: Position { line, column: col } });
    Ok(out)
}

struct Statement {
    pos: Position,
    head: Option<Formula>,
    body: Option<Vec<Formula>>,
}

impl Statement {
    fn into_formula(self) -> Formula {
        match self.body {
            None => self.head.unwrap_or(Formula::Bottom),
            Some(body) => Formula::implies(
                Formula::conjunction(body),
                self.head.unwrap_or(Formula::Bottom),
            ),
        }
    }
}

struct Parser<'s> {
    tokens: Vec<Token>,
    at: usize,
    sig: &'s mut Signature,
}

impl<'s> Parser<'s> {
    fn new(text: &str, sig: &'s mut Signature) -> Result<Self> {
        Ok(Parser { tokens: lex(text)?, at: 0, sig })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        let t = self.peek();
        if t.tok == Tok::RParen {
            return Error::Unbalanced { pos: t.pos, message: "`)` without matching `(`".into() };
        }
        Error::UnexpectedToken {
            pos: t.pos,
            message: format!("expected {expected}, found {}", t.tok.describe()),
        }
    }

    fn statements(&mut self) -> Result<Vec<Statement>> {
        let mut out = Vec::new();
        while self.peek().tok != Tok::Eof {
            out.push(self.statement()?);
        }
        Ok(out)
    }

    fn statement(&mut self) -> Result<Statement> {
        let pos = self.peek().pos;
        let head = if matches!(self.peek().tok, Tok::If | Tok::Dot) {
            None
        } else {
            Some(self.formula()?)
        };
        let body = if self.eat(&Tok::If) {
            let mut items = vec![self.formula()?];
            while self.eat(&Tok::Comma) {
                items.push(self.formula()?);
            }
            Some(items)
        } else {
            None
        };
        if head.is_none() && body.is_none() {
            return Err(self.unexpected("a formula or rule"));
        }
        if !self.eat(&Tok::Dot) {
            return Err(self.unexpected("`.`"));
        }
        Ok(Statement { pos, head, body })
    }

    fn formula(&mut self) -> Result<Formula> {
        let left = self.implication()?;
        if self.eat(&Tok::Iff) {
            let right = self.implication()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn implication(&mut self) -> Result<Formula> {
        let left = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let right = self.implication()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Tok::Amp) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat(&Tok::Know) {
            return Ok(Formula::know(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::atom(self.sig.intern(name)))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if !self.eat(&Tok::RParen) {
                    return Err(Error::Unbalanced {
                        pos: t.pos,
                        message: format!(
                            "`(` is never closed (found {} at {})",
                            self.peek().tok.describe(),
                            self.peek().pos
                        ),
                    });
                }
                Ok(inner)
            }
            _ => Err(self.unexpected("an atom, `not`, `K`, `#bot`, `#top` or `(`")),
        }
    }
}

/// Parses theory text. Atoms of `sig_hint` come first in the signature,
/// followed by new atoms in first-mention order.
pub fn parse_theory(text: &str, sig_hint: Option<&Signature>) -> Result<Theory> {
    let mut sig = sig_hint.cloned().unwrap_or_default();
    let statements = Parser::new(text, &mut sig)?.statements()?;
    let formulas = statements.into_iter().map(Statement::into_formula).collect();
    Ok(Theory::new(formulas, sig))
}

pub fn parse_program(text: &str) -> Result<Program> {
    parse_program_with(text, None)
}

pub fn parse_program_with(text: &str, sig_hint: Option<&Signature>) -> Result<Program> {
    let mut sig = sig_hint.cloned().unwrap_or_default();
    let statements = Parser::new(text, &mut sig)?.statements()?;
    let mut rules = Vec::with_capacity(statements.len());
    for st in statements {
        let pos = st.pos;
        let formula = st.into_formula();
        let rule = Rule::from_formula(&formula).ok_or_else(|| Error::FragmentViolation {
            pos,
            message: format!(
                "`{}` is not of the form `a_1 | ... | a_n :- l_1, ..., l_m` with objective or subjective literals",
                formula.display(&sig)
            ),
        })?;
        rules.push(rule);
    }
    Ok(Program::new(rules, sig))
}
