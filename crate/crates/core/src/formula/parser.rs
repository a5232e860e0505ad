use super::{Formula, Rule};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    LParen,
    RParen,
    Comma,
    Slash,
    Eof,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Bot => "`bot`".into(),
        Tok::Top => "`top`".into(),
        Tok::Not => "`~`".into(),
        Tok::And => "`/\\`".into(),
        Tok::Or => "`\\/`".into(),
        Tok::Imp => "`->`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Eof => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '~' | '¬' => Tok::Not,
            '∧' => Tok::And,
            '∨' => Tok::Or,
            '→' => Tok::Imp,
            '⊥' => Tok::Bot,
            '⊤' => Tok::Top,
            '/' => {
                it.next();
                if let Some(&(_, '\\')) = it.peek() {
                    it.next();
                    out.push((pos, Tok::And));
                } else {
                    out.push((pos, Tok::Slash));
                }
                continue;
            }
            '\\' => {
                it.next();
                match it.peek() {
                    Some(&(_, '/')) => {
                        it.next();
                        out.push((pos, Tok::Or));
                        continue;
                    }
                    _ => {
                        return Err(Error::Syntax {
                            pos,
                            msg: "expected `\\/`".into(),
                        })
                    }
                }
            }
            '-' => {
                it.next();
                match it.peek() {
                    Some(&(_, '>')) => {
                        it.next();
                        out.push((pos, Tok::Imp));
                        continue;
                    }
                    _ => {
                        return Err(Error::Syntax {
                            pos,
                            msg: "expected `->`".into(),
                        })
                    }
                }
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' {
                        name.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                let tok = match name.as_str() {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    _ => Tok::Ident(name),
                };
                out.push((pos, tok));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unknown token `{other}`"),
                })
            }
        };
        it.next();
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
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

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&describe(&t))
        }
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::LParen => {
                self.bump();
                let f = self.imp()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            _ => self.unexpected("a formula"),
        }
    }
}

/// Parses a formula. Precedence, tightest first: `~`, `/\`, `\/`, `->`
/// (right-associative). The binary conjunction and disjunction nest left.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.imp()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

/// Parses `A1, A2, ... / B`; a rule without premises is written `/ B`.
pub fn parse_rule(text: &str) -> Result<Rule> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let mut premises = Vec::new();
    if *p.peek() != Tok::Slash {
        premises.push(p.imp()?);
        while *p.peek() == Tok::Comma {
            p.bump();
            premises.push(p.imp()?);
        }
    }
    p.expect(Tok::Slash)?;
    let conclusion = p.imp()?;
    p.expect(Tok::Eof)?;
    Ok(Rule::new(premises, conclusion))
}
