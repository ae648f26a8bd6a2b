//! Word grammar:
//!
//! ```text
//! word   := factor*
//! factor := 'x' N | 'X' N | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `xN` is a generator, `XN` its inverse, `[u,v] = u v ū v̄`, juxtaposition is
//! the product and `1` the identity. Whitespace is ignored.

use super::word::{FreeWord, Letter};
use crate::error::{Error, Result};

pub fn parse_word(text: &str) -> Result<FreeWord> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, len: text.len() };
    let w = p.word()?;
    p.skip_ws();
    if let Some((at, c)) = p.peek() {
        return Err(syntax(at, format!("unexpected '{c}'")));
    }
    Ok(w)
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.len, |(at, _)| at)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some((_, c)) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some((at, c)) => Err(syntax(at, format!("expected '{want}', found '{c}'"))),
            None => Err(syntax(self.len, format!("expected '{want}', found end of input"))),
        }
    }

    fn word(&mut self) -> Result<FreeWord> {
        let mut w = FreeWord::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some((_, ',' | ']' | ')')) => return Ok(w),
                Some(_) => {
                    let f = self.factor()?;
                    w = &w * &f;
                }
            }
        }
    }

    fn factor(&mut self) -> Result<FreeWord> {
        let (at, c) = self.peek().expect("caller checked");
        match c {
            'x' | 'X' => {
                self.pos += 1;
                let gen = self.number(at)?;
                Ok(FreeWord::from_letters([Letter::new(gen, c == 'X')]))
            }
            '1' => {
                self.pos += 1;
                Ok(FreeWord::empty())
            }
            '(' => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            '[' => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Ok(FreeWord::commutator(&u, &v))
            }
            _ => Err(syntax(at, format!("unexpected '{c}'"))),
        }
    }

    fn number(&mut self, letter_at: usize) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some((_, c)) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(syntax(self.offset(), "expected generator index after 'x'"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| *c).collect();
        match digits.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(syntax(letter_at, format!("invalid generator index '{digits}'"))),
        }
    }
}
