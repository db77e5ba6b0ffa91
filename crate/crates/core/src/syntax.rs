//! Textual word syntax.
//!
//! ```text
//! word    := factor (('*' | whitespace) factor)*
//! factor  := atom ('^' integer)?
//! atom    := identifier | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `x^-2 * y * x` and `x^-2 y x` are the same word. `[u, v]` expands to
//! `u^-1 v^-1 u v`, and `(w)^k` repeats `w` (inverted for negative `k`).
//! Nothing is reduced while parsing.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

pub fn parse_word(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
    let mut p = Parser { alphabet, chars: text.chars().collect(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Ok(Word::empty(alphabet));
    }
    let letters = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Word::from_letters(alphabet, letters)
}

impl Word {
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
        parse_word(alphabet, text)
    }
}

struct Parser<'a> {
    alphabet: &'a Arc<Alphabet>,
    chars: Vec<char>,
    pos: usize,
}

fn invert(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inv()).collect()
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: String) -> Error {
        let (mut line, mut column) = (1, 1);
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse { line, column, message }
    }

    fn word(&mut self) -> Result<Vec<Letter>> {
        let mut out = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    self.skip_ws();
                    out.extend(self.factor()?);
                }
                Some(c) if c == '(' || c == '[' || c == '1' || c.is_ascii_alphabetic() || c == '_' => {
                    out.extend(self.factor()?);
                }
                _ => return Ok(out),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let k = self.integer()?;
        let unit = if k < 0 { invert(&base) } else { base };
        let mut out = Vec::with_capacity(unit.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            out.extend_from_slice(&unit);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Vec<Letter>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = if self.peek() == Some(')') { Vec::new() } else { self.word()? };
                self.expect(')')?;
                Ok(inner)
            }
            Some('[') => {
                self.pos += 1;
                self.skip_ws();
                let u = self.word()?;
                self.expect(',')?;
                self.skip_ws();
                let v = self.word()?;
                self.expect(']')?;
                let mut out = invert(&u);
                out.extend(invert(&v));
                out.extend(u);
                out.extend(v);
                Ok(out)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.alphabet.index_of(&name) {
                    Some(g) => Ok(vec![Letter::pos(g)]),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown generator `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent".into())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Arc<Alphabet> {
        Alphabet::new(["x", "y", "t1"]).unwrap()
    }

    fn parse(s: &str) -> Word {
        parse_word(&alpha(), s).unwrap()
    }

    #[test]
    fn stars_and_juxtaposition_agree() {
        let expect = Word::from_blocks(&alpha(), &[(0, -2), (1, 1), (0, 1)]).unwrap();
        assert_eq!(parse("x^-2 * y * x"), expect);
        assert_eq!(parse("x^-2 y x"), expect);
        assert_eq!(parse("x^-2*y*x"), expect);
    }

    #[test]
    fn identity_forms() {
        assert!(parse("").is_empty());
        assert!(parse("1").is_empty());
        assert!(parse("  x^0 ").is_empty());
        assert!(parse("()").is_empty());
    }

    #[test]
    fn groups_and_commutators() {
        assert_eq!(parse("(x y)^-1"), parse("y^-1 x^-1"));
        assert_eq!(parse("(x y)^2"), parse("x y x y"));
        assert_eq!(parse("[x, y]"), parse("x^-1 y^-1 x y"));
        assert_eq!(parse("[x t1, y]").len(), 6);
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^-2 y x", "t1^3 x^-1 t1^3", "1", "y"] {
            let w = parse(s);
            assert_eq!(parse(&w.to_string()), w);
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse_word(&alpha(), "x y\n  z") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(parse_word(&alpha(), "x^").is_err());
        assert!(parse_word(&alpha(), "x^a").is_err());
        assert!(parse_word(&alpha(), "(x y").is_err());
        assert!(parse_word(&alpha(), "x $").is_err());
    }
}
