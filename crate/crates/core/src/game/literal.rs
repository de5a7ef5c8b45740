//! Game literals: `game := number | "*" | "{" list "|" list "}"`.

use std::fmt::Write;

use super::{Engine, GameId};
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn game(&mut self, engine: &mut Engine) -> Result<GameId> {
        match self.peek() {
            Some('*') => {
                self.pos += 1;
                Ok(engine.star())
            }
            Some('{') => {
                self.pos += 1;
                let left = self.list(engine, '|')?;
                self.expect('|')?;
                let right = self.list(engine, '}')?;
                self.expect('}')?;
                engine.make_game(&left, &right)
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let d = self.number()?;
                engine.number_to_game(d)
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn list(&mut self, engine: &mut Engine, end: char) -> Result<Vec<GameId>> {
        let mut out = Vec::new();
        if self.peek() == Some(end) {
            return Ok(out);
        }
        loop {
            out.push(self.game(engine)?);
            if self.peek() == Some(',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn integer(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        if bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn number(&mut self) -> Result<DyadicRational> {
        let start = self.pos;
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.integer()?;
            let text = format!("{num}/{den}");
            text.parse().map_err(|e| match e {
                Error::MalformedDyadic(_) => e,
                _ => Error::Syntax {
                    pos: start,
                    msg: format!("bad number `{text}`"),
                },
            })
        } else {
            num.parse::<i64>()
                .map(DyadicRational::integer)
                .map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("integer `{num}` out of range"),
                })
        }
    }
}

impl Engine {
    /// Parses a game literal such as `{0,*|*}` or `-3/4`.
    pub fn parse_game(&mut self, text: &str) -> Result<GameId> {
        let mut p = Parser { src: text, pos: 0 };
        let g = p.game(self)?;
        if let Some(c) = p.peek() {
            return Err(p.error(format!("trailing `{c}`")));
        }
        Ok(g)
    }

    /// Renders `g` with number and `*` shorthand wherever the stored form is
    /// literally a canonical number form or `{0|0}`.
    pub fn render(&self, g: GameId) -> String {
        let mut out = String::new();
        self.render_into(g, &mut out, true);
        out
    }

    /// Renders the top level of `g` in braces, shorthand below it.
    pub fn render_form(&self, g: GameId) -> String {
        let mut out = String::new();
        self.render_into(g, &mut out, false);
        out
    }

    fn render_into(&self, g: GameId, out: &mut String, shorthand: bool) {
        if shorthand {
            if let Some(d) = self.as_number_form(g) {
                write!(out, "{d}").unwrap();
                return;
            }
            if self.left_options(g) == [GameId::ZERO] && self.right_options(g) == [GameId::ZERO] {
                out.push('*');
                return;
            }
        }
        out.push('{');
        for (i, &o) in self.left_options(g).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.render_into(o, out, true);
        }
        out.push('|');
        for (i, &o) in self.right_options(g).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.render_into(o, out, true);
        }
        out.push('}');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fixture_literals() {
        let mut e = Engine::new();
        assert_eq!(e.parse_game("{|}").unwrap(), GameId::ZERO);
        assert_eq!(e.parse_game(" { | } ").unwrap(), GameId::ZERO);
        let half = e.parse_game("{0|1}").unwrap();
        let one = e.parse_game("1").unwrap();
        assert_eq!(e.left_options(half), &[GameId::ZERO]);
        assert_eq!(e.right_options(half), &[one]);
        let g = e.parse_game("{0,*|*}").unwrap();
        let star = e.star();
        assert_eq!(e.left_options(g), &[GameId::ZERO, star]);
        assert_eq!(e.right_options(g), &[star]);
    }

    #[test]
    fn number_literals_expand_to_canonical_forms() {
        let mut e = Engine::new();
        let a = e.parse_game("3/4").unwrap();
        let b = e.parse_game("{1/2|1}").unwrap();
        assert_eq!(a, b);
        let c = e.parse_game("-2").unwrap();
        let d = e.parse_game("{|-1}").unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let mut e = Engine::new();
        assert!(matches!(e.parse_game("{0|1"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(e.parse_game("{0|1}}"), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(e.parse_game("{0 1|}"), Err(Error::Syntax { .. })));
        assert!(matches!(e.parse_game(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(e.parse_game("{a|}"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(e.parse_game("1/3"), Err(Error::MalformedDyadic(_))));
        assert!(matches!(e.parse_game("{1/6|}"), Err(Error::MalformedDyadic(_))));
    }

    #[test]
    fn render_uses_grammar() {
        let mut e = Engine::new();
        for s in ["0", "*", "1/2", "-3/4", "{0,*|*}", "{1|0}", "{*|0,*}", "{0|*}"] {
            let g = e.parse_game(s).unwrap();
            assert_eq!(e.render(g), s);
            assert_eq!(e.parse_game(&e.render(g)).unwrap(), g);
        }
        let half = e.parse_game("{0|1}").unwrap();
        assert_eq!(e.render_form(half), "{0|1}");
        assert_eq!(e.render_form(GameId::ZERO), "{|}");
        // non-canonical number forms keep their braces
        let g = e.parse_game("{-2|0}").unwrap();
        assert_eq!(e.render(g), "{-2|0}");
    }
}
