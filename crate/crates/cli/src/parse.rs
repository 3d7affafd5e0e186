//! Recursive descent parser for ring expressions.
//!
//! ```text
//! expr := term (('x' | '×') term)*          left-associative
//! term := atom ('/nil')*
//! atom := 'Z' INT | 'GF(' INT ')' | 'M' INT '(' expr ')' | '(' expr ')'
//! ```
//!
//! Keywords are case-insensitive and whitespace is ignored between tokens.

use thiserror::Error;
use wnc_core::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {}", .position + 1)]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Consumes `word` (case-insensitively) if it comes next.
    fn eat(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.chars().count();
        if end > self.chars.len() {
            return false;
        }
        let matches = self.chars[self.pos..end]
            .iter()
            .zip(word.chars())
            .all(|(a, b)| a.to_lowercase().eq(b.to_lowercase()));
        if matches {
            self.pos = end;
        }
        matches
    }

    fn expect(&mut self, word: &str) -> Result<(), ParseError> {
        if self.eat(word) {
            Ok(())
        } else {
            self.error(format!("expected '{word}'"))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| ParseError { position: start, message: format!("integer {text} is too large") })
    }

    fn expr(&mut self) -> Result<RingSpec, ParseError> {
        let mut left = self.term()?;
        while matches!(self.peek(), Some('x' | 'X' | '×')) {
            self.pos += 1;
            let right = self.term()?;
            left = RingSpec::product(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<RingSpec, ParseError> {
        let mut t = self.atom()?;
        while self.eat("/") {
            self.expect("nil")?;
            t = RingSpec::nil_quotient(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<RingSpec, ParseError> {
        let start = self.peek().map(|_| self.pos);
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        if self.eat("gf") {
            self.expect("(")?;
            let at = self.pos;
            let q = self.int()?;
            self.expect(")")?;
            return RingSpec::gf_order(q).map_err(|_| ParseError {
                position: at,
                message: format!("GF({q}): {q} is not a prime power"),
            });
        }
        if self.eat("z") {
            return Ok(RingSpec::Zn(self.int()?));
        }
        if self.eat("m") {
            let at = self.pos;
            let k = self.int()?;
            let k = u32::try_from(k)
                .map_err(|_| ParseError { position: at, message: format!("matrix size {k} is too large") })?;
            self.expect("(")?;
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(RingSpec::matrix(k, inner));
        }
        match start {
            None => self.error("unexpected end of input"),
            Some(_) => self.error("expected 'Z', 'GF(', 'M' or '('"),
        }
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingSpec, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let spec = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(spec)
}
