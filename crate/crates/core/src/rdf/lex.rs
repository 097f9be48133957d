//! Character-level scanning shared by the Turtle and N-Triples readers.

use crate::error::SyntaxError;
use crate::rdf::term::is_forbidden_iri_char;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        let src = src.strip_prefix('\u{feff}').unwrap_or(src);
        Cursor {
            src,
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn peek_nth(&self, n: usize) -> Option<char> {
        self.rest().chars().nth(n)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub fn starts_with(&self, s: &str) -> bool {
        self.rest().starts_with(s)
    }

    pub fn eat(&mut self, s: &str) -> bool {
        if self.starts_with(s) {
            for _ in s.chars() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    pub fn eat_char(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat_char(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    pub fn unexpected(&self, expected: &str) -> SyntaxError {
        match self.peek() {
            Some(c) => self.error(format!("expected {expected}, found {c:?}")),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    /// Skips whitespace and `#` comments.
    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' || c == '\r' {
                        break;
                    }
                    self.bump();
                }
            } else if matches!(c, ' ' | '\t' | '\n' | '\r') {
                self.bump();
            } else {
                break;
            }
        }
    }

    /// Skips spaces, tabs and comments but stops at line ends.
    pub fn skip_inline_ws(&mut self) {
        while let Some(c) = self.peek() {
            match c {
                ' ' | '\t' => {
                    self.bump();
                }
                '#' => {
                    while !matches!(self.peek(), None | Some('\n') | Some('\r')) {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    /// `<...>` with `\u`/`\U` escapes decoded. Returns the raw (possibly
    /// relative) IRI text.
    pub fn iriref(&mut self) -> Result<String, SyntaxError> {
        self.expect('<')?;
        let mut out = String::new();
        loop {
            match self.peek() {
                None => return Err(self.error("unterminated IRI")),
                Some('>') => {
                    self.bump();
                    return Ok(out);
                }
                Some('\\') => {
                    self.bump();
                    let c = match self.bump() {
                        Some('u') => self.hex_escape(4)?,
                        Some('U') => self.hex_escape(8)?,
                        _ => return Err(self.error("invalid escape in IRI")),
                    };
                    if is_forbidden_iri_char(c) {
                        return Err(
                            self.error(format!("escaped character {c:?} not allowed in IRI"))
                        );
                    }
                    out.push(c);
                }
                Some(c) if is_forbidden_iri_char(c) => {
                    return Err(self.error(format!("character {c:?} not allowed in IRI")));
                }
                Some(c) => {
                    self.bump();
                    out.push(c);
                }
            }
        }
    }

    fn hex_escape(&mut self, digits: usize) -> Result<char, SyntaxError> {
        let mut value = 0u32;
        for _ in 0..digits {
            let d = self
                .bump()
                .and_then(|c| c.to_digit(16))
                .ok_or_else(|| self.error("invalid hexadecimal escape"))?;
            value = value * 16 + d;
        }
        char::from_u32(value).ok_or_else(|| self.error("escape is not a Unicode scalar value"))
    }

    /// `_:label`; returns the label without the `_:` marker.
    pub fn blank_label(&mut self) -> Result<String, SyntaxError> {
        if !self.eat("_:") {
            return Err(self.unexpected("'_:'"));
        }
        let mut out = String::new();
        match self.peek() {
            Some(c) if is_pn_chars_u(c) || c.is_ascii_digit() => {
                self.bump();
                out.push(c);
            }
            _ => return Err(self.unexpected("blank node label")),
        }
        loop {
            match self.peek() {
                Some('.') if self.peek_nth(1).is_some_and(is_pn_chars) => {
                    self.bump();
                    out.push('.');
                }
                Some(c) if is_pn_chars(c) => {
                    self.bump();
                    out.push(c);
                }
                _ => return Ok(out),
            }
        }
    }

    /// A quoted string in any of the four Turtle forms. N-Triples only
    /// allows the short double-quoted one; `long_forms` gates the rest.
    pub fn string(&mut self, long_forms: bool) -> Result<String, SyntaxError> {
        let quote = match self.peek() {
            Some(q @ ('"' | '\'')) if long_forms || q == '"' => q,
            _ => return Err(self.unexpected("string literal")),
        };
        let triple: String = std::iter::repeat_n(quote, 3).collect();
        let long = long_forms && self.starts_with(&triple);
        if long {
            self.eat(&triple);
        } else {
            self.bump();
        }
        let mut out = String::new();
        loop {
            match self.peek() {
                None => return Err(self.error("unterminated string literal")),
                Some(c) if c == quote => {
                    if !long {
                        self.bump();
                        return Ok(out);
                    }
                    if self.starts_with(&triple) {
                        // `""""` ends with the last three quotes.
                        let mut run = 0;
                        while self.peek_nth(run) == Some(quote) {
                            run += 1;
                        }
                        for _ in 0..run.saturating_sub(3) {
                            out.push(quote);
                            self.bump();
                        }
                        self.eat(&triple);
                        return Ok(out);
                    }
                    self.bump();
                    out.push(c);
                }
                Some('\\') => {
                    self.bump();
                    let c = match self.bump() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.hex_escape(4)?,
                        Some('U') => self.hex_escape(8)?,
                        _ => return Err(self.error("invalid string escape")),
                    };
                    out.push(c);
                }
                Some('\n' | '\r') if !long => {
                    return Err(self.error("line break in single-line string literal"));
                }
                Some(c) => {
                    self.bump();
                    out.push(c);
                }
            }
        }
    }

    /// `@lang-tag` after a string; the `@` must be the current character.
    pub fn langtag(&mut self) -> Result<String, SyntaxError> {
        self.expect('@')?;
        let mut out = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            self.bump();
            out.push(c);
        }
        if out.is_empty() {
            return Err(self.error("empty language tag"));
        }
        while self.peek() == Some('-')
            && self.peek_nth(1).is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.bump();
            out.push('-');
            while let Some(c) = self.peek().filter(char::is_ascii_alphanumeric) {
                self.bump();
                out.push(c);
            }
        }
        Ok(out)
    }
}

pub(crate) fn is_pn_chars_base(c: char) -> bool {
    c.is_ascii_alphabetic()
        || matches!(c,
            '\u{C0}'..='\u{D6}'
            | '\u{D8}'..='\u{F6}'
            | '\u{F8}'..='\u{2FF}'
            | '\u{370}'..='\u{37D}'
            | '\u{37F}'..='\u{1FFF}'
            | '\u{200C}'..='\u{200D}'
            | '\u{2070}'..='\u{218F}'
            | '\u{2C00}'..='\u{2FEF}'
            | '\u{3001}'..='\u{D7FF}'
            | '\u{F900}'..='\u{FDCF}'
            | '\u{FDF0}'..='\u{FFFD}'
            | '\u{10000}'..='\u{EFFFF}')
}

pub(crate) fn is_pn_chars_u(c: char) -> bool {
    is_pn_chars_base(c) || c == '_'
}

pub(crate) fn is_pn_chars(c: char) -> bool {
    is_pn_chars_u(c)
        || c == '-'
        || c.is_ascii_digit()
        || matches!(c, '\u{B7}' | '\u{300}'..='\u{36F}' | '\u{203F}'..='\u{2040}')
}

/// Characters that may follow a backslash inside a prefixed name's local part.
pub(crate) fn is_local_escapable(c: char) -> bool {
    "_~.-!$&'()*+,;=/?#@%".contains(c)
}
