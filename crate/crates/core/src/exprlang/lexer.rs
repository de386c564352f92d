use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Num(x) => format!("number `{x}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// Tokens paired with their byte offsets.
pub fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let (off, ch) = bytes[i];
        let simple = match ch {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, off));
            i += 1;
        } else if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {

            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i].1 == '.' {
                i += 1;
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            if i < bytes.len() && (bytes[i].1 == 'e' || bytes[i].1 == 'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j].1 == '+' || bytes[j].1 == '-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].1.is_ascii_digit() {
                    while j < bytes.len() && bytes[j].1.is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let end = if i < bytes.len() { bytes[i].0 } else { src.len() };
            let text = &src[off..end];
            let value: f64 = text.parse().map_err(|_| Error::Parse {
                offset: off,
                expected: "a number".into(),
                found: format!("`{text}`"),
            })?;
            out.push((Tok::Num(value), off));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            let end = if i < bytes.len() { bytes[i].0 } else { src.len() };
            out.push((Tok::Ident(src[off..end].to_string()), off));
        } else {
            return Err(Error::Parse {
                offset: off,
                expected: "a token".into(),
                found: format!("`{ch}`"),
            });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}
