//! Tokenizer for the supported Java subset.
//!
//! Comments and whitespace are dropped; every token keeps its byte span so
//! the parser can slice exact source text (conditions, types) back out.

use super::{Diagnostic, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Float,
    Char,
    Str,
    /// Operator or separator. `>` is always lexed alone so that nested
    /// generic closers (`>>`) split naturally; the expression parser glues
    /// adjacent `>` tokens back into shift operators.
    Punct,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

impl Token {
    pub fn text<'a>(&self, src: &'a str) -> &'a str {
        &src[self.span.start..self.span.end]
    }
}

const PUNCTS: &[&str] = &[
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=",
    "^=", "<<", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@", "=", ">", "<", "!", "~", "?", ":", "+", "-", "*",
    "/", "&", "|", "^", "%",
];

pub fn tokenize(src: &str, file: &str) -> Result<Vec<Token>, Diagnostic> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1u32;
    let mut line_start = 0usize;

    let err = |msg: String, at: usize, line: u32, line_start: usize| Diagnostic {
        file: file.to_string(),
        line,
        column: (at - line_start) as u32 + 1,
        message: msg,
    };

    while i < bytes.len() {
        let c = bytes[i];
        if c == b'\n' {
            line += 1;
            i += 1;
            line_start = i;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'*') {
            let open = i;
            i += 2;
            loop {
                if i + 1 >= bytes.len() {
                    return Err(err("unterminated block comment".into(), open, line, line_start));
                }
                if bytes[i] == b'*' && bytes[i + 1] == b'/' {
                    i += 2;
                    break;
                }
                if bytes[i] == b'\n' {
                    line += 1;
                    line_start = i + 1;
                }
                i += 1;
            }
            continue;
        }

        let start = i;
        let col = (i - line_start) as u32 + 1;
        let kind = if c.is_ascii_alphabetic() || c == b'_' || c == b'$' || c >= 0x80 {
            while i < bytes.len()
                && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$' || bytes[i] >= 0x80)
            {
                i += 1;
            }
            TokenKind::Ident
        } else if c.is_ascii_digit() || (c == b'.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            lex_number(bytes, &mut i)
        } else if c == b'"' || c == b'\'' {
            let quote = c;
            i += 1;
            loop {
                match bytes.get(i) {
                    None | Some(b'\n') => return Err(err("unterminated literal".into(), start, line, line_start)),
                    Some(b'\\') => i += 2,
                    Some(&b) if b == quote => {
                        i += 1;
                        break;
                    }
                    Some(_) => i += 1,
                }
            }
            if quote == b'"' {
                TokenKind::Str
            } else {
                TokenKind::Char
            }
        } else {
            let rest = &src[i..];
            match PUNCTS.iter().find(|p| rest.starts_with(**p)) {
                Some(p) => {
                    i += p.len();
                    TokenKind::Punct
                }
                None => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(err(format!("unexpected character `{ch}`"), start, line, line_start));
                }
            }
        };
        out.push(Token {
            kind,
            span: Span {
                start,
                end: i,
                line,
                column: col,
            },
        });
    }
    out.push(Token {
        kind: TokenKind::Eof,
        span: Span {
            start: bytes.len(),
            end: bytes.len(),
            line,
            column: (bytes.len() - line_start) as u32 + 1,
        },
    });
    Ok(out)
}

fn lex_number(bytes: &[u8], i: &mut usize) -> TokenKind {
    let mut float = false;
    if bytes[*i] == b'0' && matches!(bytes.get(*i + 1), Some(b'x' | b'X' | b'b' | b'B')) {
        *i += 2;
        while *i < bytes.len() && (bytes[*i].is_ascii_hexdigit() || bytes[*i] == b'_') {
            *i += 1;
        }
    } else {
        while *i < bytes.len() && (bytes[*i].is_ascii_digit() || bytes[*i] == b'_') {
            *i += 1;
        }
        if bytes.get(*i) == Some(&b'.') && bytes.get(*i + 1).is_some_and(u8::is_ascii_digit) {
            float = true;
            *i += 1;
            while *i < bytes.len() && (bytes[*i].is_ascii_digit() || bytes[*i] == b'_') {
                *i += 1;
            }
        }
        if matches!(bytes.get(*i), Some(b'e' | b'E')) {
            float = true;
            *i += 1;
            if matches!(bytes.get(*i), Some(b'+' | b'-')) {
                *i += 1;
            }
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
        }
    }
    match bytes.get(*i) {
        Some(b'L' | b'l') => *i += 1,
        Some(b'f' | b'F' | b'd' | b'D') => {
            float = true;
            *i += 1;
        }
        _ => {}
    }
    if float {
        TokenKind::Float
    } else {
        TokenKind::Int
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<String> {
        tokenize(src, "T.java")
            .unwrap()
            .iter()
            .filter(|t| t.kind != TokenKind::Eof)
            .map(|t| t.text(src).to_string())
            .collect()
    }

    #[test]
    fn splits_generic_closers() {
        assert_eq!(
            texts("Map<K,List<V>>"),
            ["Map", "<", "K", ",", "List", "<", "V", ">", ">"]
        );
    }

    #[test]
    fn skips_comments_and_tracks_lines() {
        let src = "a /* x\n y */ b // c\n d";
        let toks = tokenize(src, "T.java").unwrap();
        assert_eq!(toks[1].span.line, 2);
        assert_eq!(toks[2].span.line, 3);
        assert_eq!(texts(src), ["a", "b", "d"]);
    }

    #[test]
    fn literals() {
        assert_eq!(texts(r#"x = "a\"b" + 'c' + 1.5e3f + 0xFFL"#).len(), 9);
    }

    #[test]
    fn unterminated_string_is_reported() {
        let e = tokenize("s = \"abc\n", "T.java").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
    }
}
