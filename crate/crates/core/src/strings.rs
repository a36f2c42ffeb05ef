//! String literal quoting shared by the fact file and the query syntax.
//!
//! Only `"` and `\` need escaping, and a backslash is doubled only where it
//! would otherwise be ambiguous (before `"`, before `\`, or at the end). This
//! keeps regex escapes such as `\(` readable inside query text.

pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    let chars: Vec<char> = s.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' if matches!(chars.get(i + 1), None | Some('"') | Some('\\')) => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Reads a quoted literal starting at byte `at` (which must be `"`).
/// Returns the value and the byte offset just past the closing quote.
pub fn unquote_at(text: &str, at: usize) -> Result<(String, usize), String> {
    let bytes = text.as_bytes();
    if bytes.get(at) != Some(&b'"') {
        return Err("expected string literal".into());
    }
    let mut out = String::new();
    let mut chars = text[at + 1..].char_indices();
    while let Some((i, c)) = chars.next() {
        match c {
            '"' => return Ok((out, at + 1 + i + 1)),
            '\\' => match text[at + 1 + i + 1..].chars().next() {
                Some(n @ ('"' | '\\')) => {
                    out.push(n);
                    chars.next();
                }
                _ => out.push('\\'),
            },
            c => out.push(c),
        }
    }
    Err("unterminated string literal".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn readable_regex_escapes() {
        assert_eq!(quote(r"foo\(.*\)"), r#""foo\(.*\)""#);
        assert_eq!(quote(r#"a"b\"#), r#""a\"b\\""#);
    }

    proptest! {
        #[test]
        fn round_trip(s in ".*") {
            let q = quote(&s);
            let (back, end) = unquote_at(&q, 0).unwrap();
            prop_assert_eq!(back, s);
            prop_assert_eq!(end, q.len());
        }
    }
}
