//! Condition-to-regex conversion and the matching rule used by
//! `iflike`/`looplike`.
//!
//! Matching is anchored at both ends, case-sensitive, and ignores whitespace
//! on both sides, so `this.*>=0` matches `this.leadingPtr >= 0`.

use regex::Regex;

use crate::java::{tokenize, TokenKind};

/// Identifiers that stay literal in a converted pattern.
const KEPT_WORDS: &[&str] = &[
    "this",
    "super",
    "null",
    "true",
    "false",
    "new",
    "instanceof",
    "class",
    "byte",
    "short",
    "char",
    "int",
    "long",
    "float",
    "double",
    "boolean",
    "void",
];

const WILDCARD: &str = ".*";

fn escape_into(out: &mut String, text: &str) {
    for c in text.chars() {
        if matches!(
            c,
            '\\' | '.' | '+' | '*' | '?' | '(' | ')' | '|' | '[' | ']' | '{' | '}' | '^' | '$'
        ) {
            out.push('\\');
        }
        out.push(c);
    }
}

/// Converts a condition into a pattern: variable and field names become
/// `.*`; keywords, literals, operators and called method names stay.
pub fn regexize(condition: &str) -> String {
    let toks = match tokenize(condition, "<condition>") {
        Ok(t) => t,
        // unlexable text (stray quote, odd character) is kept literally
        Err(_) => {
            let mut out = String::new();
            escape_into(&mut out, condition);
            return out;
        }
    };
    let text = |i: usize| toks[i].text(condition);
    let is_wild_ident = |i: usize| {
        toks[i].kind == TokenKind::Ident
            && !KEPT_WORDS.contains(&text(i))
            && !(i + 1 < toks.len() && toks[i + 1].kind == TokenKind::Punct && text(i + 1) == "(")
    };
    let mut out = String::new();
    let mut prev_end = 0;
    let mut i = 0;
    while i < toks.len() && toks[i].kind != TokenKind::Eof {
        let gap = &condition[prev_end..toks[i].span.start];
        out.push_str(gap);
        let wild = if is_wild_ident(i) {
            prev_end = toks[i].span.end;
            i += 1;
            true
        } else if toks[i].kind == TokenKind::Punct
            && text(i) == "."
            && toks[i].span.end == toks[i + 1].span.start
            && is_wild_ident(i + 1)
        {
            prev_end = toks[i + 1].span.end;
            i += 2;
            true
        } else {
            escape_into(&mut out, text(i));
            prev_end = toks[i].span.end;
            i += 1;
            false
        };
        if wild && !(gap.is_empty() && out.ends_with(WILDCARD) && !out.ends_with("\\.*")) {
            out.push_str(WILDCARD);
        }
    }
    out.push_str(&condition[prev_end..]);
    out
}

/// Removes whitespace, keeping escaped characters intact. Matching ignores
/// whitespace, so this is the canonical stored form of a learned pattern.
pub fn compact(pattern: &str) -> String {
    let mut out = String::with_capacity(pattern.len());
    let mut chars = pattern.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            out.push(c);
            if let Some(n) = chars.next() {
                out.push(n);
            }
        } else if !c.is_whitespace() {
            out.push(c);
        }
    }
    out
}

pub fn strip_ws(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

/// A compiled `iflike`/`looplike` pattern.
#[derive(Debug, Clone)]
pub struct Pattern(Regex);

impl Pattern {
    pub fn new(pattern: &str) -> Result<Pattern, regex::Error> {
        Regex::new(&format!("^(?:{})$", compact(pattern))).map(Pattern)
    }

    pub fn matches(&self, condition: &str) -> bool {
        self.0.is_match(&strip_ws(condition))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_match(c: &str) -> bool {
        Pattern::new(&regexize(c)).unwrap().matches(c)
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(regexize("range==null && i<=this.leadingPtr"), ".*==null && .*<=this.*");
        assert_eq!(regexize("this.leadingPtr>=0"), "this.*>=0");
        assert_eq!(regexize("this.leadingPtr >= 0"), "this.* >= 0");
        assert_eq!(regexize("range!=null"), ".*!=null");
        assert_eq!(regexize("x"), ".*");
    }

    #[test]
    fn calls_and_metacharacters() {
        assert_eq!(regexize("a.b.c > 0"), ".* > 0");
        assert_eq!(regexize("list.isEmpty()"), r".*\.isEmpty\(\)");
        assert_eq!(regexize("this.leadingNodes[i] == node"), r"this.*\[.*\] == .*");
        assert_eq!(regexize("a || b+1"), r".* \|\| .*\+1");
        assert_eq!(regexize("s.equals(\"x.y\")"), r#".*\.equals\("x\.y"\)"#);
    }

    #[test]
    fn compact_form() {
        assert_eq!(compact(&regexize("this.leadingPtr >= 0")), "this.*>=0");
        assert_eq!(compact(&regexize("range != null")), ".*!=null");
        assert_eq!(compact(r"a\ b c"), r"a\ bc");
    }

    #[test]
    fn matching_ignores_whitespace() {
        let p = Pattern::new("this.*>=0").unwrap();
        assert!(p.matches("this.leadingPtr >= 0"));
        assert!(p.matches("this.leadingPtr>=0"));
        assert!(!p.matches("lastComment >= 0"));
        assert!(!Pattern::new("ZZZ").unwrap().matches("x"));
    }

    #[test]
    fn self_matches() {
        for c in [
            "range==null && i<=this.leadingPtr",
            "!(this.diet && this.dietInt==0) && this.scanner.commentPtr >= 0",
            "x instanceof Foo",
            "(String) o != \"a\\\"b\"",
            "i < n.length",
            "c == '\\n'",
            "",
            "String s : names",
            "Map.Entry<K,V> e : m.entrySet()",
            "a$b > 0.5e3",
        ] {
            assert!(self_match(c), "{c} -> {}", regexize(c));
        }
    }
}
