//! Java-subset front end: lexer, syntax tree and recursive-descent parser.
//!
//! The supported subset covers class/interface/enum declarations, method
//! and constructor bodies with `if`/`else`, `while`, `for`, `do`, enhanced
//! `for`, `try`/`catch`, local declarations and ordinary expressions.
//! Statements outside that subset (`switch`, local classes, `assert`, ...)
//! are kept as opaque nodes so the rest of the method is still usable.

mod ast;
mod lexer;
mod parser;

use std::fmt;

pub use ast::*;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_source;

/// Byte range in a source file plus the 1-based line/column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

impl Span {
    pub fn to(self, other: Span) -> Span {
        Span {
            start: self.start,
            end: other.end,
            line: self.line,
            column: self.column,
        }
    }

    pub fn text(self, src: &str) -> &str {
        &src[self.start..self.end]
    }

    pub fn encloses(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

/// Parse failure with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub file: String,
    pub line: u32,
    pub column: u32,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.file, self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// Collapses whitespace runs to a single space and trims both ends.
pub fn normalize_ws(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}
