//! Terms, atoms and hypotheses plus the `query(X) :- ...` surface syntax.
//!
//! ```text
//! query     = "query(" VAR ")" ":-" atom { "," atom } "." ;
//! atom      = PRED "(" term { "," term } ")" ;
//! term      = VAR | STRING | NODE ;
//! VAR       = [A-Z_][A-Za-z0-9_]* ;
//! STRING    = '"' { char | '\"' | '\\' } '"' ;
//! NODE      = bare node id (balanced parentheses, no top-level ',' or ')') ;
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extract::NodeKind;
use crate::strings::{quote, unquote_at};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pred {
    MethodDec,
    If,
    Loop,
    MethodCall,
    Type,
    Exception,
    IfLike,
    LoopLike,
    Contains,
    Before,
    Parent,
    Next,
}

/// What an argument position holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    Node,
    /// A string constant compared for equality.
    Label,
    /// A string constant used as a regular expression.
    Regex,
}

impl Pred {
    pub const ALL: [Pred; 12] = [
        Pred::MethodDec,
        Pred::If,
        Pred::Loop,
        Pred::MethodCall,
        Pred::Type,
        Pred::Exception,
        Pred::IfLike,
        Pred::LoopLike,
        Pred::Contains,
        Pred::Before,
        Pred::Parent,
        Pred::Next,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pred::MethodDec => "methoddec",
            Pred::If => "if",
            Pred::Loop => "loop",
            Pred::MethodCall => "methodcall",
            Pred::Type => "type",
            Pred::Exception => "exception",
            Pred::IfLike => "iflike",
            Pred::LoopLike => "looplike",
            Pred::Contains => "contains",
            Pred::Before => "before",
            Pred::Parent => "parent",
            Pred::Next => "next",
        }
    }

    pub fn from_name(s: &str) -> Option<Pred> {
        Pred::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn sorts(self) -> &'static [Sort] {
        match self {
            Pred::MethodDec => &[Sort::Node],
            Pred::If | Pred::Loop | Pred::MethodCall | Pred::Type | Pred::Exception => &[Sort::Node, Sort::Label],
            Pred::IfLike | Pred::LoopLike => &[Sort::Node, Sort::Regex],
            Pred::Contains | Pred::Before | Pred::Parent | Pred::Next => &[Sort::Node, Sort::Node],
        }
    }

    /// Node kind tested by a unary feature predicate.
    pub fn feature_kind(self) -> Option<NodeKind> {
        match self {
            Pred::MethodDec => Some(NodeKind::Method),
            Pred::If | Pred::IfLike => Some(NodeKind::If),
            Pred::Loop | Pred::LoopLike => Some(NodeKind::Loop),
            Pred::MethodCall => Some(NodeKind::Call),
            Pred::Type => Some(NodeKind::Type),
            Pred::Exception => Some(NodeKind::Catch),
            _ => None,
        }
    }

    pub fn is_regex(self) -> bool {
        matches!(self, Pred::IfLike | Pred::LoopLike)
    }

    pub fn is_binary_relation(self) -> bool {
        matches!(self, Pred::Contains | Pred::Before | Pred::Parent | Pred::Next)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    /// Node id constant.
    Node(String),
    Str(String),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Node(n) => f.write_str(n),
            Term::Str(s) => f.write_str(&quote(s)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub pred: Pred,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: Pred, args: Vec<Term>) -> Atom {
        Atom { pred, args }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(Term::as_var)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.pred.name())?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Where an atom of a hypothesis came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Exact fact of an annotated seed node.
    SeedAnnotated,
    /// Exact fact of a non-annotated seed node (only in h0).
    SeedContext,
    /// `iflike`/`looplike` derived from an annotated condition.
    RegexGeneralized,
    /// Added by specialization.
    BiasLearned,
    /// Structural connector (`contains`, `before`) or the `methoddec` head.
    Plumbing,
    /// Written by hand.
    User,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub atom: Atom,
    pub provenance: Provenance,
}

/// A definite clause `query(X) :- body.`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    head: String,
    body: Vec<Literal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("syntax error at column {col}: {message}")]
    Syntax { col: usize, message: String },
    #[error("`{atom}`: {message}")]
    Arity { atom: String, message: String },
    #[error("query must contain exactly one `methoddec({0})` atom")]
    MethodDec(String),
    #[error("variable {0} is not connected to the head variable")]
    Disconnected(String),
}

impl Hypothesis {
    /// Validates and constructs a hypothesis.
    pub fn new(head: impl Into<String>, body: Vec<Literal>) -> Result<Hypothesis, QueryError> {
        let h = Hypothesis {
            head: head.into(),
            body,
        };
        h.validate()?;
        Ok(h)
    }

    pub fn head(&self) -> &str {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.body.iter().map(|l| &l.atom)
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }

    /// Every distinct variable, head first, then in order of appearance.
    pub fn vars(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for v in std::iter::once(self.head.as_str()).chain(self.atoms().flat_map(|a| a.vars())) {
            if seen.insert(v.to_string()) {
                out.push(v.to_string());
            }
        }
        out
    }

    pub fn provenance(&self) -> Vec<Provenance> {
        self.body.iter().map(|l| l.provenance).collect()
    }

    /// Same atoms with provenance replaced (lengths must match).
    pub fn with_provenance(mut self, prov: &[Provenance]) -> Hypothesis {
        for (l, p) in self.body.iter_mut().zip(prov) {
            l.provenance = *p;
        }
        self
    }

    fn validate(&self) -> Result<(), QueryError> {
        if !is_var(&self.head) {
            return Err(QueryError::Syntax {
                col: 7,
                message: format!("head `{}` is not a variable", self.head),
            });
        }
        for a in self.atoms() {
            let sorts = a.pred.sorts();
            if a.args.len() != sorts.len() {
                return Err(QueryError::Arity {
                    atom: a.to_string(),
                    message: format!("`{}` takes {} argument(s)", a.pred.name(), sorts.len()),
                });
            }
            for (t, s) in a.args.iter().zip(sorts) {
                let ok = matches!(
                    (s, t),
                    (Sort::Node, Term::Var(_) | Term::Node(_)) | (Sort::Label | Sort::Regex, Term::Str(_))
                );
                if !ok {
                    let want = match s {
                        Sort::Node => "a variable or node id",
                        Sort::Label => "a string constant",
                        Sort::Regex => "a constant regex string",
                    };
                    return Err(QueryError::Arity {
                        atom: a.to_string(),
                        message: format!("argument `{t}` must be {want}"),
                    });
                }
            }
        }
        // connectivity: union variables that share an atom, starting at the head
        let mut adj: HashMap<&str, Vec<&str>> = HashMap::new();
        for a in self.atoms() {
            let vs: Vec<&str> = a.vars().collect();
            for &x in &vs {
                adj.entry(x).or_default().extend(vs.iter().copied());
            }
        }
        let mut reached: HashSet<&str> = HashSet::from([self.head.as_str()]);
        let mut stack = vec![self.head.as_str()];
        while let Some(v) = stack.pop() {
            for &w in adj.get(v).into_iter().flatten() {
                if reached.insert(w) {
                    stack.push(w);
                }
            }
        }
        for a in self.atoms() {
            for v in a.vars() {
                if !reached.contains(v) {
                    return Err(QueryError::Disconnected(v.to_string()));
                }
            }
        }
        let heads: Vec<&Atom> = self.atoms().filter(|a| a.pred == Pred::MethodDec).collect();
        if heads.len() != 1 || heads[0].args[0] != Term::Var(self.head.clone()) {
            return Err(QueryError::MethodDec(self.head.clone()));
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "query({}) :- ", self.head)?;
        for (i, l) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", l.atom)?;
        }
        f.write_str(".")
    }
}

pub fn is_var(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_uppercase() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses query text; every atom gets [`Provenance::User`].
pub fn parse_query(text: &str) -> Result<Hypothesis, QueryError> {
    let mut p = QParser { s: text, i: 0 };
    p.ws();
    p.keyword("query")?;
    p.ws();
    p.punct('(')?;
    p.ws();
    let head = p.bare()?;
    if !is_var(&head) {
        return p.fail(format!("head `{head}` is not a variable"));
    }
    p.ws();
    p.punct(')')?;
    p.ws();
    p.keyword(":-")?;
    let mut body = Vec::new();
    loop {
        p.ws();
        let start = p.i;
        let name = p.ident()?;
        let pred = match Pred::from_name(&name) {
            Some(pr) => pr,
            None => {
                return Err(QueryError::Syntax {
                    col: start + 1,
                    message: format!("unknown predicate `{name}`"),
                })
            }
        };
        p.ws();
        p.punct('(')?;
        let mut args = Vec::new();
        loop {
            p.ws();
            args.push(p.term()?);
            p.ws();
            if p.peek() == Some(',') {
                p.i += 1;
                continue;
            }
            p.punct(')')?;
            break;
        }
        body.push(Literal {
            atom: Atom::new(pred, args),
            provenance: Provenance::User,
        });
        p.ws();
        match p.peek() {
            Some(',') => p.i += 1,
            Some('.') => {
                p.i += 1;
                break;
            }
            _ => return p.fail("expected `,` or `.` after atom"),
        }
    }
    p.ws();
    if p.i < text.len() {
        return p.fail("unexpected text after final `.`");
    }
    Hypothesis::new(head, body)
}

struct QParser<'a> {
    s: &'a str,
    i: usize,
}

impl QParser<'_> {
    fn peek(&self) -> Option<char> {
        self.s[self.i..].chars().next()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.i += self.peek().map_or(1, char::len_utf8);
        }
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, QueryError> {
        Err(QueryError::Syntax {
            col: self.i + 1,
            message: message.into(),
        })
    }

    fn keyword(&mut self, k: &str) -> Result<(), QueryError> {
        if self.s[self.i..].starts_with(k) {
            self.i += k.len();
            Ok(())
        } else {
            self.fail(format!("expected `{k}`"))
        }
    }

    fn punct(&mut self, c: char) -> Result<(), QueryError> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<String, QueryError> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.i += 1;
        }
        if start == self.i {
            return self.fail("expected predicate name");
        }
        Ok(self.s[start..self.i].to_string())
    }

    /// Bare token: balanced parentheses, stops at top-level `,` or `)`.
    fn bare(&mut self) -> Result<String, QueryError> {
        let start = self.i;
        let mut depth = 0;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                ',' if depth == 0 => break,
                c if c.is_whitespace() && depth == 0 => break,
                _ => {}
            }
            self.i += c.len_utf8();
        }
        if start == self.i {
            return self.fail("expected a term");
        }
        Ok(self.s[start..self.i].to_string())
    }

    fn term(&mut self) -> Result<Term, QueryError> {
        if self.peek() == Some('"') {
            let (v, end) = unquote_at(self.s, self.i).map_err(|m| QueryError::Syntax {
                col: self.i + 1,
                message: m,
            })?;
            self.i = end;
            return Ok(Term::Str(v));
        }
        let b = self.bare()?;
        Ok(if is_var(&b) { Term::Var(b) } else { Term::Node(b) })
    }
}
