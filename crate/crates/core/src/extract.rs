//! Fact extraction: walks parsed methods and records every fact-bearing node
//! (method, if, loop, call site, catch clause, variable declaration) in
//! pre-order together with its parent link and source span.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::factbase::FactBase;
use crate::java::{
    self, Block, CompilationUnit, Diagnostic, Expr, ExprKind, ForInit, LocalVar, MethodDecl, Span, Stmt,
};
use crate::strings::quote;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Method,
    If,
    Loop,
    Call,
    Type,
    Catch,
}

impl NodeKind {
    pub const ALL: [NodeKind; 6] = [
        NodeKind::Method,
        NodeKind::If,
        NodeKind::Loop,
        NodeKind::Call,
        NodeKind::Type,
        NodeKind::Catch,
    ];

    /// Short name used in node ids and metadata files.
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Method => "method",
            NodeKind::If => "if",
            NodeKind::Loop => "loop",
            NodeKind::Call => "call",
            NodeKind::Type => "type",
            NodeKind::Catch => "catch",
        }
    }

    pub fn parse(s: &str) -> Option<NodeKind> {
        NodeKind::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Predicate of the fact carrying this node's label.
    pub fn predicate(self) -> &'static str {
        match self {
            NodeKind::Method => "methoddec",
            NodeKind::If => "if",
            NodeKind::Loop => "loop",
            NodeKind::Call => "methodcall",
            NodeKind::Type => "type",
            NodeKind::Catch => "exception",
        }
    }

    pub fn from_predicate(p: &str) -> Option<NodeKind> {
        NodeKind::ALL.into_iter().find(|k| k.predicate() == p)
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Source location of a node: 1-based inclusive line range plus byte range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SourceSpan {
    pub start_line: u32,
    pub end_line: u32,
    pub start_byte: usize,
    pub end_byte: usize,
}

impl SourceSpan {
    pub fn encloses(&self, other: &SourceSpan) -> bool {
        self.start_byte <= other.start_byte && other.end_byte <= self.end_byte
    }

    pub fn intersects_lines(&self, start: u32, end: u32) -> bool {
        self.start_line <= end && start <= self.end_line
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedNode {
    pub id: String,
    pub kind: NodeKind,
    /// Condition, callee, type name or caught types; the signature for methods.
    pub label: String,
    /// Index of the parent within the method's node list.
    pub parent: Option<usize>,
    pub span: SourceSpan,
}

/// One method's fact-bearing nodes in pre-order; `nodes[0]` is the method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedMethod {
    pub file: String,
    pub nodes: Vec<ExtractedNode>,
}

impl ExtractedMethod {
    pub fn id(&self) -> &str {
        &self.nodes[0].id
    }

    pub fn span(&self) -> SourceSpan {
        self.nodes[0].span
    }

    pub fn preorder(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().map(|n| n.id.as_str())
    }

    /// Ancestor chain of node `i`, nearest first.
    pub fn ancestry(&self, i: usize) -> Vec<&str> {
        let mut out = Vec::new();
        let mut cur = self.nodes[i].parent;
        while let Some(p) = cur {
            out.push(self.nodes[p].id.as_str());
            cur = self.nodes[p].parent;
        }
        out
    }

    fn prev_siblings(&self) -> Vec<Option<usize>> {
        let mut last_child: HashMap<usize, usize> = HashMap::new();
        let mut out = vec![None; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            if let Some(p) = n.parent {
                out[i] = last_child.insert(p, i);
            }
        }
        out
    }

    pub fn facts(&self) -> Vec<Fact> {
        let prev = self.prev_siblings();
        let mut out = Vec::with_capacity(self.nodes.len() * 3);
        for (i, n) in self.nodes.iter().enumerate() {
            match n.kind {
                NodeKind::Method => out.push(Fact::MethodDec(n.id.clone())),
                kind => out.push(Fact::Feature(kind, n.id.clone(), n.label.clone())),
            }
            if let Some(p) = n.parent {
                out.push(Fact::Parent(self.nodes[p].id.clone(), n.id.clone()));
            }
            if let Some(s) = prev[i] {
                out.push(Fact::Next(self.nodes[s].id.clone(), n.id.clone()));
            }
        }
        out
    }

    pub fn fact_count(&self) -> usize {
        let edges = self.nodes.iter().filter(|n| n.parent.is_some()).count();
        let nexts = self.prev_siblings().iter().filter(|p| p.is_some()).count();
        self.nodes.len() + edges + nexts
    }
}

/// A ground fact of the extraction vocabulary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fact {
    MethodDec(String),
    /// `if`, `loop`, `methodcall`, `type` or `exception`, by node kind.
    Feature(NodeKind, String, String),
    Parent(String, String),
    Next(String, String),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::MethodDec(id) => write!(f, "methoddec({id})."),
            Fact::Feature(k, id, label) => write!(f, "{}({id},{}).", k.predicate(), quote(label)),
            Fact::Parent(a, b) => write!(f, "parent({a},{b})."),
            Fact::Next(a, b) => write!(f, "next({a},{b})."),
        }
    }
}

/// Summary of a repository walk.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtractReport {
    pub files_parsed: usize,
    pub methods_parsed: usize,
    /// Body-less (abstract, interface, native) methods.
    pub methods_skipped: usize,
    pub files_skipped: Vec<(String, String)>,
}

/// Parses and extracts one source file.
pub fn extract_source(src: &str, file: &str) -> Result<Vec<ExtractedMethod>, Diagnostic> {
    let unit = java::parse_source(src, file)?;
    Ok(extract_facts(&unit, src, file))
}

/// Extracts every method with a body from a parsed compilation unit.
pub fn extract_facts(unit: &CompilationUnit, src: &str, file: &str) -> Vec<ExtractedMethod> {
    let stem = Path::new(file)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("")
        .to_string();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut out = Vec::new();
    for (type_path, m) in unit.methods() {
        let Some(body) = &m.body else { continue };
        let owner = match type_path.strip_prefix(&stem) {
            Some("") => String::new(),
            Some(rest) if rest.starts_with('.') => rest[1..].to_string(),
            _ => type_path.clone(),
        };
        let mut sig = m.signature().replace(char::is_whitespace, "");
        if !owner.is_empty() {
            sig = format!("{owner}.{sig}");
        }
        let n = seen.entry(sig.clone()).or_insert(0);
        *n += 1;
        if *n > 1 {
            sig = format!("{sig}~{n}");
        }
        out.push(extract_method(m, body, src, file, &sig));
    }
    out
}

fn extract_method(m: &MethodDecl, body: &Block, src: &str, file: &str, sig: &str) -> ExtractedMethod {
    let method_id = format!("{file}#{sig}");
    let mut w = Walker {
        src,
        method_id: method_id.clone(),
        nodes: vec![ExtractedNode {
            id: method_id,
            kind: NodeKind::Method,
            label: sig.to_string(),
            parent: None,
            span: source_span(src, m.span),
        }],
        counters: [0; 6],
    };
    for p in &m.params {
        w.push(NodeKind::Type, p.ty.clone(), 0, p.span);
    }
    w.block(body, 0);
    ExtractedMethod {
        file: file.to_string(),
        nodes: w.nodes,
    }
}

fn source_span(src: &str, s: Span) -> SourceSpan {
    let end_line = s.line + src[s.start..s.end].matches('\n').count() as u32;
    SourceSpan {
        start_line: s.line,
        end_line,
        start_byte: s.start,
        end_byte: s.end,
    }
}

struct Walker<'a> {
    src: &'a str,
    method_id: String,
    nodes: Vec<ExtractedNode>,
    counters: [usize; 6],
}

impl Walker<'_> {
    fn push(&mut self, kind: NodeKind, label: String, parent: usize, span: Span) -> usize {
        self.counters[kind.index()] += 1;
        let id = format!("{}#{}{}", self.method_id, kind.as_str(), self.counters[kind.index()]);
        self.nodes.push(ExtractedNode {
            id,
            kind,
            label,
            parent: Some(parent),
            span: source_span(self.src, span),
        });
        self.nodes.len() - 1
    }

    fn text(&self, s: Span) -> String {
        java::normalize_ws(s.text(self.src))
    }

    fn block(&mut self, b: &Block, parent: usize) {
        for s in &b.stmts {
            self.stmt(s, parent);
        }
    }

    fn local_var(&mut self, v: &LocalVar, parent: usize) {
        for (i, d) in v.declarators.iter().enumerate() {
            let span = if i == 0 { v.span.to(d.span) } else { d.span };
            let node = self.push(NodeKind::Type, v.ty.clone(), parent, span);
            if let Some(init) = &d.init {
                self.expr(init, node);
            }
        }
    }

    fn stmt(&mut self, s: &Stmt, parent: usize) {
        match s {
            Stmt::Block(b) => self.block(b, parent),
            Stmt::LocalVar(v) => self.local_var(v, parent),
            Stmt::If {
                cond,
                then,
                otherwise,
                span,
            } => {
                let node = self.push(NodeKind::If, self.text(cond.span), parent, *span);
                self.expr(cond, node);
                self.stmt(then, node);
                if let Some(e) = otherwise {
                    self.stmt(e, node);
                }
            }
            Stmt::While { cond, body, span } => {
                let node = self.push(NodeKind::Loop, self.text(cond.span), parent, *span);
                self.expr(cond, node);
                self.stmt(body, node);
            }
            Stmt::DoWhile { body, cond, span } => {
                let node = self.push(NodeKind::Loop, self.text(cond.span), parent, *span);
                self.stmt(body, node);
                self.expr(cond, node);
            }
            Stmt::For {
                init,
                cond,
                update,
                body,
                span,
                ..
            } => {
                let label = cond.as_ref().map(|c| self.text(c.span)).unwrap_or_default();
                let node = self.push(NodeKind::Loop, label, parent, *span);
                for i in init {
                    match i {
                        ForInit::Var(v) => self.local_var(v, node),
                        ForInit::Expr(e) => self.expr(e, node),
                    }
                }
                if let Some(c) = cond {
                    self.expr(c, node);
                }
                for u in update {
                    self.expr(u, node);
                }
                self.stmt(body, node);
            }
            Stmt::ForEach {
                var,
                iterable,
                header,
                body,
                span,
            } => {
                let node = self.push(NodeKind::Loop, self.text(*header), parent, *span);
                self.local_var(var, node);
                self.expr(iterable, node);
                self.stmt(body, node);
            }
            Stmt::Try {
                resources,
                body,
                catches,
                finally,
                ..
            } => {
                for r in resources {
                    self.local_var(r, parent);
                }
                self.block(body, parent);
                for c in catches {
                    let node = self.push(NodeKind::Catch, c.types.join("|"), parent, c.span);
                    self.block(&c.body, node);
                }
                if let Some(f) = finally {
                    self.block(f, parent);
                }
            }
            Stmt::Return(e, _) => {
                if let Some(e) = e {
                    self.expr(e, parent);
                }
            }
            Stmt::Throw(e, _) | Stmt::Expr(e, _) => self.expr(e, parent),
            Stmt::Synchronized(e, b, _) => {
                self.expr(e, parent);
                self.block(b, parent);
            }
            Stmt::Labeled(inner, _) => self.stmt(inner, parent),
            Stmt::Jump(_) | Stmt::Opaque(_) => {}
        }
    }

    fn expr(&mut self, e: &Expr, parent: usize) {
        match &e.kind {
            ExprKind::Call { name, .. } => {
                let node = self.push(NodeKind::Call, name.clone(), parent, e.span);
                for c in &e.children {
                    self.expr(c, node);
                }
            }
            ExprKind::Opaque => {}
            _ => {
                for c in &e.children {
                    self.expr(c, parent);
                }
            }
        }
    }
}

/// Lists `.java` files under `root` as sorted relative paths.
pub fn java_files(root: &Path) -> std::io::Result<Vec<(String, PathBuf)>> {
    if !root.is_dir() {
        return Err(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("{} is not a directory", root.display()),
        ));
    }
    let mut out = Vec::new();
    for entry in WalkDir::new(root).follow_links(true) {
        let entry = entry.map_err(std::io::Error::other)?;
        let path = entry.path();
        if entry.file_type().is_file() && path.extension().is_some_and(|e| e == "java") {
            let rel = path.strip_prefix(root).unwrap_or(path);
            let rel = rel
                .components()
                .map(|c| c.as_os_str().to_string_lossy().into_owned())
                .collect::<Vec<_>>()
                .join("/");
            out.push((rel, path.to_path_buf()));
        }
    }
    out.sort();
    Ok(out)
}

/// Extracts every `.java` file below `root` into a factbase. Files that fail
/// to read or parse are skipped with a warning and listed in the report.
pub fn extract_repository(root: &Path) -> std::io::Result<(FactBase, ExtractReport)> {
    let files = java_files(root)?;
    let results: Vec<_> = files
        .par_iter()
        .map(|(rel, path)| {
            let src = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let unit = java::parse_source(&src, rel).map_err(|d| d.to_string())?;
            let total = unit.methods().len();
            let methods = extract_facts(&unit, &src, rel);
            Ok::<_, String>((total, methods))
        })
        .collect();
    let mut report = ExtractReport::default();
    let mut methods = Vec::new();
    for ((rel, _), res) in files.iter().zip(results) {
        match res {
            Ok((total, ms)) => {
                report.files_parsed += 1;
                report.methods_parsed += ms.len();
                report.methods_skipped += total - ms.len();
                methods.extend(ms);
            }
            Err(e) => {
                log::warn!("skipping {rel}: {e}");
                report.files_skipped.push((rel.clone(), e));
            }
        }
    }
    Ok((FactBase::build(methods), report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_method_has_only_methoddec() {
        let ms = extract_source("public void f(){}", "F.java").unwrap();
        assert_eq!(ms.len(), 1);
        let facts: Vec<String> = ms[0].facts().iter().map(|f| f.to_string()).collect();
        assert_eq!(facts, ["methoddec(F.java#f())."]);
    }

    #[test]
    fn ids_disambiguate_owner_and_overloads() {
        let src = "class A { void f(int x){} void f(int x){} class B { void g(){} } }\nclass C { void h(){} }";
        let ms = extract_source(src, "p/A.java").unwrap();
        let ids: Vec<&str> = ms.iter().map(|m| m.id()).collect();
        assert_eq!(
            ids,
            [
                "p/A.java#f(int)",
                "p/A.java#f(int)~2",
                "p/A.java#B.g()",
                "p/A.java#C.h()"
            ]
        );
    }

    #[test]
    fn nested_calls_and_declarations() {
        let src = "class T { void f() { int a = g(h(1)), b; for (String s : list()) { if (s != null) x.y(); } } }";
        let m = &extract_source(src, "T.java").unwrap()[0];
        let shape: Vec<(String, Option<usize>)> = m
            .nodes
            .iter()
            .map(|n| (format!("{}:{}", n.kind, n.label), n.parent))
            .collect();
        assert_eq!(
            shape,
            [
                ("method:f()".to_string(), None),
                ("type:int".to_string(), Some(0)),
                ("call:g".to_string(), Some(1)),
                ("call:h".to_string(), Some(2)),
                ("type:int".to_string(), Some(0)),
                ("loop:String s : list()".to_string(), Some(0)),
                ("type:String".to_string(), Some(5)),
                ("call:list".to_string(), Some(5)),
                ("if:s != null".to_string(), Some(5)),
                ("call:y".to_string(), Some(8)),
            ]
        );
    }

    #[test]
    fn catch_clauses_and_lambdas() {
        let src = "class T { void f() { try { run(() -> g()); } catch (A | B e) { log(e); } } }";
        let m = &extract_source(src, "T.java").unwrap()[0];
        let labels: Vec<String> = m.nodes.iter().map(|n| format!("{}:{}", n.kind, n.label)).collect();
        assert_eq!(labels, ["method:f()", "call:run", "catch:A|B", "call:log"]);
        assert_eq!(m.nodes[3].parent, Some(2));
    }
}
