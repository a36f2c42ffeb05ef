//! Indexed, immutable fact storage plus the flat-file round trip.
//!
//! Nodes are numbered by a global pre-order over all methods, so a node's
//! descendants occupy the contiguous range `(idx, end]`. Containment and
//! ordering queries reduce to integer comparisons on those ranges.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::extract::{ExtractedMethod, ExtractedNode, Fact, NodeKind, SourceSpan};
use crate::strings::unquote_at;

pub type NodeIdx = u32;

#[derive(Debug, Clone)]
pub struct NodeInfo {
    pub id: String,
    pub kind: NodeKind,
    label: u32,
    /// Index into [`FactBase::methods`].
    pub method: u32,
    pub parent: Option<NodeIdx>,
    pub prev_sibling: Option<NodeIdx>,
    pub next_sibling: Option<NodeIdx>,
    /// Last descendant in pre-order (the node itself for leaves).
    pub end: NodeIdx,
    pub depth: u32,
    pub span: SourceSpan,
}

#[derive(Debug, Clone)]
pub struct MethodInfo {
    pub node: NodeIdx,
    pub file: String,
}

#[derive(Debug, Clone, Default)]
pub struct FactBase {
    nodes: Vec<NodeInfo>,
    methods: Vec<MethodInfo>,
    labels: Vec<String>,
    label_ids: HashMap<String, u32>,
    by_id: HashMap<String, NodeIdx>,
    by_kind: [Vec<NodeIdx>; 6],
    by_label: HashMap<(NodeKind, u32), Vec<NodeIdx>>,
    fact_count: usize,
    fingerprint: String,
}

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{line}: {message}")]
    Malformed { file: String, line: usize, message: String },
    #[error("metadata invalid: {0}")]
    Invalid(String),
}

impl FactBase {
    /// Builds the indexes. Node ids must be unique across `methods`.
    pub fn build(methods: Vec<ExtractedMethod>) -> FactBase {
        let mut fb = FactBase::default();
        let mut text = String::new();
        for m in &methods {
            let base = fb.nodes.len() as NodeIdx;
            let mi = fb.methods.len() as u32;
            fb.methods.push(MethodInfo {
                node: base,
                file: m.file.clone(),
            });
            let mut last_child: HashMap<usize, NodeIdx> = HashMap::new();
            for (i, n) in m.nodes.iter().enumerate() {
                let idx = base + i as NodeIdx;
                let label = fb.intern(&n.label);
                let parent = n.parent.map(|p| base + p as NodeIdx);
                let depth = parent.map_or(0, |p| fb.nodes[p as usize].depth + 1);
                let prev = n.parent.and_then(|p| last_child.insert(p, idx));
                if let Some(p) = prev {
                    fb.nodes[p as usize].next_sibling = Some(idx);
                }
                fb.nodes.push(NodeInfo {
                    id: n.id.clone(),
                    kind: n.kind,
                    label,
                    method: mi,
                    parent,
                    prev_sibling: prev,
                    next_sibling: None,
                    end: idx,
                    depth,
                    span: n.span,
                });
                fb.by_id.insert(n.id.clone(), idx);
                fb.by_kind[n.kind.index()].push(idx);
                fb.by_label.entry((n.kind, label)).or_default().push(idx);
            }
            // children follow parents, so a reverse sweep settles subtree ends
            for i in (0..m.nodes.len()).rev() {
                let idx = base as usize + i;
                if let Some(p) = fb.nodes[idx].parent {
                    let e = fb.nodes[idx].end;
                    let pe = &mut fb.nodes[p as usize].end;
                    *pe = (*pe).max(e);
                }
            }
            for f in m.facts() {
                fb.fact_count += 1;
                let _ = writeln!(text, "{f}");
            }
        }
        fb.fingerprint = hex::encode(Sha256::digest(text.as_bytes()));
        fb
    }

    fn intern(&mut self, s: &str) -> u32 {
        if let Some(&i) = self.label_ids.get(s) {
            return i;
        }
        let i = self.labels.len() as u32;
        self.labels.push(s.to_string());
        self.label_ids.insert(s.to_string(), i);
        i
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn fact_count(&self) -> usize {
        self.fact_count
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Hex SHA-256 of the canonical fact text.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn node(&self, idx: NodeIdx) -> &NodeInfo {
        &self.nodes[idx as usize]
    }

    pub fn nodes(&self) -> &[NodeInfo] {
        &self.nodes
    }

    pub fn label(&self, idx: NodeIdx) -> &str {
        &self.labels[self.nodes[idx as usize].label as usize]
    }

    pub fn lookup(&self, id: &str) -> Option<NodeIdx> {
        self.by_id.get(id).copied()
    }

    pub fn methods(&self) -> &[MethodInfo] {
        &self.methods
    }

    /// Method node indices in pre-order.
    pub fn method_nodes(&self) -> impl Iterator<Item = NodeIdx> + '_ {
        self.methods.iter().map(|m| m.node)
    }

    pub fn method_of(&self, idx: NodeIdx) -> NodeIdx {
        self.methods[self.nodes[idx as usize].method as usize].node
    }

    /// The method's own node range, root included.
    pub fn method_range(&self, method: NodeIdx) -> RangeInclusive<NodeIdx> {
        method..=self.nodes[method as usize].end
    }

    pub fn file_of(&self, idx: NodeIdx) -> &str {
        &self.methods[self.nodes[idx as usize].method as usize].file
    }

    /// Nodes of one kind, ascending.
    pub fn of_kind(&self, kind: NodeKind) -> &[NodeIdx] {
        &self.by_kind[kind.index()]
    }

    /// Nodes of `kind` whose label equals `label`, ascending.
    pub fn with_label(&self, kind: NodeKind, label: &str) -> &[NodeIdx] {
        self.label_ids
            .get(label)
            .and_then(|l| self.by_label.get(&(kind, *l)))
            .map_or(&[], |v| v.as_slice())
    }

    /// Distinct labels used by nodes of `kind`.
    pub fn labels_of_kind(&self, kind: NodeKind) -> impl Iterator<Item = (&str, &[NodeIdx])> {
        self.by_label
            .iter()
            .filter(move |((k, _), _)| *k == kind)
            .map(|((_, l), v)| (self.labels[*l as usize].as_str(), v.as_slice()))
    }

    /// Strict transitive containment.
    pub fn contains(&self, a: NodeIdx, b: NodeIdx) -> bool {
        a < b && b <= self.nodes[a as usize].end
    }

    /// `a` precedes `b` in pre-order within one method and does not contain it.
    pub fn before(&self, a: NodeIdx, b: NodeIdx) -> bool {
        let na = &self.nodes[a as usize];
        na.method == self.nodes[b as usize].method && b > na.end
    }

    pub fn parent(&self, a: NodeIdx, b: NodeIdx) -> bool {
        self.nodes[b as usize].parent == Some(a)
    }

    pub fn next(&self, a: NodeIdx, b: NodeIdx) -> bool {
        self.nodes[a as usize].next_sibling == Some(b)
    }

    pub fn children(&self, a: NodeIdx) -> impl Iterator<Item = NodeIdx> + '_ {
        let first = if self.nodes[a as usize].end > a {
            Some(a + 1)
        } else {
            None
        };
        std::iter::successors(first, move |&c| self.nodes[c as usize].next_sibling)
    }

    pub fn ancestors(&self, a: NodeIdx) -> impl Iterator<Item = NodeIdx> + '_ {
        std::iter::successors(self.nodes[a as usize].parent, move |&p| self.nodes[p as usize].parent)
    }

    /// Reconstructs the extraction records, method by method.
    pub fn extracted_methods(&self) -> Vec<ExtractedMethod> {
        self.methods
            .iter()
            .map(|m| {
                let range = self.method_range(m.node);
                let nodes = range
                    .clone()
                    .map(|i| {
                        let n = &self.nodes[i as usize];
                        ExtractedNode {
                            id: n.id.clone(),
                            kind: n.kind,
                            label: self.label(i).to_string(),
                            parent: n.parent.map(|p| (p - m.node) as usize),
                            span: n.span,
                        }
                    })
                    .collect();
                ExtractedMethod {
                    file: m.file.clone(),
                    nodes,
                }
            })
            .collect()
    }

    /// Canonical fact file text.
    pub fn facts_text(&self) -> String {
        let mut out = String::new();
        for m in self.extracted_methods() {
            for f in m.facts() {
                let _ = writeln!(out, "{f}");
            }
        }
        out
    }

    /// Sidecar metadata text (see `docs/formats.md`).
    pub fn meta_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "facet-meta\t1");
        let _ = writeln!(out, "fingerprint\t{}", self.fingerprint);
        let _ = writeln!(
            out,
            "counts\t{}\t{}\t{}",
            self.methods.len(),
            self.nodes.len(),
            self.fact_count
        );
        for (mi, m) in self.methods.iter().enumerate() {
            let _ = writeln!(out, "method\t{mi}\t{}\t{}", m.node, m.file);
            for i in self.method_range(m.node) {
                let n = &self.nodes[i as usize];
                let parent = n.parent.map_or("-".to_string(), |p| p.to_string());
                let s = n.span;
                let _ = writeln!(
                    out,
                    "node\t{i}\t{}\t{}\t{parent}\t{}\t{}\t{}\t{}\t{}\t{}",
                    n.kind, n.id, n.end, n.depth, s.start_line, s.end_line, s.start_byte, s.end_byte
                );
            }
        }
        let _ = writeln!(out, "end\t{}", self.nodes.len());
        out
    }

    /// Writes `path` (facts) and `path.meta` (metadata).
    pub fn save(&self, path: &Path) -> Result<(), StoreError> {
        let io = |p: &Path| {
            let p = p.to_path_buf();
            move |source| StoreError::Io { path: p, source }
        };
        std::fs::write(path, self.facts_text()).map_err(io(path))?;
        let meta = meta_path(path);
        std::fs::write(&meta, self.meta_text()).map_err(io(&meta))?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<FactBase, StoreError> {
        let facts = std::fs::read_to_string(path).map_err(|source| StoreError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let meta_file = meta_path(path);
        let meta = match std::fs::read_to_string(&meta_file) {
            Ok(m) => Some(m),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(source) => {
                return Err(StoreError::Io {
                    path: meta_file,
                    source,
                })
            }
        };
        let name = path.display().to_string();
        FactBase::from_texts(&facts, meta.as_deref(), &name)
    }

    /// Parses and validates a fact file and its metadata.
    pub fn from_texts(facts: &str, meta: Option<&str>, name: &str) -> Result<FactBase, StoreError> {
        let mut parsed = Vec::new();
        for (i, line) in facts.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let f = parse_fact(line).map_err(|message| StoreError::Malformed {
                file: name.to_string(),
                line: i + 1,
                message,
            })?;
            parsed.push((i + 1, f));
        }
        let Some(meta) = meta else {
            if parsed.is_empty() {
                return Ok(FactBase::build(Vec::new()));
            }
            return Err(StoreError::Invalid(format!("{name}.meta is missing")));
        };
        let methods = parse_meta(meta, &parsed)?;
        let fb = FactBase::build(methods);
        let rendered: Vec<Fact> = fb.extracted_methods().iter().flat_map(|m| m.facts()).collect();
        for (k, (line, f)) in parsed.iter().enumerate() {
            if rendered.get(k) != Some(f) {
                return Err(StoreError::Malformed {
                    file: name.to_string(),
                    line: *line,
                    message: "fact does not agree with metadata (not in canonical order?)".into(),
                });
            }
        }
        if rendered.len() != parsed.len() {
            return Err(StoreError::Invalid(format!(
                "metadata describes {} facts, file has {}",
                rendered.len(),
                parsed.len()
            )));
        }
        let expected = meta
            .lines()
            .find_map(|l| l.strip_prefix("fingerprint\t"))
            .unwrap_or_default();
        if expected != fb.fingerprint() {
            return Err(StoreError::Invalid(format!(
                "fingerprint mismatch: metadata {expected}, facts {}",
                fb.fingerprint()
            )));
        }
        if fb.meta_text() != meta {
            return Err(StoreError::Invalid(
                "intervals, depths or counts disagree with the facts".into(),
            ));
        }
        Ok(fb)
    }
}

pub fn meta_path(facts: &Path) -> PathBuf {
    let mut s = facts.as_os_str().to_os_string();
    s.push(".meta");
    PathBuf::from(s)
}

/// Parses one `pred(arg,arg).` line.
pub fn parse_fact(line: &str) -> Result<Fact, String> {
    let line = line.trim();
    let open = line.find('(').ok_or("expected `(`")?;
    let pred = &line[..open];
    let body = line.strip_suffix(").").ok_or("expected `).` at end of fact")?;
    let args = split_args(&body[open + 1..])?;
    let want = if pred == "methoddec" { 1 } else { 2 };
    if args.len() != want {
        return Err(format!("`{pred}` takes {want} argument(s), found {}", args.len()));
    }
    let node = |a: &Arg| match a {
        Arg::Bare(s) => Ok(s.clone()),
        Arg::Str(_) => Err(format!("`{pred}` expects a node id, found a string")),
    };
    match pred {
        "methoddec" => Ok(Fact::MethodDec(node(&args[0])?)),
        "parent" => Ok(Fact::Parent(node(&args[0])?, node(&args[1])?)),
        "next" => Ok(Fact::Next(node(&args[0])?, node(&args[1])?)),
        p => {
            let kind = NodeKind::from_predicate(p).ok_or_else(|| format!("unknown predicate `{p}`"))?;
            match &args[1] {
                Arg::Str(s) => Ok(Fact::Feature(kind, node(&args[0])?, s.clone())),
                Arg::Bare(_) => Err(format!("`{p}` expects a quoted second argument")),
            }
        }
    }
}

enum Arg {
    Bare(String),
    Str(String),
}

fn split_args(s: &str) -> Result<Vec<Arg>, String> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    loop {
        if bytes.get(i) == Some(&b'"') {
            let (v, end) = unquote_at(s, i)?;
            out.push(Arg::Str(v));
            i = end;
        } else {
            let start = i;
            let mut depth = 0i32;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    b',' if depth == 0 => break,
                    _ => {}
                }
                i += 1;
            }
            let arg = &s[start..i];
            if arg.is_empty() || depth != 0 {
                return Err(format!("malformed argument `{arg}`"));
            }
            out.push(Arg::Bare(arg.to_string()));
        }
        match bytes.get(i) {
            None => return Ok(out),
            Some(b',') => i += 1,
            Some(_) => return Err(format!("unexpected text after argument at `{}`", &s[i..])),
        }
    }
}

fn parse_meta(meta: &str, facts: &[(usize, Fact)]) -> Result<Vec<ExtractedMethod>, StoreError> {
    let bad = |line: usize, msg: String| StoreError::Invalid(format!("line {line}: {msg}"));
    let mut labels: HashMap<&str, &str> = HashMap::new();
    for (_, f) in facts {
        if let Fact::Feature(_, id, l) = f {
            labels.insert(id, l);
        }
    }
    let mut lines = meta.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, "facet-meta\t1")) => {}
        _ => return Err(StoreError::Invalid("missing `facet-meta 1` header".into())),
    }
    let mut methods: Vec<ExtractedMethod> = Vec::new();
    let mut counts: Option<(usize, usize)> = None;
    let mut ended = false;
    let mut node_total = 0usize;
    for (ln, line) in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        match cols[0] {
            "fingerprint" => {}
            "counts" if cols.len() == 4 => {
                let p = |s: &str| s.parse::<usize>().map_err(|e| bad(ln, e.to_string()));
                counts = Some((p(cols[1])?, p(cols[2])?));
            }
            "method" if cols.len() == 4 => {
                let start: usize = cols[2].parse().map_err(|_| bad(ln, "bad node index".into()))?;
                if start != node_total {
                    return Err(bad(ln, format!("method starts at {start}, expected {node_total}")));
                }
                methods.push(ExtractedMethod {
                    file: cols[3].to_string(),
                    nodes: Vec::new(),
                });
            }
            "node" if cols.len() == 11 => {
                let m = methods
                    .last_mut()
                    .ok_or_else(|| bad(ln, "node before any method".into()))?;
                let num = |s: &str| s.parse::<usize>().map_err(|_| bad(ln, format!("bad number `{s}`")));
                let idx = num(cols[1])?;
                if idx != node_total {
                    return Err(bad(ln, format!("node index {idx}, expected {node_total}")));
                }
                let kind = NodeKind::parse(cols[2]).ok_or_else(|| bad(ln, format!("unknown kind `{}`", cols[2])))?;
                let id = cols[3].to_string();
                let base = node_total - m.nodes.len();
                let parent = match cols[4] {
                    "-" => None,
                    p => {
                        let p = num(p)?;
                        if p < base || p >= idx {
                            return Err(bad(ln, format!("parent {p} outside method")));
                        }
                        Some(p - base)
                    }
                };
                if (parent.is_none()) != (kind == NodeKind::Method)
                    || (m.nodes.is_empty()) != (kind == NodeKind::Method)
                {
                    return Err(bad(ln, "method root must be first and only root".into()));
                }
                let label = if kind == NodeKind::Method {
                    id.strip_prefix(&m.file)
                        .and_then(|s| s.strip_prefix('#'))
                        .ok_or_else(|| bad(ln, format!("method id `{id}` does not start with its file")))?
                        .to_string()
                } else {
                    labels
                        .get(id.as_str())
                        .ok_or_else(|| bad(ln, format!("no {} fact for `{id}`", kind.predicate())))?
                        .to_string()
                };
                m.nodes.push(ExtractedNode {
                    id,
                    kind,
                    label,
                    parent,
                    span: SourceSpan {
                        start_line: num(cols[7])? as u32,
                        end_line: num(cols[8])? as u32,
                        start_byte: num(cols[9])?,
                        end_byte: num(cols[10])?,
                    },
                });
                node_total += 1;
            }
            "end" if cols.len() == 2 => {
                if cols[1] != node_total.to_string() {
                    return Err(bad(ln, format!("end count {} but {node_total} nodes", cols[1])));
                }
                ended = true;
            }
            _ => return Err(bad(ln, format!("unrecognised line `{line}`"))),
        }
    }
    if !ended {
        return Err(StoreError::Invalid("truncated: missing `end` line".into()));
    }
    match counts {
        Some((m, n)) if m == methods.len() && n == node_total => {}
        _ => return Err(StoreError::Invalid("counts line missing or inconsistent".into())),
    }
    let mut seen = std::collections::HashSet::new();
    for m in &methods {
        for n in &m.nodes {
            if !seen.insert(n.id.as_str()) {
                return Err(StoreError::Invalid(format!("duplicate node id `{}`", n.id)));
            }
        }
    }
    Ok(methods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::extract_source;

    fn fb(src: &str) -> FactBase {
        FactBase::build(extract_source(src, "T.java").unwrap())
    }

    #[test]
    fn intervals_and_relations() {
        let f = fb("class T { void m() { if (a) { g(); } while (b) { h(); } } }");
        let id = |s: &str| f.lookup(&format!("T.java#m(){s}")).unwrap();
        let (m, if1, g, loop1, h) = (id(""), id("#if1"), id("#call1"), id("#loop1"), id("#call2"));
        assert!(f.contains(m, g) && f.contains(if1, g) && !f.contains(if1, h));
        assert!(f.before(if1, loop1) && f.before(g, h) && f.before(g, loop1));
        assert!(!f.before(if1, g) && !f.before(loop1, if1));
        assert!(f.next(if1, loop1) && f.parent(if1, g));
        assert_eq!(f.children(m).collect::<Vec<_>>(), [if1, loop1]);
        assert_eq!(f.ancestors(h).collect::<Vec<_>>(), [loop1, m]);
    }

    #[test]
    fn text_round_trip() {
        let f = fb("class T { void m(String s) { if (s.equals(\"a\\\"b\")) { g(); } } int n() { return 1; } }");
        let back = FactBase::from_texts(&f.facts_text(), Some(&f.meta_text()), "t").unwrap();
        assert_eq!(back.facts_text(), f.facts_text());
        assert_eq!(back.meta_text(), f.meta_text());
        assert_eq!(back.fingerprint(), f.fingerprint());
    }

    #[test]
    fn empty_file_is_empty_factbase() {
        let f = FactBase::from_texts("", None, "t").unwrap();
        assert!(f.is_empty());
        assert_eq!(f.fact_count(), 0);
    }

    #[test]
    fn truncated_meta_is_rejected() {
        let f = fb("class T { void m() { if (a) g(); } }");
        let meta = f.meta_text();
        let cut: Vec<&str> = meta.lines().collect();
        let truncated = cut[..cut.len() - 1].join("\n");
        let err = FactBase::from_texts(&f.facts_text(), Some(&truncated), "t").unwrap_err();
        assert!(err.to_string().contains("truncated"), "{err}");
    }

    #[test]
    fn malformed_fact_reports_line() {
        let err = FactBase::from_texts("methoddec(A.java#f()).\nif(A.java#f()#if1 \"x\").\n", None, "t").unwrap_err();
        match err {
            StoreError::Malformed { line, .. } => assert_eq!(line, 2),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn ids_with_commas_parse() {
        let f = parse_fact("parent(A.java#f(Map<K,V>,int),A.java#f(Map<K,V>,int)#if1).").unwrap();
        assert_eq!(
            f,
            Fact::Parent("A.java#f(Map<K,V>,int)".into(), "A.java#f(Map<K,V>,int)#if1".into())
        );
    }
}
