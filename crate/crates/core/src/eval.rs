//! Indexed query evaluation.
//!
//! Each query variable gets a candidate domain from its unary atoms (kind,
//! exact label, regex match set). Methods are then tested one at a time by a
//! backtracking search that binds variables in a fixed order, generating
//! candidates from the tightest relation to an already-bound variable
//! (children range, ancestor chain, sibling pointer, successor range).

use std::collections::HashMap;

use thiserror::Error;

use crate::extract::NodeKind;
use crate::factbase::{FactBase, NodeIdx};
use crate::query::{Atom, Hypothesis, Pred, Term};
use crate::regexize::Pattern;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("invalid regex in `{atom}`: {message}")]
    InvalidRegex { atom: String, message: String },
}

#[derive(Debug, Clone, Copy)]
enum Arg {
    Var(usize),
    Const(NodeIdx),
    /// Node constant absent from the factbase.
    Missing,
}

#[derive(Debug, Clone)]
struct Rel {
    pred: Pred,
    a: Arg,
    b: Arg,
}

/// How a variable's candidates are produced once earlier variables are bound.
#[derive(Debug, Clone, Copy)]
enum Gen {
    /// Descendants of the bound node: contains(B, V).
    Inside(usize),
    /// Ancestors of the bound node: contains(V, B).
    Around(usize),
    /// Children of the bound node: parent(B, V).
    ChildOf(usize),
    /// Parent of the bound node: parent(V, B).
    ParentOf(usize),
    NextOf(usize),
    PrevOf(usize),
    /// Nodes after the bound node's subtree: before(B, V).
    After(usize),
    /// Whole method range.
    Method,
}

/// A query compiled against one factbase.
#[derive(Debug)]
pub struct Compiled<'f> {
    fb: &'f FactBase,
    nvars: usize,
    head: usize,
    /// Sorted candidate lists; `None` means any node.
    domains: Vec<Option<Vec<NodeIdx>>>,
    /// Ground unary constraints on constants, checked once.
    ground_ok: bool,
    rels: Vec<Rel>,
    order: Vec<(usize, Gen)>,
    /// Relations to check after binding the variable at each order position.
    checks: Vec<Vec<usize>>,
}

fn intersect(a: &[NodeIdx], b: &[NodeIdx]) -> Vec<NodeIdx> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn unary_set(fb: &FactBase, atom: &Atom) -> Result<Vec<NodeIdx>, EvalError> {
    let kind = atom.pred.feature_kind().expect("unary atom");
    if atom.pred == Pred::MethodDec {
        return Ok(fb.of_kind(NodeKind::Method).to_vec());
    }
    let Term::Str(s) = &atom.args[1] else {
        unreachable!("validated hypothesis")
    };
    if atom.pred.is_regex() {
        let pat = Pattern::new(s).map_err(|e| EvalError::InvalidRegex {
            atom: atom.to_string(),
            message: e.to_string(),
        })?;
        let mut out: Vec<NodeIdx> = fb
            .labels_of_kind(kind)
            .filter(|(l, _)| pat.matches(l))
            .flat_map(|(_, v)| v.iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    } else {
        Ok(fb.with_label(kind, s).to_vec())
    }
}

impl<'f> Compiled<'f> {
    pub fn new(h: &Hypothesis, fb: &'f FactBase) -> Result<Compiled<'f>, EvalError> {
        let vars = h.vars();
        let index: HashMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let arg = |t: &Term| match t {
            Term::Var(v) => Arg::Var(index[v.as_str()]),
            Term::Node(id) => fb.lookup(id).map_or(Arg::Missing, Arg::Const),
            Term::Str(_) => unreachable!("node position"),
        };
        let mut domains: Vec<Option<Vec<NodeIdx>>> = vec![None; vars.len()];
        let mut ground_ok = true;
        let mut rels = Vec::new();
        for atom in h.atoms() {
            if atom.pred.is_binary_relation() {
                rels.push(Rel {
                    pred: atom.pred,
                    a: arg(&atom.args[0]),
                    b: arg(&atom.args[1]),
                });
                continue;
            }
            let set = unary_set(fb, atom)?;
            match arg(&atom.args[0]) {
                Arg::Var(v) => {
                    domains[v] = Some(match domains[v].take() {
                        None => set,
                        Some(d) => intersect(&d, &set),
                    })
                }
                Arg::Const(c) => ground_ok &= set.binary_search(&c).is_ok(),
                Arg::Missing => ground_ok = false,
            }
        }
        let head = index[h.head()];
        let mut c = Compiled {
            fb,
            nvars: vars.len(),
            head,
            domains,
            ground_ok,
            rels,
            order: Vec::new(),
            checks: Vec::new(),
        };
        c.plan();
        Ok(c)
    }

    fn domain_size(&self, v: usize) -> usize {
        self.domains[v].as_ref().map_or(usize::MAX, Vec::len)
    }

    /// Orders variables so each is generated from an already-bound one.
    fn plan(&mut self) {
        let mut bound = vec![false; self.nvars];
        bound[self.head] = true;
        self.order.push((self.head, Gen::Method));
        while self.order.len() < self.nvars {
            let mut best: Option<(u8, usize, usize, Gen)> = None;
            for r in &self.rels {
                let cands: [(Arg, Arg, bool); 2] = [(r.a, r.b, true), (r.b, r.a, false)];
                for (known, unknown, known_first) in cands {
                    let (Arg::Var(u), true) = (unknown, true) else { continue };
                    if bound[u] {
                        continue;
                    }
                    let from = match known {
                        Arg::Var(k) if bound[k] => k,
                        _ => continue,
                    };
                    let (rank, gen) = match (r.pred, known_first) {
                        (Pred::Parent, false) => (0, Gen::ParentOf(from)),
                        (Pred::Next, true) => (0, Gen::NextOf(from)),
                        (Pred::Next, false) => (0, Gen::PrevOf(from)),
                        (Pred::Contains, false) => (1, Gen::Around(from)),
                        (Pred::Parent, true) => (2, Gen::ChildOf(from)),
                        (Pred::Contains, true) => (3, Gen::Inside(from)),
                        (Pred::Before, true) => (4, Gen::After(from)),
                        // before(V, B): scan the method prefix
                        (Pred::Before, false) => (5, Gen::Method),
                        _ => unreachable!(),
                    };
                    let key = (rank, self.domain_size(u), u, gen);
                    if best.is_none_or(|b| (key.0, key.1, key.2) < (b.0, b.1, b.2)) {
                        best = Some(key);
                    }
                }
            }
            let (_, _, v, gen) = match best {
                Some(b) => b,
                // linked only through constants: scan the method
                None => {
                    let v = (0..self.nvars)
                        .filter(|&v| !bound[v])
                        .min_by_key(|&v| self.domain_size(v))
                        .expect("unbound variable");
                    (0, 0, v, Gen::Method)
                }
            };
            bound[v] = true;
            self.order.push((v, gen));
        }
        let mut pos = vec![0; self.nvars];
        for (i, (v, _)) in self.order.iter().enumerate() {
            pos[*v] = i;
        }
        self.checks = vec![Vec::new(); self.nvars];
        for (ri, r) in self.rels.iter().enumerate() {
            let at = |a: Arg| match a {
                Arg::Var(v) => pos[v],
                _ => 0,
            };
            self.checks[at(r.a).max(at(r.b))].push(ri);
        }
    }

    fn holds(&self, r: &Rel, binding: &[NodeIdx]) -> bool {
        let val = |a: Arg| match a {
            Arg::Var(v) => Some(binding[v]),
            Arg::Const(c) => Some(c),
            Arg::Missing => None,
        };
        let (Some(a), Some(b)) = (val(r.a), val(r.b)) else {
            return false;
        };
        match r.pred {
            Pred::Contains => self.fb.contains(a, b),
            Pred::Before => self.fb.before(a, b),
            Pred::Parent => self.fb.parent(a, b),
            Pred::Next => self.fb.next(a, b),
            _ => unreachable!(),
        }
    }

    fn in_domain(&self, v: usize, n: NodeIdx) -> bool {
        self.domains[v].as_ref().is_none_or(|d| d.binary_search(&n).is_ok())
    }

    /// Candidates within `[lo, hi]`, filtered by the domain.
    fn range(&self, v: usize, lo: NodeIdx, hi: NodeIdx, out: &mut Vec<NodeIdx>) {
        if lo > hi {
            return;
        }
        match &self.domains[v] {
            Some(d) => {
                let s = d.partition_point(|&x| x < lo);
                let e = d.partition_point(|&x| x <= hi);
                out.extend_from_slice(&d[s..e]);
            }
            None => out.extend(lo..=hi),
        }
    }

    fn candidates(&self, step: usize, binding: &[NodeIdx], method: NodeIdx) -> Vec<NodeIdx> {
        let (v, gen) = self.order[step];
        let fb = self.fb;
        let mut out = Vec::new();
        let single = |n: Option<NodeIdx>, out: &mut Vec<NodeIdx>| {
            if let Some(n) = n {
                if self.in_domain(v, n) {
                    out.push(n);
                }
            }
        };
        match gen {
            Gen::Method => {
                let end = fb.node(method).end;
                self.range(v, method, end, &mut out);
            }
            Gen::Inside(b) => {
                let n = binding[b];
                self.range(v, n + 1, fb.node(n).end, &mut out);
            }
            Gen::After(b) => {
                let n = binding[b];
                self.range(v, fb.node(n).end + 1, fb.node(method).end, &mut out);
            }
            Gen::Around(b) => {
                for a in fb.ancestors(binding[b]) {
                    single(Some(a), &mut out);
                }
            }
            Gen::ChildOf(b) => {
                for c in fb.children(binding[b]) {
                    single(Some(c), &mut out);
                }
            }
            Gen::ParentOf(b) => single(fb.node(binding[b]).parent, &mut out),
            Gen::NextOf(b) => single(fb.node(binding[b]).next_sibling, &mut out),
            Gen::PrevOf(b) => single(fb.node(binding[b]).prev_sibling, &mut out),
        }
        out
    }

    fn search(&self, step: usize, binding: &mut Vec<NodeIdx>, method: NodeIdx) -> bool {
        if step == self.order.len() {
            return true;
        }
        let v = self.order[step].0;
        for n in self.candidates(step, binding, method) {
            binding[v] = n;
            if self.checks[step].iter().all(|&r| self.holds(&self.rels[r], binding))
                && self.search(step + 1, binding, method)
            {
                return true;
            }
        }
        false
    }

    /// Does method node `m` satisfy the query?
    pub fn matches(&self, m: NodeIdx) -> bool {
        if !self.ground_ok || !self.in_domain(self.head, m) || self.fb.node(m).kind != NodeKind::Method {
            return false;
        }
        // cheap prune: every constrained variable needs a candidate in this method
        let end = self.fb.node(m).end;
        for (v, d) in self.domains.iter().enumerate() {
            if v == self.head {
                continue;
            }
            if let Some(d) = d {
                let s = d.partition_point(|&x| x < m);
                if s == d.len() || d[s] > end {
                    return false;
                }
            }
        }
        let mut binding = vec![0; self.nvars];
        binding[self.head] = m;
        self.checks[0].iter().all(|&r| self.holds(&self.rels[r], &binding)) && self.search(1, &mut binding, m)
    }

    /// All matching method nodes, ascending.
    pub fn run(&self) -> Vec<NodeIdx> {
        if !self.ground_ok {
            return Vec::new();
        }
        let heads: Vec<NodeIdx> = match &self.domains[self.head] {
            Some(d) => d.clone(),
            None => self.fb.method_nodes().collect(),
        };
        heads.into_iter().filter(|&m| self.matches(m)).collect()
    }
}

/// Method ids satisfying `h`, in factbase order.
pub fn evaluate(h: &Hypothesis, fb: &FactBase) -> Result<Vec<String>, EvalError> {
    let c = Compiled::new(h, fb)?;
    Ok(c.run().into_iter().map(|m| fb.node(m).id.clone()).collect())
}

/// Method node indices satisfying `h`.
pub fn evaluate_nodes(h: &Hypothesis, fb: &FactBase) -> Result<Vec<NodeIdx>, EvalError> {
    Ok(Compiled::new(h, fb)?.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::extract_source;
    use crate::query::parse_query;

    fn fb() -> FactBase {
        let src = "class T {
            void a() { if (x != null) { if (y >= 0) { f(); } } }
            void b() { if (y >= 0) { } if (x != null) { f(); } }
            void c() { while (k) { f(); g(); } }
        }";
        FactBase::build(extract_source(src, "T.java").unwrap())
    }

    fn run(q: &str) -> Vec<String> {
        let fb = fb();
        evaluate(&parse_query(q).unwrap(), &fb)
            .unwrap()
            .into_iter()
            .map(|s| s.trim_start_matches("T.java#").to_string())
            .collect()
    }

    #[test]
    fn containment_and_order() {
        assert_eq!(run("query(X) :- methoddec(X)."), ["a()", "b()", "c()"]);
        assert_eq!(
            run(r#"query(X) :- methoddec(X), contains(X,I), iflike(I,".*!=null"), contains(I,C), methodcall(C,"f")."#),
            ["a()", "b()"]
        );
        assert_eq!(
            run(r#"query(X) :- methoddec(X), contains(X,I), iflike(I,".*!=null"), contains(I,J), iflike(J,".*>=0")."#),
            ["a()"]
        );
        assert_eq!(
            run(r#"query(X) :- methoddec(X), contains(X,I), iflike(I,".*>=0"), before(I,C), methodcall(C,"f")."#),
            ["b()"]
        );
        assert_eq!(
            run(r#"query(X) :- methoddec(X), contains(X,A), methodcall(A,"f"), next(A,B), methodcall(B,"g")."#),
            ["c()"]
        );
        assert_eq!(
            run(r#"query(X) :- methoddec(X), contains(X,C), methodcall(C,"f"), parent(L,C), looplike(L,".*")."#),
            ["c()"]
        );
    }

    #[test]
    fn errors_and_empty() {
        let fb = fb();
        let h = parse_query(r#"query(X) :- methoddec(X), contains(X,I), iflike(I,"(")."#).unwrap();
        let e = evaluate(&h, &fb).unwrap_err();
        assert!(e.to_string().contains(r#"iflike(I,"(")"#), "{e}");
        let empty = FactBase::build(Vec::new());
        assert!(evaluate(&parse_query("query(X) :- methoddec(X).").unwrap(), &empty)
            .unwrap()
            .is_empty());
    }
}
