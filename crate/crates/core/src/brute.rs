//! Exhaustive reference evaluator used as a test oracle.
//!
//! Works only from the fact list: `contains` is the transitive closure of
//! `parent`, and `before` comes from a pre-order rebuilt by following
//! `parent` and `next` chains. Each atom is materialised into its full
//! extension and the body is joined tuple by tuple in textual order.

use std::collections::{BTreeSet, HashMap, HashSet};

use regex::Regex;
use thiserror::Error;

use crate::extract::{Fact, NodeKind};
use crate::factbase::FactBase;
use crate::query::{Hypothesis, Pred, Term};

/// Largest extension a single atom may have.
pub const MAX_EXTENSION: usize = 10_000;
/// Largest number of partial bindings explored.
pub const MAX_STEPS: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BruteError {
    #[error("refusing: `{atom}` has {size} tuples (limit {MAX_EXTENSION})")]
    TooLarge { atom: String, size: usize },
    #[error("refusing: more than {MAX_STEPS} join steps")]
    TooManySteps,
    #[error("invalid regex in `{0}`")]
    Regex(String),
}

struct Relations {
    methods: Vec<String>,
    labeled: HashMap<(NodeKind, String), String>,
    contains: HashSet<(String, String)>,
    before: HashSet<(String, String)>,
    parent: HashSet<(String, String)>,
    next: HashSet<(String, String)>,
}

fn relations(fb: &FactBase) -> Relations {
    let facts: Vec<Fact> = fb.extracted_methods().iter().flat_map(|m| m.facts()).collect();
    let mut methods = Vec::new();
    let mut labeled = HashMap::new();
    let mut parent = HashSet::new();
    let mut next = HashSet::new();
    for f in facts {
        match f {
            Fact::MethodDec(m) => methods.push(m),
            Fact::Feature(k, id, l) => {
                labeled.insert((k, id), l);
            }
            Fact::Parent(a, b) => {
                parent.insert((a, b));
            }
            Fact::Next(a, b) => {
                next.insert((a, b));
            }
        }
    }
    // transitive closure of parent
    let mut children: HashMap<&str, Vec<&str>> = HashMap::new();
    for (a, b) in &parent {
        children.entry(a.as_str()).or_default().push(b.as_str());
    }
    let mut contains = HashSet::new();
    for a in children.keys() {
        let mut stack = children[a].clone();
        while let Some(d) = stack.pop() {
            contains.insert((a.to_string(), d.to_string()));
            stack.extend(children.get(d).into_iter().flatten());
        }
    }
    // pre-order: children ordered by their next chain
    let next_of: HashMap<&str, &str> = next.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let has_prev: HashSet<&str> = next.iter().map(|(_, b)| b.as_str()).collect();
    let mut before = HashSet::new();
    for m in &methods {
        let mut order: Vec<&str> = Vec::new();
        let mut stack = vec![m.as_str()];
        while let Some(n) = stack.pop() {
            order.push(n);
            let kids = children.get(n).cloned().unwrap_or_default();
            let mut chain = Vec::new();
            let mut cur = kids.iter().copied().find(|k| !has_prev.contains(k));
            while let Some(c) = cur {
                chain.push(c);
                cur = next_of.get(c).copied();
            }
            assert_eq!(chain.len(), kids.len(), "broken next chain under {n}");
            stack.extend(chain.into_iter().rev());
        }
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                let (a, b) = (order[i].to_string(), order[j].to_string());
                if !contains.contains(&(a.clone(), b.clone())) {
                    before.insert((a, b));
                }
            }
        }
    }
    Relations {
        methods,
        labeled,
        contains,
        before,
        parent,
        next,
    }
}

fn anchored(pattern: &str) -> Result<Regex, regex::Error> {
    let mut p = String::new();
    let mut it = pattern.chars();
    while let Some(c) = it.next() {
        if c == '\\' {
            p.push(c);
            p.extend(it.next());
        } else if !c.is_whitespace() {
            p.push(c);
        }
    }
    Regex::new(&format!("^(?:{p})$"))
}

/// Evaluates by materialising every atom and joining exhaustively.
pub fn brute_force_evaluate(h: &Hypothesis, fb: &FactBase) -> Result<BTreeSet<String>, BruteError> {
    let rel = relations(fb);
    // each atom becomes a list of argument tuples (node positions only)
    let mut exts: Vec<Vec<Vec<String>>> = Vec::new();
    for atom in h.atoms() {
        let ext: Vec<Vec<String>> = match atom.pred {
            Pred::MethodDec => rel.methods.iter().map(|m| vec![m.clone()]).collect(),
            Pred::Contains | Pred::Before | Pred::Parent | Pred::Next => {
                let set = match atom.pred {
                    Pred::Contains => &rel.contains,
                    Pred::Before => &rel.before,
                    Pred::Parent => &rel.parent,
                    _ => &rel.next,
                };
                set.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect()
            }
            p => {
                let kind = p.feature_kind().expect("feature predicate");
                let Term::Str(s) = &atom.args[1] else { unreachable!() };
                let re = if p.is_regex() {
                    Some(anchored(s).map_err(|_| BruteError::Regex(atom.to_string()))?)
                } else {
                    None
                };
                rel.labeled
                    .iter()
                    .filter(|((k, _), l)| {
                        *k == kind
                            && match &re {
                                Some(r) => r.is_match(&l.chars().filter(|c| !c.is_whitespace()).collect::<String>()),
                                None => *l == s,
                            }
                    })
                    .map(|((_, id), _)| vec![id.clone()])
                    .collect()
            }
        };
        if ext.len() > MAX_EXTENSION {
            return Err(BruteError::TooLarge {
                atom: atom.to_string(),
                size: ext.len(),
            });
        }
        exts.push(ext);
    }
    let atoms: Vec<Vec<&Term>> = h
        .atoms()
        .map(|a| a.args.iter().filter(|t| !matches!(t, Term::Str(_))).collect())
        .collect();
    let mut out = BTreeSet::new();
    let mut steps = 0usize;
    let mut binding: HashMap<String, String> = HashMap::new();
    join(0, &atoms, &exts, &mut binding, &mut out, h.head(), &mut steps)?;
    Ok(out)
}

fn join(
    i: usize,
    atoms: &[Vec<&Term>],
    exts: &[Vec<Vec<String>>],
    binding: &mut HashMap<String, String>,
    out: &mut BTreeSet<String>,
    head: &str,
    steps: &mut usize,
) -> Result<(), BruteError> {
    if i == atoms.len() {
        out.insert(binding[head].clone());
        return Ok(());
    }
    'tuples: for tuple in &exts[i] {
        *steps += 1;
        if *steps > MAX_STEPS {
            return Err(BruteError::TooManySteps);
        }
        let mut added = Vec::new();
        for (t, v) in atoms[i].iter().zip(tuple) {
            let ok = match t {
                Term::Node(c) => c == v,
                Term::Var(x) => match binding.get(x) {
                    Some(b) => b == v,
                    None => {
                        binding.insert(x.clone(), v.clone());
                        added.push(x.clone());
                        true
                    }
                },
                Term::Str(_) => unreachable!(),
            };
            if !ok {
                for x in added {
                    binding.remove(&x);
                }
                continue 'tuples;
            }
        }
        join(i + 1, atoms, exts, binding, out, head, steps)?;
        for x in added {
            binding.remove(&x);
        }
    }
    Ok(())
}
