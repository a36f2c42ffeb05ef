//! Random factbases and queries for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::extract::{ExtractedMethod, ExtractedNode, NodeKind, SourceSpan};
use crate::query::{Atom, Hypothesis, Literal, Pred, Provenance, Term};

const CONDITIONS: &[&str] = &["x >= 0", "this.ptr >= 0", "a != null", "i < n", "b == null", "flag"];
const LOOPS: &[&str] = &["i < n", "it.hasNext()", "x != null", ""];
const NAMES: &[&str] = &["get", "put", "size", "close"];
const TYPES: &[&str] = &["int", "String", "int[]", "List<String>"];
const CATCHES: &[&str] = &["IOException", "Exception"];
const PATTERNS: &[&str] = &[
    ".*",
    ".*>=0",
    "this.*",
    ".*!=null",
    ".*<.*",
    ".*\\.hasNext\\(\\)",
    "ZZZ",
];

const KINDS: [NodeKind; 5] = [
    NodeKind::If,
    NodeKind::Loop,
    NodeKind::Call,
    NodeKind::Type,
    NodeKind::Catch,
];

fn label_for<R: Rng>(rng: &mut R, kind: NodeKind) -> String {
    let pool = match kind {
        NodeKind::If => CONDITIONS,
        NodeKind::Loop => LOOPS,
        NodeKind::Call => NAMES,
        NodeKind::Type => TYPES,
        NodeKind::Catch => CATCHES,
        NodeKind::Method => unreachable!(),
    };
    pool.choose(rng).unwrap().to_string()
}

/// A method tree with up to `max_nodes` body nodes, built in pre-order.
pub fn random_method<R: Rng>(rng: &mut R, file: &str, index: usize, max_nodes: usize) -> ExtractedMethod {
    let method_id = format!("{file}#m{index}()");
    let mut nodes = vec![ExtractedNode {
        id: method_id.clone(),
        kind: NodeKind::Method,
        label: format!("m{index}()"),
        parent: None,
        span: SourceSpan::default(),
    }];
    let mut counters = [0usize; 6];
    // rightmost path: the only legal parents for the next pre-order node
    let mut path = vec![0usize];
    for _ in 0..rng.gen_range(0..=max_nodes) {
        let depth = rng.gen_range(0..path.len());
        path.truncate(depth + 1);
        let kind = *KINDS.choose(rng).unwrap();
        counters[kind.index()] += 1;
        nodes.push(ExtractedNode {
            id: format!("{method_id}#{}{}", kind.as_str(), counters[kind.index()]),
            kind,
            label: label_for(rng, kind),
            parent: Some(path[depth]),
            span: SourceSpan::default(),
        });
        path.push(nodes.len() - 1);
    }
    ExtractedMethod {
        file: file.to_string(),
        nodes,
    }
}

pub fn random_methods<R: Rng>(rng: &mut R, methods: usize, max_nodes: usize) -> Vec<ExtractedMethod> {
    (0..methods)
        .map(|i| random_method(rng, &format!("F{}.java", i % 3), i, max_nodes))
        .collect()
}

fn feature_atom<R: Rng>(rng: &mut R, var: &str) -> Atom {
    let v = Term::var(var);
    match rng.gen_range(0..7) {
        0 => Atom::new(
            Pred::IfLike,
            vec![v, Term::Str(PATTERNS.choose(rng).unwrap().to_string())],
        ),
        1 => Atom::new(
            Pred::LoopLike,
            vec![v, Term::Str(PATTERNS.choose(rng).unwrap().to_string())],
        ),
        2 => Atom::new(Pred::If, vec![v, Term::Str(label_for(rng, NodeKind::If))]),
        3 => Atom::new(Pred::Loop, vec![v, Term::Str(label_for(rng, NodeKind::Loop))]),
        4 => Atom::new(Pred::MethodCall, vec![v, Term::Str(label_for(rng, NodeKind::Call))]),
        5 => Atom::new(Pred::Type, vec![v, Term::Str(label_for(rng, NodeKind::Type))]),
        _ => Atom::new(Pred::Exception, vec![v, Term::Str(label_for(rng, NodeKind::Catch))]),
    }
}

/// A connected query over up to `max_vars` body variables.
pub fn random_query<R: Rng>(rng: &mut R, max_vars: usize) -> Hypothesis {
    let lit = |atom| Literal {
        atom,
        provenance: Provenance::User,
    };
    let mut vars = vec!["X".to_string()];
    let mut body = vec![lit(Atom::new(Pred::MethodDec, vec![Term::var("X")]))];
    for i in 0..rng.gen_range(0..=max_vars) {
        let v = format!("V{i}");
        let other = vars.choose(rng).unwrap().clone();
        let pred = *[Pred::Contains, Pred::Contains, Pred::Before, Pred::Parent, Pred::Next]
            .choose(rng)
            .unwrap();
        let (a, b) = if other == "X" || rng.gen_bool(0.5) {
            (other, v.clone())
        } else {
            (v.clone(), other)
        };
        body.push(lit(Atom::new(pred, vec![Term::var(a), Term::var(b)])));
        if rng.gen_bool(0.7) {
            body.push(lit(feature_atom(rng, &v)));
        }
        vars.push(v);
    }
    // occasional extra edge between existing variables
    if vars.len() > 2 && rng.gen_bool(0.3) {
        let a = vars[rng.gen_range(1..vars.len())].clone();
        let b = vars[rng.gen_range(1..vars.len())].clone();
        let pred = *[Pred::Contains, Pred::Before].choose(rng).unwrap();
        body.push(lit(Atom::new(pred, vec![Term::var(a), Term::var(b)])));
    }
    body.shuffle(rng);
    Hypothesis::new("X", body).expect("connected by construction")
}
