//! Query construction from a seed example and active specialization.
//!
//! Variables are named after seed nodes: the n-th `if` of the seed method
//! (0-based, pre-order) is `IF<n>`, loops `LOOP<n>`, calls `C<n>`, typed
//! declarations `T<n>`, catch clauses `E<n>`; the method itself is `X`. The
//! learner can therefore map any variable of a hypothesis back to the seed
//! node it stands for.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eval::{evaluate_nodes, Compiled, EvalError};
use crate::extract::NodeKind;
use crate::factbase::{FactBase, NodeIdx};
use crate::query::{Atom, Hypothesis, Literal, Pred, Provenance, QueryError, Term};
use crate::regexize::{compact, regexize};

pub const HEAD: &str = "X";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Bias {
    FeatureVector,
    #[default]
    NestedStructure,
    SequentialOrder,
}

impl Bias {
    pub const ALL: [Bias; 3] = [Bias::NestedStructure, Bias::SequentialOrder, Bias::FeatureVector];

    pub fn as_str(self) -> &'static str {
        match self {
            Bias::FeatureVector => "feature-vector",
            Bias::NestedStructure => "nested-structure",
            Bias::SequentialOrder => "sequential-order",
        }
    }
}

impl fmt::Display for Bias {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Bias {
    type Err = String;

    fn from_str(s: &str) -> Result<Bias, String> {
        match s {
            "feature-vector" | "feature" | "fv" => Ok(Bias::FeatureVector),
            "nested-structure" | "nested" => Ok(Bias::NestedStructure),
            "sequential-order" | "sequential" => Ok(Bias::SequentialOrder),
            _ => Err(format!(
                "unknown bias `{s}` (expected nested-structure, sequential-order or feature-vector)"
            )),
        }
    }
}

/// How ties in positive coverage are broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case", tag = "mode", content = "seed")]
pub enum TieBreak {
    /// Structural tier, then most current results kept, then pre-order
    /// distance to a bound node, then text.
    #[default]
    Deterministic,
    /// Uniformly random among equal coverage and results kept, reproducible
    /// from the seed.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSelection {
    pub method: String,
    /// Inclusive 1-based line range.
    pub lines: (u32, u32),
    pub annotated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InconsistencyReport {
    /// Labeled positive in some iterations and negative in others.
    Conflict {
        method: String,
        positive_iterations: Vec<usize>,
        negative_iterations: Vec<usize>,
    },
    /// A positive the current query no longer matches.
    UncoveredPositive { method: String, iteration: usize },
    /// No admissible atom excludes every negative.
    Infeasible { iteration: usize, blocking: Vec<String> },
}

impl fmt::Display for InconsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InconsistencyReport::Conflict {
                method,
                positive_iterations,
                negative_iterations,
            } => write!(
                f,
                "{method} labeled positive in iteration(s) {positive_iterations:?} and negative in {negative_iterations:?}"
            ),
            InconsistencyReport::UncoveredPositive { method, iteration } => {
                write!(f, "positive {method} (labeled in iteration {iteration}) no longer matches the query")
            }
            InconsistencyReport::Infeasible { iteration, blocking } => write!(
                f,
                "cannot separate in iteration {iteration}: no candidate atom excludes {}",
                blocking.join(", ")
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum LearnError {
    #[error("method `{0}` is not in the factbase")]
    UnknownMethod(String),
    #[error("no fact-bearing nodes in lines {0}-{1} of the seed method")]
    EmptySelection(u32, u32),
    #[error("at least one feature must be annotated")]
    NoAnnotations,
    #[error("annotated node `{0}` is not part of the seed selection")]
    AnnotationOutsideSelection(String),
    #[error("labels are inconsistent: {}", .0.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "))]
    Inconsistent(Vec<InconsistencyReport>),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Query(#[from] QueryError),
}

pub fn var_prefix(kind: NodeKind) -> &'static str {
    match kind {
        NodeKind::Method => HEAD,
        NodeKind::If => "IF",
        NodeKind::Loop => "LOOP",
        NodeKind::Call => "C",
        NodeKind::Type => "T",
        NodeKind::Catch => "E",
    }
}

/// Seed-method nodes and their variable names.
#[derive(Debug, Clone)]
pub struct SeedMap {
    pub method: NodeIdx,
    names: HashMap<NodeIdx, String>,
    nodes: HashMap<String, NodeIdx>,
}

impl SeedMap {
    pub fn new(fb: &FactBase, method_id: &str) -> Result<SeedMap, LearnError> {
        let method = fb
            .lookup(method_id)
            .filter(|&m| fb.node(m).kind == NodeKind::Method)
            .ok_or_else(|| LearnError::UnknownMethod(method_id.to_string()))?;
        let mut counts: HashMap<NodeKind, usize> = HashMap::new();
        let mut names = HashMap::new();
        let mut nodes = HashMap::new();
        for n in fb.method_range(method) {
            let kind = fb.node(n).kind;
            let name = if kind == NodeKind::Method {
                HEAD.to_string()
            } else {
                let c = counts.entry(kind).or_insert(0);
                *c += 1;
                format!("{}{}", var_prefix(kind), *c - 1)
            };
            names.insert(n, name.clone());
            nodes.insert(name, n);
        }
        Ok(SeedMap { method, names, nodes })
    }

    pub fn name(&self, n: NodeIdx) -> &str {
        &self.names[&n]
    }

    pub fn node(&self, var: &str) -> Option<NodeIdx> {
        self.nodes.get(var).copied()
    }

    /// Seed nodes, method root excluded, in pre-order.
    pub fn body_nodes(&self, fb: &FactBase) -> impl Iterator<Item = NodeIdx> {
        let r = fb.method_range(self.method);
        (*r.start() + 1)..=*r.end()
    }
}

fn lit(atom: Atom, provenance: Provenance) -> Literal {
    Literal { atom, provenance }
}

fn rel(pred: Pred, a: &str, b: &str) -> Atom {
    Atom::new(pred, vec![Term::var(a), Term::var(b)])
}

/// Exact fact of a seed node, as an atom over its variable.
pub fn exact_atom(fb: &FactBase, n: NodeIdx, var: &str) -> Atom {
    let node = fb.node(n);
    let pred = match node.kind {
        NodeKind::Method => return Atom::new(Pred::MethodDec, vec![Term::var(var)]),
        NodeKind::If => Pred::If,
        NodeKind::Loop => Pred::Loop,
        NodeKind::Call => Pred::MethodCall,
        NodeKind::Type => Pred::Type,
        NodeKind::Catch => Pred::Exception,
    };
    Atom::new(pred, vec![Term::var(var), Term::Str(fb.label(n).to_string())])
}

/// Regex stored for a generalized condition.
pub fn learned_pattern(condition: &str) -> String {
    compact(&regexize(condition))
}

/// Generalized form: conditions become regexes, names stay exact.
pub fn general_atom(fb: &FactBase, n: NodeIdx, var: &str) -> Atom {
    let node = fb.node(n);
    match node.kind {
        NodeKind::If => Atom::new(
            Pred::IfLike,
            vec![Term::var(var), Term::Str(learned_pattern(fb.label(n)))],
        ),
        NodeKind::Loop => Atom::new(
            Pred::LoopLike,
            vec![Term::var(var), Term::Str(learned_pattern(fb.label(n)))],
        ),
        _ => exact_atom(fb, n, var),
    }
}

/// h0: every fact-bearing node of the selected lines, exact and variablized,
/// tied to its nearest selected ancestor (or the method) by `contains`.
pub fn ground_hypothesis(seed: &SeedSelection, fb: &FactBase) -> Result<Hypothesis, LearnError> {
    let map = SeedMap::new(fb, &seed.method)?;
    let (lo, hi) = seed.lines;
    let selected: Vec<NodeIdx> = map
        .body_nodes(fb)
        .filter(|&n| fb.node(n).span.intersects_lines(lo, hi))
        .collect();
    if selected.is_empty() {
        return Err(LearnError::EmptySelection(lo, hi));
    }
    let chosen: HashSet<NodeIdx> = selected.iter().copied().collect();
    let annotated: HashSet<&str> = seed.annotated.iter().map(String::as_str).collect();
    let mut body = vec![lit(
        Atom::new(Pred::MethodDec, vec![Term::var(HEAD)]),
        Provenance::SeedContext,
    )];
    for &n in &selected {
        let anchor = fb.ancestors(n).find(|a| chosen.contains(a)).unwrap_or(map.method);
        let var = map.name(n);
        body.push(lit(rel(Pred::Contains, map.name(anchor), var), Provenance::Plumbing));
        let prov = if annotated.contains(fb.node(n).id.as_str()) {
            Provenance::SeedAnnotated
        } else {
            Provenance::SeedContext
        };
        body.push(lit(exact_atom(fb, n, var), prov));
    }
    Ok(Hypothesis::new(HEAD, body)?)
}

fn annotated_nodes(
    seed: &SeedSelection,
    h0: &Hypothesis,
    map: &SeedMap,
    fb: &FactBase,
) -> Result<Vec<NodeIdx>, LearnError> {
    if seed.annotated.is_empty() {
        return Err(LearnError::NoAnnotations);
    }
    let in_h0: HashSet<&str> = h0.atoms().flat_map(|a| a.vars()).collect();
    let mut nodes = Vec::new();
    for id in &seed.annotated {
        let n = fb
            .lookup(id)
            .filter(|&n| n != map.method && fb.method_of(n) == map.method)
            .ok_or_else(|| LearnError::AnnotationOutsideSelection(id.clone()))?;
        if !in_h0.contains(map.name(n)) {
            return Err(LearnError::AnnotationOutsideSelection(id.clone()));
        }
        nodes.push(n);
    }
    nodes.sort_unstable();
    nodes.dedup();
    Ok(nodes)
}

/// h1: keeps only annotated atoms, each linked directly to the method.
pub fn drop_unannotated(h0: &Hypothesis, seed: &SeedSelection, fb: &FactBase) -> Result<Hypothesis, LearnError> {
    let map = SeedMap::new(fb, &seed.method)?;
    let nodes = annotated_nodes(seed, h0, &map, fb)?;
    let mut body = vec![lit(
        Atom::new(Pred::MethodDec, vec![Term::var(HEAD)]),
        Provenance::Plumbing,
    )];
    for n in nodes {
        let var = map.name(n);
        body.push(lit(rel(Pred::Contains, HEAD, var), Provenance::Plumbing));
        body.push(lit(exact_atom(fb, n, var), Provenance::SeedAnnotated));
    }
    Ok(Hypothesis::new(HEAD, body)?)
}

/// h2 from h1: `if`/`loop` become `iflike`/`looplike` over regexized conditions.
pub fn regex_convert(h1: &Hypothesis) -> Hypothesis {
    let body = h1
        .body()
        .iter()
        .map(|l| match (l.atom.pred, &l.atom.args[..]) {
            (Pred::If | Pred::Loop, [v, Term::Str(c)]) => {
                let pred = if l.atom.pred == Pred::If {
                    Pred::IfLike
                } else {
                    Pred::LoopLike
                };
                lit(
                    Atom::new(pred, vec![v.clone(), Term::Str(learned_pattern(c))]),
                    Provenance::RegexGeneralized,
                )
            }
            _ => l.clone(),
        })
        .collect();
    Hypothesis::new(h1.head(), body).expect("same shape as a valid hypothesis")
}

/// Iteration-1 query: annotated atoms only, regex-generalized.
pub fn generalize(h0: &Hypothesis, seed: &SeedSelection, fb: &FactBase) -> Result<Hypothesis, LearnError> {
    Ok(regex_convert(&drop_unannotated(h0, seed, fb)?))
}

/// Labels of one session.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelSet {
    pub positives: BTreeSet<String>,
    pub negatives: BTreeSet<String>,
}

/// One pool entry: an unbound seed node and its learned atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolEntry {
    pub node: NodeIdx,
    pub var: String,
    pub atom: Atom,
}

/// Seed facts not yet represented in the hypothesis.
#[derive(Debug, Clone, Default)]
pub struct CandidateAtomPool {
    pub entries: Vec<PoolEntry>,
}

/// Seed nodes whose variables occur in `h` (the method root included).
pub fn bound_nodes(h: &Hypothesis, map: &SeedMap) -> BTreeSet<NodeIdx> {
    let mut out: BTreeSet<NodeIdx> = h.atoms().flat_map(|a| a.vars()).filter_map(|v| map.node(v)).collect();
    out.insert(map.method);
    out
}

pub fn candidate_pool(h: &Hypothesis, map: &SeedMap, fb: &FactBase) -> CandidateAtomPool {
    let bound = bound_nodes(h, map);
    let entries = map
        .body_nodes(fb)
        .filter(|n| !bound.contains(n))
        .map(|n| {
            let var = map.name(n).to_string();
            PoolEntry {
                node: n,
                atom: general_atom(fb, n, &var),
                var,
            }
        })
        .collect();
    CandidateAtomPool { entries }
}

#[derive(Debug, Clone)]
pub struct Candidate {
    pub hypothesis: Hypothesis,
    /// Atoms new relative to the previous hypothesis.
    pub added: Vec<Atom>,
    pub tier: u32,
    pub distance: u32,
    key: String,
}

/// Result of scoring one candidate against the labels.
#[derive(Debug, Clone)]
pub struct Scored {
    pub candidate: Candidate,
    pub covered_positives: usize,
    pub covered_negatives: Vec<String>,
    /// Current results the candidate still matches.
    pub kept: usize,
}

#[derive(Debug, Clone)]
pub enum Specialization {
    Refined {
        hypothesis: Hypothesis,
        added: Vec<Atom>,
        covered_positives: usize,
    },
    /// Nothing admissible excludes every negative; `blocking` lists the
    /// negatives no candidate could exclude.
    Infeasible { blocking: Vec<String> },
}

const DEEP_TIER: u32 = 1000;

/// Whether `h` already forces `a` to contain `b` through a chain of
/// `contains`/`parent` atoms.
fn implied_contains(h: &Hypothesis, a: &str, b: &str) -> bool {
    let mut edges: HashMap<&str, Vec<&str>> = HashMap::new();
    for atom in h.atoms() {
        if matches!(atom.pred, Pred::Contains | Pred::Parent) {
            if let (Some(x), Some(y)) = (atom.args[0].as_var(), atom.args[1].as_var()) {
                edges.entry(x).or_default().push(y);
            }
        }
    }
    let mut seen = HashSet::new();
    let mut stack = vec![a];
    while let Some(v) = stack.pop() {
        for &w in edges.get(v).into_iter().flatten() {
            if w == b {
                return true;
            }
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    false
}

fn has_atom(h: &Hypothesis, atom: &Atom) -> bool {
    h.atoms().any(|a| a == atom)
}

fn extend(h: &Hypothesis, added: &[Literal]) -> Hypothesis {
    let mut body = h.body().to_vec();
    body.extend_from_slice(added);
    Hypothesis::new(h.head(), body).expect("connected extension")
}

fn candidate(h: Hypothesis, added: Vec<Atom>, tier: u32, distance: u32) -> Candidate {
    let key = added.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    Candidate {
        hypothesis: h,
        added,
        tier,
        distance,
        key,
    }
}

fn distance(n: NodeIdx, bound: &BTreeSet<NodeIdx>) -> u32 {
    bound.iter().map(|&b| n.abs_diff(b)).min().unwrap_or(0)
}

/// Candidate hypotheses admissible under `bias`.
pub fn candidates(h: &Hypothesis, bias: Bias, map: &SeedMap, fb: &FactBase) -> Vec<Candidate> {
    let bound = bound_nodes(h, map);
    let pool = candidate_pool(h, map, fb);
    let non_root: Vec<NodeIdx> = bound.iter().copied().filter(|&b| b != map.method).collect();
    let learned = |a: Atom| lit(a, Provenance::BiasLearned);
    let mut out = Vec::new();

    let flat = |e: &PoolEntry, tier: u32| {
        let conn = rel(Pred::Contains, HEAD, &e.var);
        let hyp = extend(h, &[lit(conn.clone(), Provenance::Plumbing), learned(e.atom.clone())]);
        candidate(hyp, vec![conn, e.atom.clone()], tier, distance(e.node, &bound))
    };

    match bias {
        Bias::FeatureVector => {
            for e in &pool.entries {
                out.push(flat(e, 0));
            }
        }
        Bias::NestedStructure => {
            for &a in &non_root {
                for &b in &non_root {
                    if !fb.contains(a, b) {
                        continue;
                    }
                    let (va, vb) = (map.name(a), map.name(b));
                    if implied_contains(h, va, vb) {
                        continue;
                    }
                    let link = rel(Pred::Contains, va, vb);
                    // tighten the looser connector of `b` in place when possible
                    let loose = h.body().iter().position(|l| {
                        l.atom.pred == Pred::Contains
                            && l.atom.args[1].as_var() == Some(vb)
                            && l.atom.args[0]
                                .as_var()
                                .is_some_and(|y| y == h.head() || implied_contains(h, y, va))
                    });
                    let hyp = match loose {
                        Some(i) => {
                            let mut body = h.body().to_vec();
                            body[i] = learned(link.clone());
                            Hypothesis::new(h.head(), body).expect("rewrite keeps connectivity")
                        }
                        None => extend(h, &[learned(link.clone())]),
                    };
                    out.push(candidate(hyp, vec![link], 0, 0));
                }
            }
            for e in &pool.entries {
                let anchor = fb.ancestors(e.node).find(|a| bound.contains(a)).unwrap_or(map.method);
                let parent = fb.node(e.node).parent.expect("body node has a parent");
                let tier = if bound.contains(&parent) {
                    0
                } else {
                    non_root
                        .iter()
                        .filter(|&&b| fb.contains(parent, b))
                        .map(|&b| fb.node(b).depth - fb.node(parent).depth)
                        .min()
                        .unwrap_or(DEEP_TIER + fb.node(e.node).depth - fb.node(anchor).depth)
                };
                let conn = rel(Pred::Contains, map.name(anchor), &e.var);
                let hyp = extend(h, &[lit(conn.clone(), Provenance::Plumbing), learned(e.atom.clone())]);
                out.push(candidate(
                    hyp,
                    vec![conn, e.atom.clone()],
                    tier,
                    distance(e.node, &bound),
                ));
            }
        }
        Bias::SequentialOrder => {
            for &a in &non_root {
                for &b in &non_root {
                    if !fb.before(a, b) {
                        continue;
                    }
                    let link = rel(Pred::Before, map.name(a), map.name(b));
                    if has_atom(h, &link) {
                        continue;
                    }
                    out.push(candidate(extend(h, &[learned(link.clone())]), vec![link], 0, 0));
                }
            }
            for e in &pool.entries {
                let prev = non_root.iter().rev().copied().find(|&b| fb.before(b, e.node));
                match prev {
                    Some(b) => {
                        let conn = rel(Pred::Before, map.name(b), &e.var);
                        let hyp = extend(h, &[lit(conn.clone(), Provenance::Plumbing), learned(e.atom.clone())]);
                        out.push(candidate(hyp, vec![conn, e.atom.clone()], 0, distance(e.node, &bound)));
                    }
                    None => out.push(flat(e, 1)),
                }
            }
        }
    }
    let mut seen = HashSet::new();
    out.retain(|c| seen.insert(c.hypothesis.render()));
    out
}

fn resolve_methods(fb: &FactBase, ids: &BTreeSet<String>) -> Result<Vec<(String, NodeIdx)>, LearnError> {
    ids.iter()
        .map(|id| {
            fb.lookup(id)
                .filter(|&m| fb.node(m).kind == NodeKind::Method)
                .map(|m| (id.clone(), m))
                .ok_or_else(|| LearnError::UnknownMethod(id.clone()))
        })
        .collect()
}

/// Scores every admissible candidate (in parallel) against the labels.
pub fn score_candidates(
    h: &Hypothesis,
    labels: &LabelSet,
    bias: Bias,
    map: &SeedMap,
    fb: &FactBase,
) -> Result<Vec<Scored>, LearnError> {
    let pos = resolve_methods(fb, &labels.positives)?;
    let neg = resolve_methods(fb, &labels.negatives)?;
    let current = evaluate_nodes(h, fb)?;
    candidates(h, bias, map, fb)
        .into_par_iter()
        .map(|c| {
            let q = Compiled::new(&c.hypothesis, fb)?;
            let covered_positives = pos.iter().filter(|(_, m)| q.matches(*m)).count();
            let covered_negatives = neg
                .iter()
                .filter(|(_, m)| q.matches(*m))
                .map(|(id, _)| id.clone())
                .collect();
            let kept = current.iter().filter(|&&m| q.matches(m)).count();
            Ok(Scored {
                candidate: c,
                covered_positives,
                covered_negatives,
                kept,
            })
        })
        .collect()
}

/// Checks the specialization preconditions: disjoint labels and every
/// positive satisfying the current hypothesis.
pub fn precondition_reports(
    h: &Hypothesis,
    labels: &LabelSet,
    fb: &FactBase,
    iteration: usize,
) -> Result<Vec<InconsistencyReport>, LearnError> {
    let mut reports = Vec::new();
    for id in labels.positives.intersection(&labels.negatives) {
        reports.push(InconsistencyReport::Conflict {
            method: id.clone(),
            positive_iterations: vec![iteration],
            negative_iterations: vec![iteration],
        });
    }
    let q = Compiled::new(h, fb)?;
    for (id, m) in resolve_methods(fb, &labels.positives)? {
        if !q.matches(m) {
            reports.push(InconsistencyReport::UncoveredPositive { method: id, iteration });
        }
    }
    Ok(reports)
}

/// Adds one atom (plus its connector) that excludes every negative while
/// covering as many positives as possible.
pub fn specialize(
    h: &Hypothesis,
    labels: &LabelSet,
    bias: Bias,
    fb: &FactBase,
    seed_method: &str,
    tie: TieBreak,
    round: u64,
) -> Result<Specialization, LearnError> {
    let reports = precondition_reports(h, labels, fb, round as usize)?;
    if !reports.is_empty() {
        return Err(LearnError::Inconsistent(reports));
    }
    let map = SeedMap::new(fb, seed_method)?;
    let scored = score_candidates(h, labels, bias, &map, fb)?;
    Ok(select(scored, labels, tie, round))
}

/// Picks the winner among scored candidates: most positives covered, then
/// the bias tier, then most current results kept, then seed distance.
pub fn select(mut scored: Vec<Scored>, labels: &LabelSet, tie: TieBreak, round: u64) -> Specialization {
    let consistent: Vec<usize> = (0..scored.len())
        .filter(|&i| scored[i].covered_negatives.is_empty())
        .collect();
    if consistent.is_empty() {
        let blocking = if scored.is_empty() {
            labels.negatives.iter().cloned().collect()
        } else {
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for s in &scored {
                for n in &s.covered_negatives {
                    *counts.entry(n.as_str()).or_default() += 1;
                }
            }
            let all: Vec<String> = counts
                .iter()
                .filter(|(_, &c)| c == scored.len())
                .map(|(n, _)| n.to_string())
                .collect();
            if all.is_empty() {
                counts.keys().map(|n| n.to_string()).collect()
            } else {
                all
            }
        };
        return Specialization::Infeasible { blocking };
    }
    let mut order = consistent;
    match tie {
        TieBreak::Deterministic => order.sort_by(|&a, &b| {
            let (x, y) = (&scored[a], &scored[b]);
            y.covered_positives
                .cmp(&x.covered_positives)
                .then(x.candidate.tier.cmp(&y.candidate.tier))
                .then(y.kept.cmp(&x.kept))
                .then(x.candidate.distance.cmp(&y.candidate.distance))
                .then_with(|| x.candidate.key.cmp(&y.candidate.key))
        }),
        TieBreak::Seeded(seed) => {
            order.sort_by(|&a, &b| scored[a].candidate.key.cmp(&scored[b].candidate.key));
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ round.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            order.shuffle(&mut rng);
            order.sort_by(|&a, &b| {
                let (x, y) = (&scored[a], &scored[b]);
                (y.covered_positives, y.kept).cmp(&(x.covered_positives, x.kept))
            });
        }
    }
    let best = scored.swap_remove(order[0]);
    Specialization::Refined {
        hypothesis: best.candidate.hypothesis,
        added: best.candidate.added,
        covered_positives: best.covered_positives,
    }
}

/// One labeling round of a session.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabelRound {
    pub iteration: usize,
    pub positives: Vec<String>,
    pub negatives: Vec<String>,
    /// Negatives that blocked specialization, when it was infeasible.
    pub infeasible: Option<Vec<String>>,
}

/// Label inconsistencies across a session's history: contradictory labels,
/// positives the current hypothesis no longer matches, infeasible rounds.
pub fn check_labels(
    history: &[LabelRound],
    current: &Hypothesis,
    fb: &FactBase,
) -> Result<Vec<InconsistencyReport>, LearnError> {
    let mut pos: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    let mut neg: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for r in history {
        for p in &r.positives {
            pos.entry(p).or_default().push(r.iteration);
        }
        for n in &r.negatives {
            neg.entry(n).or_default().push(r.iteration);
        }
    }
    let mut out = Vec::new();
    for (id, pi) in &pos {
        if let Some(ni) = neg.get(id) {
            out.push(InconsistencyReport::Conflict {
                method: id.to_string(),
                positive_iterations: pi.clone(),
                negative_iterations: ni.clone(),
            });
        }
    }
    let q = Compiled::new(current, fb)?;
    for (id, pi) in &pos {
        if neg.contains_key(id) {
            continue;
        }
        let covered = fb.lookup(id).is_some_and(|m| q.matches(m));
        if !covered {
            out.push(InconsistencyReport::UncoveredPositive {
                method: id.to_string(),
                iteration: pi[0],
            });
        }
    }
    for r in history {
        if let Some(b) = &r.infeasible {
            out.push(InconsistencyReport::Infeasible {
                iteration: r.iteration,
                blocking: b.clone(),
            });
        }
    }
    Ok(out)
}
