//! Simulated users: pick a seed from a ground-truth group, tag `k` random
//! features, then label `n` random results per iteration until nothing is
//! left to label.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use facet_core::{Bias, FactBase, Label, NodeKind, Outcome, SeedSelection, Session, SessionError, Status, TieBreak};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::manifest::GroundTruthGroup;
use crate::metrics::{metrics, Scores};

/// Which polarity of labels the simulated user is willing to give.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelPolicy {
    #[default]
    Both,
    PositivesOnly,
    NegativesOnly,
}

impl LabelPolicy {
    pub const ALL: [LabelPolicy; 3] = [
        LabelPolicy::Both,
        LabelPolicy::PositivesOnly,
        LabelPolicy::NegativesOnly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LabelPolicy::Both => "both",
            LabelPolicy::PositivesOnly => "positives-only",
            LabelPolicy::NegativesOnly => "negatives-only",
        }
    }

    fn accepts(self, positive: bool) -> bool {
        match self {
            LabelPolicy::Both => true,
            LabelPolicy::PositivesOnly => positive,
            LabelPolicy::NegativesOnly => !positive,
        }
    }
}

impl fmt::Display for LabelPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LabelPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "both" => Ok(LabelPolicy::Both),
            "positives-only" | "positives" => Ok(LabelPolicy::PositivesOnly),
            "negatives-only" | "negatives" => Ok(LabelPolicy::NegativesOnly),
            _ => Err(format!(
                "unknown label policy `{s}` (expected both, positives-only or negatives-only)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationConfig {
    /// Features tagged in the seed.
    pub k: usize,
    /// Labels per iteration.
    pub n: usize,
    pub bias: Bias,
    pub label_policy: LabelPolicy,
    /// Probability that the oracle flips a label.
    pub error_rate: f64,
    pub runs: usize,
    pub seed: u64,
    /// Iteration cap, counting iteration 1.
    pub max_iterations: usize,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            k: 2,
            n: 3,
            bias: Bias::NestedStructure,
            label_policy: LabelPolicy::Both,
            error_rate: 0.0,
            runs: 10,
            seed: 0,
            max_iterations: 10,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("k must be at least 1")]
    K,
    #[error("n must be at least 1")]
    N,
    #[error("runs must be at least 1")]
    Runs,
    #[error("error rate {0} is outside [0, 1]")]
    ErrorRate(f64),
    #[error("max iterations must be at least 1")]
    MaxIterations,
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k == 0 {
            return Err(ConfigError::K);
        }
        if self.n == 0 {
            return Err(ConfigError::N);
        }
        if self.runs == 0 {
            return Err(ConfigError::Runs);
        }
        if !(0.0..=1.0).contains(&self.error_rate) {
            return Err(ConfigError::ErrorRate(self.error_rate));
        }
        if self.max_iterations == 0 {
            return Err(ConfigError::MaxIterations);
        }
        Ok(())
    }
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// No result left that the policy can label.
    Exhausted,
    Infeasible,
    IterationCap,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationScore {
    pub results: usize,
    pub precision: f64,
    pub recall: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub iterations: usize,
    pub final_query_length: usize,
    pub flagged_inconsistent: bool,
    pub termination: Termination,
    /// Scores after each iteration, starting with iteration 1.
    pub history: Vec<IterationScore>,
}

impl RunMetrics {
    /// Scores after iteration `i` (1-based); runs that stopped earlier keep
    /// their final scores.
    pub fn at(&self, i: usize) -> &IterationScore {
        &self.history[i.clamp(1, self.history.len()) - 1]
    }

    pub fn completed(&self) -> bool {
        self.termination == Termination::Exhausted
    }
}

/// A finished run and the session that produced it.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub metrics: RunMetrics,
    pub session: Session,
}

#[derive(Debug, Error)]
pub enum SimulationError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("group `{0}` has no members")]
    EmptyGroup(String),
    #[error("seed `{0}` is not in the factbase")]
    UnknownSeed(String),
    #[error(transparent)]
    Session(#[from] SessionError),
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn run_rng(cfg_seed: u64, group: &str, run: usize) -> ChaCha8Rng {
    // FNV-1a keeps group streams stable across builds
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in group.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(cfg_seed ^ h ^ (run as u64 + 1).wrapping_mul(GOLDEN))
}

const FEATURE_KINDS: [NodeKind; 4] = [NodeKind::If, NodeKind::Loop, NodeKind::Call, NodeKind::Type];

/// The seed method with all its features annotated, in tagging order. Drawn
/// before anything that depends on `k`, so a larger `k` tags a superset.
fn pick_seed(rng: &mut ChaCha8Rng, group: &GroundTruthGroup, fb: &FactBase) -> Result<SeedSelection, SimulationError> {
    let seed = group
        .members
        .choose(rng)
        .ok_or_else(|| SimulationError::EmptyGroup(group.name.clone()))?
        .clone();
    let m = fb
        .lookup(&seed)
        .ok_or_else(|| SimulationError::UnknownSeed(seed.clone()))?;
    let mut features: Vec<String> = fb
        .method_range(m)
        .skip(1)
        .filter(|&n| FEATURE_KINDS.contains(&fb.node(n).kind))
        .map(|n| fb.node(n).id.clone())
        .collect();
    features.shuffle(rng);
    let span = fb.node(m).span;
    Ok(SeedSelection {
        method: seed,
        lines: (span.start_line, span.end_line),
        annotated: features,
    })
}

fn score(results: &[String], truth: &BTreeSet<String>) -> (Scores, IterationScore) {
    let predicted: BTreeSet<String> = results.iter().cloned().collect();
    let s = metrics(&predicted, truth);
    let it = IterationScore {
        results: results.len(),
        precision: s.precision,
        recall: s.recall,
    };
    (s, it)
}

/// One simulated session.
pub fn simulate_run(
    group: &GroundTruthGroup,
    fb: &FactBase,
    cfg: &SimulationConfig,
    run: usize,
) -> Result<RunRecord, SimulationError> {
    cfg.validate()?;
    let truth = group.member_set();
    let mut rng = run_rng(cfg.seed, &group.name, run);
    let mut selection = pick_seed(&mut rng, group, fb)?;
    if cfg.k > selection.annotated.len() {
        log::warn!(
            "{}: k={} exceeds its {} features, tagging all",
            selection.method,
            cfg.k,
            selection.annotated.len()
        );
    }
    selection.annotated.truncate(cfg.k);
    let mut session = Session::start(
        format!("{}-{run}", group.name),
        fb,
        selection,
        cfg.bias,
        TieBreak::Deterministic,
    )?;
    let mut history = vec![score(&session.current().results, &truth).1];
    let mut flagged = false;
    let termination = loop {
        if session.status != Status::Active {
            break if session.status == Status::Infeasible {
                Termination::Infeasible
            } else {
                Termination::Exhausted
            };
        }
        if session.iterations.len() >= cfg.max_iterations {
            break Termination::IterationCap;
        }
        let mut pool: Vec<String> = session.unlabeled().into_iter().map(String::from).collect();
        pool.shuffle(&mut rng);
        let mut batch = Vec::new();
        for id in pool {
            if batch.len() == cfg.n {
                break;
            }
            let mut positive = truth.contains(&id);
            if cfg.error_rate > 0.0 && rng.gen_bool(cfg.error_rate) {
                positive = !positive;
            }
            if cfg.label_policy.accepts(positive) {
                batch.push(Label::new(id, positive));
            }
        }
        if batch.is_empty() {
            break Termination::Exhausted;
        }
        let outcome = session.apply_labels(fb, &batch)?;
        flagged |= !session.reports.is_empty();
        match outcome {
            Outcome::Refined => history.push(score(&session.current().results, &truth).1),
            Outcome::Infeasible(_) => break Termination::Infeasible,
            Outcome::Unchanged => unreachable!("fresh labels always change the session"),
        }
    };
    let (s, _) = score(&session.current().results, &truth);
    let metrics = RunMetrics {
        precision: s.precision,
        recall: s.recall,
        f1: s.f1,
        iterations: session.iterations.len(),
        final_query_length: session.hypothesis()?.len(),
        flagged_inconsistent: flagged,
        termination,
        history,
    };
    Ok(RunRecord { metrics, session })
}

/// `cfg.runs` independent runs, in parallel; results are in run order.
pub fn simulate_group(
    group: &GroundTruthGroup,
    fb: &FactBase,
    cfg: &SimulationConfig,
) -> Result<Vec<RunMetrics>, SimulationError> {
    Ok(simulate_records(group, fb, cfg)?
        .into_iter()
        .map(|r| r.metrics)
        .collect())
}

pub fn simulate_records(
    group: &GroundTruthGroup,
    fb: &FactBase,
    cfg: &SimulationConfig,
) -> Result<Vec<RunRecord>, SimulationError> {
    cfg.validate()?;
    (0..cfg.runs)
        .into_par_iter()
        .map(|run| simulate_run(group, fb, cfg, run))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Summary {
    pub runs: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub iterations: f64,
    pub query_length: f64,
    pub flagged: f64,
}

/// Means over runs; `flagged` is the fraction of flagged runs.
pub fn summarize(runs: &[RunMetrics]) -> Summary {
    if runs.is_empty() {
        return Summary::default();
    }
    let n = runs.len() as f64;
    let mean = |f: &dyn Fn(&RunMetrics) -> f64| runs.iter().map(f).sum::<f64>() / n;
    Summary {
        runs: runs.len(),
        precision: mean(&|r| r.precision),
        recall: mean(&|r| r.recall),
        f1: mean(&|r| r.f1),
        iterations: mean(&|r| r.iterations as f64),
        query_length: mean(&|r| r.final_query_length as f64),
        flagged: mean(&|r| if r.flagged_inconsistent { 1.0 } else { 0.0 }),
    }
}
