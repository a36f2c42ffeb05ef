//! Search sessions: a seed, one query per iteration, and the labels given
//! on each iteration's results. Sessions serialize to JSON and can be
//! replayed against the factbase they were created on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eval::evaluate;
use crate::factbase::FactBase;
use crate::learner::{
    check_labels, generalize, ground_hypothesis, specialize, Bias, InconsistencyReport, LabelRound, LabelSet,
    LearnError, SeedSelection, Specialization, TieBreak,
};
use crate::query::{parse_query, Hypothesis, Provenance};

pub const SESSION_FORMAT: &str = "facet-session/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Active,
    Converged,
    Infeasible,
    Abandoned,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Active => "active",
            Status::Converged => "converged",
            Status::Infeasible => "infeasible",
            Status::Abandoned => "abandoned",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub method: String,
    pub positive: bool,
    /// Wall-clock time of the decision, milliseconds since the epoch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_ms: Option<u64>,
    /// Time spent inspecting the example before deciding.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inspect_ms: Option<u64>,
}

impl Label {
    pub fn new(method: impl Into<String>, positive: bool) -> Label {
        Label {
            method: method.into(),
            positive,
            at_ms: None,
            inspect_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Iteration {
    pub index: usize,
    pub query: String,
    pub provenance: Vec<Provenance>,
    pub results: Vec<String>,
    #[serde(default)]
    pub labels: Vec<Label>,
    pub created_ms: u64,
}

/// Marker shown next to a result of the current iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultStatus {
    New,
    PreviouslyPositive,
    PreviouslyNegative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Session {
    pub format: String,
    pub id: String,
    pub fingerprint: String,
    pub seed: SeedSelection,
    pub bias: Bias,
    pub tie_break: TieBreak,
    pub status: Status,
    pub iterations: Vec<Iteration>,
    #[serde(default)]
    pub reports: Vec<InconsistencyReport>,
}

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("unsupported session format `{0}` (expected {SESSION_FORMAT})")]
    Format(String),
    #[error("session was built on factbase {expected}, current factbase is {actual}")]
    Fingerprint { expected: String, actual: String },
    #[error("no labels given")]
    EmptyBatch,
    #[error("`{0}` is not among the results of the current iteration")]
    NotInResults(String),
    #[error("session is {0}")]
    Closed(Status),
    #[error("inconsistent labels: {}", .0.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "))]
    Inconsistent(Vec<InconsistencyReport>),
    #[error("replay diverged at iteration {0}")]
    ReplayDiverged(usize),
    #[error("stored query is invalid: {0}")]
    StoredQuery(String),
    #[error(transparent)]
    Learn(LearnError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<LearnError> for SessionError {
    fn from(e: LearnError) -> SessionError {
        match e {
            LearnError::Inconsistent(r) => SessionError::Inconsistent(r),
            e => SessionError::Learn(e),
        }
    }
}

/// What a label batch did to the session.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The same labels were already recorded.
    Unchanged,
    /// A new iteration was appended.
    Refined,
    /// No admissible atom separates the labels; the session stops.
    Infeasible(Vec<String>),
}

pub fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

fn iteration(index: usize, h: &Hypothesis, fb: &FactBase) -> Result<Iteration, SessionError> {
    Ok(Iteration {
        index,
        query: h.to_string(),
        provenance: h.provenance(),
        results: evaluate(h, fb).map_err(LearnError::from)?,
        labels: Vec::new(),
        created_ms: now_ms(),
    })
}

impl Session {
    /// Iteration 1: builds and evaluates the generalized seed query.
    pub fn start(
        id: impl Into<String>,
        fb: &FactBase,
        seed: SeedSelection,
        bias: Bias,
        tie_break: TieBreak,
    ) -> Result<Session, SessionError> {
        let h0 = ground_hypothesis(&seed, fb)?;
        let h = generalize(&h0, &seed, fb)?;
        let first = iteration(1, &h, fb)?;
        let mut s = Session {
            format: SESSION_FORMAT.to_string(),
            id: id.into(),
            fingerprint: fb.fingerprint().to_string(),
            seed,
            bias,
            tie_break,
            status: Status::Active,
            iterations: vec![first],
            reports: Vec::new(),
        };
        s.update_convergence();
        Ok(s)
    }

    pub fn current(&self) -> &Iteration {
        self.iterations.last().expect("a session has at least one iteration")
    }

    pub fn hypothesis(&self) -> Result<Hypothesis, SessionError> {
        let it = self.current();
        let h = parse_query(&it.query).map_err(|e| SessionError::StoredQuery(e.to_string()))?;
        if it.provenance.len() != h.len() {
            return Err(SessionError::StoredQuery(format!(
                "{} provenance tags for {} atoms",
                it.provenance.len(),
                h.len()
            )));
        }
        Ok(h.with_provenance(&it.provenance))
    }

    /// Latest label per method, with the iteration it was given in. The seed
    /// is an implicit positive of iteration 1.
    pub fn latest_labels(&self) -> BTreeMap<&str, (bool, usize)> {
        let mut out = BTreeMap::new();
        out.insert(self.seed.method.as_str(), (true, 1));
        for it in &self.iterations {
            for l in &it.labels {
                out.insert(l.method.as_str(), (l.positive, it.index));
            }
        }
        out
    }

    pub fn result_status(&self, method: &str) -> ResultStatus {
        match self.latest_labels().get(method) {
            Some((true, _)) => ResultStatus::PreviouslyPositive,
            Some((false, _)) => ResultStatus::PreviouslyNegative,
            None => ResultStatus::New,
        }
    }

    /// Results of the current iteration nobody has labeled yet.
    pub fn unlabeled(&self) -> Vec<&str> {
        let labeled = self.latest_labels();
        self.current()
            .results
            .iter()
            .map(String::as_str)
            .filter(|r| !labeled.contains_key(r))
            .collect()
    }

    fn update_convergence(&mut self) {
        if self.status == Status::Active && self.unlabeled().is_empty() {
            self.status = Status::Converged;
        }
    }

    fn rounds(&self, extra: &[Label]) -> Vec<LabelRound> {
        let last = self.current().index;
        let mut rounds: Vec<LabelRound> = self
            .iterations
            .iter()
            .map(|it| {
                let mut r = LabelRound {
                    iteration: it.index,
                    ..Default::default()
                };
                let labels = it.labels.iter().chain(if it.index == last { extra } else { &[] });
                for l in labels {
                    if l.positive {
                        r.positives.push(l.method.clone());
                    } else {
                        r.negatives.push(l.method.clone());
                    }
                }
                r
            })
            .collect();
        rounds[0].positives.insert(0, self.seed.method.clone());
        for r in &mut rounds {
            r.positives.sort();
            r.positives.dedup();
            r.negatives.sort();
            r.negatives.dedup();
        }
        rounds
    }

    /// Records labels on the current results and specializes the query.
    pub fn apply_labels(&mut self, fb: &FactBase, batch: &[Label]) -> Result<Outcome, SessionError> {
        if batch.is_empty() {
            return Err(SessionError::EmptyBatch);
        }
        // a repeated submission of the last labeled batch changes nothing
        if let Some(last) = self.iterations.iter().rev().find(|it| !it.labels.is_empty()) {
            let recorded: BTreeSet<(&str, bool)> =
                last.labels.iter().map(|l| (l.method.as_str(), l.positive)).collect();
            if batch
                .iter()
                .all(|l| recorded.contains(&(l.method.as_str(), l.positive)))
            {
                return Ok(Outcome::Unchanged);
            }
        }
        let current = self.current();
        if self.status != Status::Active {
            return Err(SessionError::Closed(self.status));
        }
        self.check_fingerprint(fb)?;
        let results: BTreeSet<&str> = current.results.iter().map(String::as_str).collect();
        if let Some(l) = batch.iter().find(|l| !results.contains(l.method.as_str())) {
            return Err(SessionError::NotInResults(l.method.clone()));
        }
        let mut batch: Vec<Label> = batch.to_vec();
        let now = now_ms();
        for l in &mut batch {
            l.at_ms.get_or_insert(now);
        }

        let rounds = self.rounds(&batch);
        let h = self.hypothesis()?;
        let conflicts: Vec<InconsistencyReport> = check_labels(&rounds, &h, fb)?
            .into_iter()
            .filter(|r| matches!(r, InconsistencyReport::Conflict { .. }))
            .collect();
        if !conflicts.is_empty() {
            return Err(SessionError::Inconsistent(conflicts));
        }

        // cumulative labels; positives the query no longer covers are kept
        // out of the objective and reported separately
        let covered: BTreeSet<&str> = self.current().results.iter().map(String::as_str).collect();
        let mut labels = LabelSet::default();
        for r in &rounds {
            labels
                .positives
                .extend(r.positives.iter().filter(|p| covered.contains(p.as_str())).cloned());
            labels.negatives.extend(r.negatives.iter().cloned());
        }
        let index = self.current().index;
        let outcome = specialize(
            &h,
            &labels,
            self.bias,
            fb,
            &self.seed.method,
            self.tie_break,
            index as u64 + 1,
        )?;
        self.iterations.last_mut().unwrap().labels.extend(batch);
        match outcome {
            Specialization::Refined { hypothesis, .. } => {
                self.iterations.push(iteration(index + 1, &hypothesis, fb)?);
                self.reports = check_labels(&self.rounds(&[]), &hypothesis, fb)?;
                self.update_convergence();
                Ok(Outcome::Refined)
            }
            Specialization::Infeasible { blocking } => {
                self.reports = check_labels(&self.rounds(&[]), &h, fb)?;
                self.reports.push(InconsistencyReport::Infeasible {
                    iteration: index,
                    blocking: blocking.clone(),
                });
                self.status = Status::Infeasible;
                Ok(Outcome::Infeasible(blocking))
            }
        }
    }

    /// The user is satisfied with the current results.
    pub fn finish(&mut self) {
        if self.status == Status::Active {
            self.status = Status::Converged;
        }
    }

    pub fn abandon(&mut self) {
        if self.status == Status::Active {
            self.status = Status::Abandoned;
        }
    }

    pub fn check_fingerprint(&self, fb: &FactBase) -> Result<(), SessionError> {
        if self.fingerprint != fb.fingerprint() {
            return Err(SessionError::Fingerprint {
                expected: self.fingerprint.clone(),
                actual: fb.fingerprint().to_string(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("session serializes")
    }

    pub fn from_json(text: &str) -> Result<Session, SessionError> {
        let s: Session = serde_json::from_str(text)?;
        if s.format != SESSION_FORMAT {
            return Err(SessionError::Format(s.format));
        }
        if s.iterations.is_empty() {
            return Err(SessionError::StoredQuery("session has no iterations".into()));
        }
        Ok(s)
    }

    /// Rebuilds the session from its seed and labels, checking that every
    /// iteration reproduces the stored query and results.
    pub fn replay(&self, fb: &FactBase) -> Result<Session, SessionError> {
        self.check_fingerprint(fb)?;
        let mut s = Session::start(self.id.clone(), fb, self.seed.clone(), self.bias, self.tie_break)?;
        s.status = Status::Active;
        for (i, it) in self.iterations.iter().enumerate() {
            let got = s.iterations.get(i).ok_or(SessionError::ReplayDiverged(it.index))?;
            if got.query != it.query || got.results != it.results {
                return Err(SessionError::ReplayDiverged(it.index));
            }
            if it.labels.is_empty() {
                continue;
            }
            s.apply_labels(fb, &it.labels)?;
            if s.status == Status::Converged {
                s.status = Status::Active;
            }
        }
        for (mine, theirs) in s.iterations.iter_mut().zip(&self.iterations) {
            mine.created_ms = theirs.created_ms;
        }
        if s.iterations.len() != self.iterations.len() {
            return Err(SessionError::ReplayDiverged(s.current().index));
        }
        if s.status == Status::Active {
            s.status = self.status;
        }
        Ok(s)
    }
}
