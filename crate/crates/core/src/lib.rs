//! Example-driven structural code search over Java sources.
//!
//! Methods are extracted into a relational factbase, searched with
//! Datalog-style queries, and queries are learned from an annotated seed
//! method plus positive/negative labels on the results.

pub mod brute;
pub mod eval;
pub mod extract;
pub mod factbase;
pub mod java;
pub mod learner;
pub mod query;
pub mod random;
pub mod regexize;
pub mod session;
pub mod strings;

pub use eval::{evaluate, evaluate_nodes, Compiled, EvalError};
pub use extract::{extract_repository, extract_source, ExtractReport, ExtractedMethod, Fact, NodeKind};
pub use factbase::{FactBase, NodeIdx, StoreError};
pub use learner::{
    check_labels, generalize, ground_hypothesis, specialize, Bias, InconsistencyReport, LabelRound, LabelSet,
    LearnError, SeedSelection, Specialization, TieBreak,
};
pub use query::{parse_query, Atom, Hypothesis, Literal, Pred, Provenance, QueryError, Term};
pub use regexize::regexize;
pub use session::{Label, Outcome, ResultStatus, Session, SessionError, Status};
