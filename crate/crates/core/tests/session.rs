use std::path::Path;

use facet_core::learner::{check_labels, InconsistencyReport, LabelRound};
use facet_core::{
    extract_repository, parse_query, Bias, FactBase, Label, Outcome, ResultStatus, SeedSelection, Session,
    SessionError, Status, TieBreak,
};

const SEED: &str = "DefaultCommentMapper.java#getLeadingComments(ASTNode)";
const POSITIVE: &str = "DefaultCommentMapper.java#getExtendedStartPosition(ASTNode)";
const TWIN: &str = "DefaultCommentMapper.java#getTrailingComments(ASTNode)";
const NEGATIVE: &str = "Parser.java#checkComment()";

fn figures() -> FactBase {
    extract_repository(&Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/figures"))
        .unwrap()
        .0
}

fn start(fb: &FactBase) -> Session {
    let seed = SeedSelection {
        method: SEED.into(),
        lines: (7, 19),
        annotated: vec![format!("{SEED}#if1"), format!("{SEED}#if3")],
    };
    Session::start("s1", fb, seed, Bias::NestedStructure, TieBreak::Deterministic).unwrap()
}

fn labels(pos: &[&str], neg: &[&str]) -> Vec<Label> {
    pos.iter()
        .map(|m| Label::new(*m, true))
        .chain(neg.iter().map(|m| Label::new(*m, false)))
        .collect()
}

#[test]
fn walkthrough_session() {
    let fb = figures();
    let mut s = start(&fb);
    assert_eq!(s.status, Status::Active);
    assert_eq!(s.current().index, 1);
    assert_eq!(s.result_status(SEED), ResultStatus::PreviouslyPositive);
    assert_eq!(s.result_status(POSITIVE), ResultStatus::New);

    let out = s.apply_labels(&fb, &labels(&[POSITIVE], &[NEGATIVE])).unwrap();
    assert_eq!(out, Outcome::Refined);
    assert_eq!(s.iterations.len(), 2);
    assert!(s.current().query.contains("contains(IF0,IF2)"), "{}", s.current().query);
    assert!(!s.current().results.contains(&NEGATIVE.to_string()));
    assert_eq!(s.result_status(POSITIVE), ResultStatus::PreviouslyPositive);
    assert!(s.reports.is_empty(), "{:?}", s.reports);
    assert!(s.iterations[0].labels.iter().all(|l| l.at_ms.is_some()));

    // resubmitting is a no-op
    let before = s.clone();
    assert_eq!(
        s.apply_labels(&fb, &labels(&[POSITIVE], &[NEGATIVE])).unwrap(),
        Outcome::Unchanged
    );
    assert_eq!(s, before);

    // flipping a label is refused and leaves the session as it was
    let err = s.apply_labels(&fb, &labels(&[], &[POSITIVE])).unwrap_err();
    match err {
        SessionError::Inconsistent(r) => assert_eq!(
            r,
            vec![InconsistencyReport::Conflict {
                method: POSITIVE.into(),
                positive_iterations: vec![1],
                negative_iterations: vec![2],
            }]
        ),
        e => panic!("{e}"),
    }
    assert_eq!(s, before);

    // the provenance survives the stored text
    let h = s.hypothesis().unwrap();
    assert_eq!(h.to_string(), s.current().query);
    assert_eq!(h.provenance(), s.current().provenance);
}

#[test]
fn validation_errors() {
    let fb = figures();
    let mut s = start(&fb);
    assert!(matches!(s.apply_labels(&fb, &[]), Err(SessionError::EmptyBatch)));
    assert!(matches!(
        s.apply_labels(
            &fb,
            &labels(&["DefaultCommentMapper.java#getExtendedLength(ASTNode)"], &[])
        ),
        Err(SessionError::NotInResults(_))
    ));
    assert!(matches!(
        s.apply_labels(&fb, &labels(&[], &[SEED])),
        Err(SessionError::Inconsistent(_))
    ));
    assert_eq!(s.iterations.len(), 1);
    s.finish();
    assert_eq!(s.status, Status::Converged);
    assert!(matches!(
        s.apply_labels(&fb, &labels(&[POSITIVE], &[])),
        Err(SessionError::Closed(Status::Converged))
    ));
}

#[test]
fn structural_twin_is_infeasible() {
    let fb = figures();
    let mut s = start(&fb);
    let out = s.apply_labels(&fb, &labels(&[POSITIVE], &[TWIN])).unwrap();
    assert_eq!(out, Outcome::Infeasible(vec![TWIN.to_string()]));
    assert_eq!(s.status, Status::Infeasible);
    assert_eq!(
        s.reports.last().unwrap(),
        &InconsistencyReport::Infeasible {
            iteration: 1,
            blocking: vec![TWIN.into()]
        }
    );
}

#[test]
fn json_round_trip_and_replay() {
    let fb = figures();
    let mut s = start(&fb);
    s.apply_labels(&fb, &labels(&[POSITIVE], &[NEGATIVE])).unwrap();
    let text = s.to_json();
    let back = Session::from_json(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(back.replay(&fb).unwrap(), s);

    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["format"], "facet-session/1");
    assert_eq!(v["status"], "active");
    assert_eq!(v["iterations"][1]["provenance"][3], "bias-learned");
    v["format"] = "other/2".into();
    assert!(matches!(
        Session::from_json(&v.to_string()),
        Err(SessionError::Format(_))
    ));
}

#[test]
fn replay_detects_a_different_factbase() {
    let fb = figures();
    let s = start(&fb);
    let other = FactBase::build(Vec::new());
    assert!(matches!(s.replay(&other), Err(SessionError::Fingerprint { .. })));
}

#[test]
fn uncovered_positive_is_reported() {
    let fb = figures();
    let h = parse_query(r#"query(X) :- methoddec(X), contains(X,L), looplike(L,".*==null&&.*")."#).unwrap();
    let history = vec![LabelRound {
        iteration: 1,
        positives: vec![SEED.into(), POSITIVE.into()],
        negatives: vec![],
        infeasible: None,
    }];
    assert_eq!(
        check_labels(&history, &h, &fb).unwrap(),
        vec![InconsistencyReport::UncoveredPositive {
            method: POSITIVE.into(),
            iteration: 1
        }]
    );
}
