use std::collections::BTreeSet;
use std::path::Path;

use facet_core::brute::brute_force_evaluate;
use facet_core::learner::{drop_unannotated, regex_convert, score_candidates, SeedMap};
use facet_core::{
    evaluate, extract_repository, extract_source, generalize, ground_hypothesis, parse_query, specialize, Bias,
    FactBase, LabelSet, SeedSelection, Specialization, TieBreak,
};

const SEED: &str = "DefaultCommentMapper.java#getLeadingComments(ASTNode)";
const POSITIVE: &str = "DefaultCommentMapper.java#getExtendedStartPosition(ASTNode)";
const NEGATIVE: &str = "Parser.java#checkComment()";

const ITERATION_1: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(X,IF2), iflike(IF2,".*!=null")."#;
const ITERATION_2: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(IF0,IF2), iflike(IF2,".*!=null")."#;

fn figures() -> FactBase {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/figures");
    let (fb, report) = extract_repository(&dir).unwrap();
    assert!(report.files_skipped.is_empty(), "{:?}", report.files_skipped);
    fb
}

fn seed() -> SeedSelection {
    SeedSelection {
        method: SEED.into(),
        lines: (7, 19),
        annotated: vec![format!("{SEED}#if1"), format!("{SEED}#if3")],
    }
}

fn set(v: Vec<String>) -> BTreeSet<String> {
    v.into_iter().collect()
}

#[test]
fn getextendedstartposition_facts() {
    let src = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/figures/DefaultCommentMapper.java"),
    )
    .unwrap();
    let methods = extract_source(&src, "DefaultCommentMapper.java").unwrap();
    let m = methods.iter().find(|m| m.id() == POSITIVE).unwrap();
    let got: Vec<String> = m.facts().iter().map(|f| f.to_string()).collect();
    let want = [
        "methoddec(M).",
        r#"type(M#type1,"ASTNode")."#,
        "parent(M,M#type1).",
        r#"if(M#if1,"this.leadingPtr >= 0")."#,
        "parent(M,M#if1).",
        "next(M#type1,M#if1).",
        r#"type(M#type2,"int[]")."#,
        "parent(M#if1,M#type2).",
        r#"loop(M#loop1,"i<=this.leadingPtr")."#,
        "parent(M#if1,M#loop1).",
        "next(M#type2,M#loop1).",
        r#"type(M#type3,"int")."#,
        "parent(M#loop1,M#type3).",
        r#"if(M#if2,"this.leadingNodes[i] == node")."#,
        "parent(M#loop1,M#if2).",
        "next(M#type3,M#if2).",
        r#"if(M#if3,"range != null")."#,
        "parent(M#if1,M#if3).",
        "next(M#loop1,M#if3).",
        r#"methodcall(M#call1,"getStartPosition")."#,
        "parent(M#if3,M#call1).",
        r#"methodcall(M#call2,"getStartPosition")."#,
        "parent(M,M#call2).",
        "next(M#if1,M#call2).",
    ];
    let want: Vec<String> = want.iter().map(|f| expand(f)).collect();
    assert_eq!(got, want);
    assert_eq!(m.fact_count(), 24);
    let kinds: Vec<&str> = m.nodes.iter().map(|n| n.kind.as_str()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "if").count(), 3);
    assert_eq!(kinds.iter().filter(|k| **k == "loop").count(), 1);
    assert_eq!(kinds.iter().filter(|k| **k == "call").count(), 2);
}

// `M` in the expected facts above stands for the method id
fn expand(f: &str) -> String {
    let mut out = String::new();
    let mut in_str = false;
    for c in f.chars() {
        match c {
            '"' => {
                in_str = !in_str;
                out.push(c);
            }
            'M' if !in_str && !out.ends_with(|p: char| p.is_ascii_alphanumeric()) => out.push_str(POSITIVE),
            _ => out.push(c),
        }
    }
    out
}

#[test]
fn seed_ground_hypothesis() {
    let fb = figures();
    let h0 = ground_hypothesis(&seed(), &fb).unwrap();
    let text = h0.to_string();
    for atom in [
        r#"if(IF0,"this.leadingPtr >= 0")"#,
        r#"loop(LOOP0,"range==null && i<=this.leadingPtr")"#,
        r#"if(IF2,"range != null")"#,
        "contains(X,IF0)",
        "contains(IF0,LOOP0)",
        "contains(IF0,IF2)",
        "contains(LOOP0,IF1)",
        r#"methodcall(C0,"arraycopy")"#,
    ] {
        assert!(text.contains(atom), "{atom} missing from {text}");
    }
    // the parameter sits on the signature line, outside the selection
    assert!(!text.contains(r#""ASTNode""#), "{text}");
}

#[test]
fn generalization_steps() {
    let fb = figures();
    let h0 = ground_hypothesis(&seed(), &fb).unwrap();
    let h1 = drop_unannotated(&h0, &seed(), &fb).unwrap();
    assert_eq!(
        h1.to_string(),
        r#"query(X) :- methoddec(X), contains(X,IF0), if(IF0,"this.leadingPtr >= 0"), contains(X,IF2), if(IF2,"range != null")."#
    );
    assert_eq!(regex_convert(&h1).to_string(), ITERATION_1);
    assert_eq!(generalize(&h0, &seed(), &fb).unwrap().to_string(), ITERATION_1);
}

#[test]
fn walkthrough() {
    let fb = figures();
    let h0 = ground_hypothesis(&seed(), &fb).unwrap();
    let h2 = generalize(&h0, &seed(), &fb).unwrap();
    let r1 = set(evaluate(&h2, &fb).unwrap());
    assert!(
        r1.contains(SEED) && r1.contains(POSITIVE) && r1.contains(NEGATIVE),
        "{r1:?}"
    );

    let labels = LabelSet {
        positives: [SEED.to_string(), POSITIVE.to_string()].into(),
        negatives: [NEGATIVE.to_string()].into(),
    };
    let Specialization::Refined { hypothesis, .. } = specialize(
        &h2,
        &labels,
        Bias::NestedStructure,
        &fb,
        SEED,
        TieBreak::Deterministic,
        2,
    )
    .unwrap() else {
        panic!("infeasible")
    };
    assert_eq!(hypothesis.to_string(), ITERATION_2);
    let r2 = set(evaluate(&hypothesis, &fb).unwrap());
    assert!(r2.is_subset(&r1) && r2.len() < r1.len());
    assert!(r2.contains(SEED) && r2.contains(POSITIVE) && !r2.contains(NEGATIVE));
}

#[test]
fn walkthrough_queries_agree_with_oracle() {
    let fb = figures();
    for q in [ITERATION_1, ITERATION_2] {
        let h = parse_query(q).unwrap();
        assert_eq!(
            set(evaluate(&h, &fb).unwrap()),
            brute_force_evaluate(&h, &fb).unwrap(),
            "{q}"
        );
    }
    let nested = set(evaluate(&parse_query(ITERATION_2).unwrap(), &fb).unwrap());
    let expected: BTreeSet<String> = [
        SEED,
        POSITIVE,
        "DefaultCommentMapper.java#getTrailingComments(ASTNode)",
        "DefaultCommentMapper.java#getExtendedEnd(ASTNode)",
    ]
    .map(String::from)
    .into();
    assert_eq!(nested, expected);
}

#[test]
fn positives_alone_keep_the_most_results() {
    let fb = figures();
    let h0 = ground_hypothesis(&seed(), &fb).unwrap();
    let h = generalize(&h0, &seed(), &fb).unwrap();
    let labels = LabelSet {
        positives: [SEED.to_string(), POSITIVE.to_string()].into(),
        negatives: BTreeSet::new(),
    };
    let map = SeedMap::new(&fb, SEED).unwrap();
    let scored = score_candidates(&h, &labels, Bias::NestedStructure, &map, &fb).unwrap();
    let best_tier = scored
        .iter()
        .filter(|s| s.covered_positives == 2)
        .map(|s| s.candidate.tier)
        .min()
        .unwrap();
    let most = scored
        .iter()
        .filter(|s| s.covered_positives == 2 && s.candidate.tier == best_tier)
        .map(|s| s.kept)
        .max()
        .unwrap();
    let Specialization::Refined { hypothesis, .. } = specialize(
        &h,
        &labels,
        Bias::NestedStructure,
        &fb,
        SEED,
        TieBreak::Deterministic,
        2,
    )
    .unwrap() else {
        panic!("infeasible")
    };
    let r = set(evaluate(&hypothesis, &fb).unwrap());
    assert_eq!(r.len(), most);
    assert!(r.is_subset(&set(evaluate(&h, &fb).unwrap())));
}
