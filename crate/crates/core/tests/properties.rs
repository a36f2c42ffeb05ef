use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use facet_core::brute::brute_force_evaluate;
use facet_core::random::{random_methods, random_query};
use facet_core::regexize::Pattern;
use facet_core::{
    evaluate, generalize, ground_hypothesis, parse_query, regexize, specialize, Bias, FactBase, LabelSet, NodeKind,
    SeedSelection, Specialization, TieBreak,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluation_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let fb = FactBase::build(random_methods(&mut r, 6, 10));
        for _ in 0..4 {
            let h = random_query(&mut r, 4);
            let fast: BTreeSet<String> = evaluate(&h, &fb).unwrap().into_iter().collect();
            let slow = brute_force_evaluate(&h, &fb).unwrap();
            prop_assert_eq!(fast, slow, "{}", h);
        }
    }

    #[test]
    fn query_text_round_trips(seed in any::<u64>()) {
        let h = random_query(&mut rng(seed), 5);
        let text = h.to_string();
        let back = parse_query(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.atoms().collect::<Vec<_>>(), h.atoms().collect::<Vec<_>>());
    }

    #[test]
    fn factbase_text_round_trips(seed in any::<u64>()) {
        let fb = FactBase::build(random_methods(&mut rng(seed), 5, 12));
        let back = FactBase::from_texts(&fb.facts_text(), Some(&fb.meta_text()), "facts").unwrap();
        prop_assert_eq!(back.facts_text(), fb.facts_text());
        prop_assert_eq!(back.meta_text(), fb.meta_text());
        prop_assert_eq!(back.fingerprint(), fb.fingerprint());
        prop_assert_eq!(back.fact_count(), fb.fact_count());
    }

    #[test]
    fn regexize_self_matches(cond in "[a-z]{1,4}(\\.[a-zA-Z]{1,3})?( ?(==|!=|>=|<|&&|\\|\\|) ?([a-z]{1,3}|null|0|this\\.[a-z]{1,3}|\"[a-z. ]{0,3}\"|[a-z]\\([a-z]?\\)))*") {
        let p = Pattern::new(&regexize(&cond)).unwrap();
        prop_assert!(p.matches(&cond), "{} -> {}", cond, regexize(&cond));
    }

    #[test]
    fn specialization_narrows_and_excludes(seed in any::<u64>(), bias_i in 0usize..3) {
        let mut r = rng(seed);
        let fb = FactBase::build(random_methods(&mut r, 12, 10));
        let bias = Bias::ALL[bias_i];
        let methods: Vec<String> = fb.method_nodes().map(|m| fb.node(m).id.clone()).collect();
        let seed_method = methods.choose(&mut r).unwrap().clone();
        let m = fb.lookup(&seed_method).unwrap();
        let body: Vec<String> = fb.method_range(m).skip(1).map(|n| fb.node(n).id.clone()).collect();
        prop_assume!(!body.is_empty());
        let sel = SeedSelection {
            method: seed_method.clone(),
            lines: (0, 0),
            annotated: vec![body.choose(&mut r).unwrap().clone()],
        };
        let h0 = ground_hypothesis(&sel, &fb).unwrap();
        let mut h = generalize(&h0, &sel, &fb).unwrap();
        let mut results: BTreeSet<String> = evaluate(&h, &fb).unwrap().into_iter().collect();
        prop_assert!(results.contains(&seed_method));
        let mut labels = LabelSet::default();
        labels.positives.insert(seed_method.clone());
        for round in 2..6u64 {
            let unlabeled: Vec<&String> = results
                .iter()
                .filter(|id| !labels.positives.contains(*id) && !labels.negatives.contains(*id))
                .collect();
            if unlabeled.is_empty() {
                break;
            }
            let pick = (*unlabeled.choose(&mut r).unwrap()).clone();
            if r.gen_bool(0.5) {
                labels.positives.insert(pick);
            } else {
                labels.negatives.insert(pick);
            }
            match specialize(&h, &labels, bias, &fb, &seed_method, TieBreak::Deterministic, round).unwrap() {
                Specialization::Refined { hypothesis, .. } => {
                    let next: BTreeSet<String> = evaluate(&hypothesis, &fb).unwrap().into_iter().collect();
                    prop_assert!(next.is_subset(&results));
                    prop_assert!(next.contains(&seed_method));
                    for n in &labels.negatives {
                        prop_assert!(!next.contains(n));
                    }
                    prop_assert!(hypothesis.len() >= h.len());
                    labels.positives.retain(|p| next.contains(p));
                    h = hypothesis;
                    results = next;
                }
                Specialization::Infeasible { blocking } => {
                    prop_assert!(blocking.iter().all(|b| labels.negatives.contains(b)));
                    prop_assert!(!blocking.is_empty() || labels.negatives.is_empty());
                    break;
                }
            }
        }
    }
}

#[test]
fn seed_always_matches_its_generalization() {
    let mut r = rng(7);
    let fb = FactBase::build(random_methods(&mut r, 30, 12));
    for m in fb.method_nodes() {
        let seed = fb.node(m).id.clone();
        for n in fb.method_range(m).skip(1) {
            if fb.node(n).kind == NodeKind::Method {
                continue;
            }
            let sel = SeedSelection {
                method: seed.clone(),
                lines: (0, 0),
                annotated: vec![fb.node(n).id.clone()],
            };
            let h0 = ground_hypothesis(&sel, &fb).unwrap();
            assert!(evaluate(&h0, &fb).unwrap().contains(&seed), "{h0}");
            let h = generalize(&h0, &sel, &fb).unwrap();
            assert!(evaluate(&h, &fb).unwrap().contains(&seed), "{h}");
        }
    }
}
