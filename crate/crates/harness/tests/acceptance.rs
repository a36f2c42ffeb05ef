//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use facet_core::brute::brute_force_evaluate;
use facet_core::random::{random_methods, random_query};
use facet_core::regexize::{compact, Pattern};
use facet_core::{
    evaluate, extract_repository, generalize, ground_hypothesis, parse_query, regexize, specialize, Bias, FactBase,
    LabelSet, NodeKind, SeedSelection, Specialization, TieBreak,
};
use facet_harness::corpus::{performance_repository, write_files};
use facet_harness::{bundled_corpus, simulate_group, simulate_run, summarize, LabelPolicy, Manifest, SimulationConfig};

type Check = Result<String, String>;

struct Corpus {
    fb: FactBase,
    manifest: Manifest,
}

fn corpus() -> Corpus {
    let dir = bundled_corpus();
    let (fb, _) = extract_repository(&dir).expect("bundled corpus extracts");
    let manifest = Manifest::load(&dir.join("groups.toml")).expect("bundled manifest loads");
    manifest.validate(&fb).expect("bundled manifest is valid");
    Corpus { fb, manifest }
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut queries = 0;
    let mut mismatches = Vec::new();
    while queries < 1000 {
        let fb = FactBase::build(random_methods(&mut rng, 6, 10));
        if fb.fact_count() > 200 {
            continue;
        }
        for _ in 0..10 {
            let h = random_query(&mut rng, 2);
            if h.len() > 5 {
                continue;
            }
            let fast: BTreeSet<String> = evaluate(&h, &fb).map_err(|e| e.to_string())?.into_iter().collect();
            let slow = brute_force_evaluate(&h, &fb).map_err(|e| e.to_string())?;
            if fast != slow {
                mismatches.push(h.to_string());
            }
            queries += 1;
        }
    }
    let took = start.elapsed();
    let detail = format!("{queries} queries, {} mismatches, {took:.2?}", mismatches.len());
    if mismatches.is_empty() && took < Duration::from_secs(60) {
        Ok(detail)
    } else {
        Err(format!("{detail}; first: {:?}", mismatches.first()))
    }
}

const SEED: &str = "DefaultCommentMapper.java#getLeadingComments(ASTNode)";
const POSITIVE: &str = "DefaultCommentMapper.java#getExtendedStartPosition(ASTNode)";
const NEGATIVE: &str = "Parser.java#checkComment()";
const ITERATION_1: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(X,IF2), iflike(IF2,".*!=null")."#;
const ITERATION_2: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(IF0,IF2), iflike(IF2,".*!=null")."#;

fn walkthrough() -> Check {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/figures");
    let (fb, _) = extract_repository(&dir).map_err(|e| e.to_string())?;
    let seed = SeedSelection {
        method: SEED.into(),
        lines: (7, 19),
        annotated: vec![format!("{SEED}#if1"), format!("{SEED}#if3")],
    };
    let h0 = ground_hypothesis(&seed, &fb).map_err(|e| e.to_string())?;
    let h1 = generalize(&h0, &seed, &fb).map_err(|e| e.to_string())?;
    if h1.to_string() != ITERATION_1 {
        return Err(format!("iteration 1 is {h1}"));
    }
    let r1: BTreeSet<String> = evaluate(&h1, &fb).map_err(|e| e.to_string())?.into_iter().collect();
    if !(r1.contains(SEED) && r1.contains(POSITIVE) && r1.contains(NEGATIVE)) {
        return Err(format!("iteration 1 results {r1:?}"));
    }
    let labels = LabelSet {
        positives: [SEED.to_string(), POSITIVE.to_string()].into(),
        negatives: [NEGATIVE.to_string()].into(),
    };
    let h2 = match specialize(
        &h1,
        &labels,
        Bias::NestedStructure,
        &fb,
        SEED,
        TieBreak::Deterministic,
        2,
    ) {
        Ok(Specialization::Refined { hypothesis, .. }) => hypothesis,
        other => return Err(format!("specialization gave {other:?}")),
    };
    if h2.to_string() != ITERATION_2 {
        return Err(format!("iteration 2 is {h2}"));
    }
    let r2: BTreeSet<String> = evaluate(&h2, &fb).map_err(|e| e.to_string())?.into_iter().collect();
    let expected: BTreeSet<String> = [
        SEED,
        POSITIVE,
        "DefaultCommentMapper.java#getTrailingComments(ASTNode)",
        "DefaultCommentMapper.java#getExtendedEnd(ASTNode)",
    ]
    .map(String::from)
    .into();
    if r2 != expected || !r2.is_subset(&r1) || r2.len() >= r1.len() {
        return Err(format!("iteration 2 results {r2:?}"));
    }
    Ok(format!("{} -> {} results", r1.len(), r2.len()))
}

fn consistency_and_monotonicity(c: &Corpus) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let (mut refinements, mut violations) = (0, Vec::new());
    for run in 0..200 {
        let group = &c.manifest.groups[run % c.manifest.groups.len()];
        let cfg = SimulationConfig {
            k: rng.gen_range(1..=4),
            n: rng.gen_range(1..=5),
            bias: *Bias::ALL.choose(&mut rng).unwrap(),
            label_policy: *LabelPolicy::ALL.choose(&mut rng).unwrap(),
            error_rate: *[0.0, 0.0, 0.2].choose(&mut rng).unwrap(),
            runs: 1,
            seed: run as u64,
            max_iterations: 10,
        };
        let record = simulate_run(group, &c.fb, &cfg, 0).map_err(|e| e.to_string())?;
        let its = &record.session.iterations;
        let mut negatives = BTreeSet::new();
        for w in its.windows(2) {
            refinements += 1;
            negatives.extend(w[0].labels.iter().filter(|l| !l.positive).map(|l| l.method.clone()));
            let prev: BTreeSet<&String> = w[0].results.iter().collect();
            if let Some(r) = w[1].results.iter().find(|r| !prev.contains(r)) {
                violations.push(format!("run {run}: {r} appeared at iteration {}", w[1].index));
            }
            if let Some(n) = w[1].results.iter().find(|r| negatives.contains(*r)) {
                violations.push(format!("run {run}: negative {n} kept at iteration {}", w[1].index));
            }
        }
    }
    let detail = format!(
        "200 runs, {refinements} specializations, {} violations",
        violations.len()
    );
    if violations.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; first: {}", violations[0]))
    }
}

fn table3(c: &Corpus) -> Check {
    let cfg = SimulationConfig::default();
    let mut rows = Vec::new();
    let (mut p, mut r, mut i) = (0.0, 0.0, 0.0);
    for g in &c.manifest.groups {
        let s = summarize(&simulate_group(g, &c.fb, &cfg).map_err(|e| e.to_string())?);
        rows.push(format!(
            "{} {:.2}/{:.2}/{:.1}",
            g.name, s.precision, s.recall, s.iterations
        ));
        p += s.precision;
        r += s.recall;
        i += s.iterations;
    }
    let n = c.manifest.groups.len() as f64;
    let (p, r, i) = (p / n, r / n, i / n);
    let detail = format!(
        "precision {p:.3}, recall {r:.3}, iterations {i:.2} ({})",
        rows.join(", ")
    );
    if (p - 1.0).abs() < 1e-9 && r >= 0.90 && i <= 5.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn bias_ordering(c: &Corpus) -> Check {
    // totals over equally many runs per group order the same way as means
    let mut totals = Vec::new();
    for bias in [Bias::NestedStructure, Bias::SequentialOrder, Bias::FeatureVector] {
        let cfg = SimulationConfig {
            bias,
            ..SimulationConfig::default()
        };
        let mut total = 0;
        for g in &c.manifest.groups {
            total += simulate_group(g, &c.fb, &cfg)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|r| r.iterations)
                .sum::<usize>();
        }
        totals.push(total);
    }
    let runs = (c.manifest.groups.len() * SimulationConfig::default().runs) as f64;
    let detail = format!(
        "mean iterations nested {:.2}, sequential {:.2}, feature-vector {:.2}",
        totals[0] as f64 / runs,
        totals[1] as f64 / runs,
        totals[2] as f64 / runs
    );
    if totals[0] <= totals[1] && totals[1] <= totals[2] {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn label_policy(c: &Corpus) -> Check {
    let base = SimulationConfig::default();
    let (mut strict_precision, mut strict_recall, mut failures) = (0, 0, Vec::new());
    for g in &c.manifest.groups {
        let run = |label_policy| {
            simulate_group(
                g,
                &c.fb,
                &SimulationConfig {
                    label_policy,
                    ..base.clone()
                },
            )
        };
        let both = run(LabelPolicy::Both).map_err(|e| e.to_string())?;
        let positives = run(LabelPolicy::PositivesOnly).map_err(|e| e.to_string())?;
        let negatives = run(LabelPolicy::NegativesOnly).map_err(|e| e.to_string())?;
        let converged = summarize(&both).iterations.round() as usize;
        let mean_at = |runs: &[facet_harness::RunMetrics]| {
            runs.iter().map(|r| r.at(converged).precision).sum::<f64>() / runs.len() as f64
        };
        let (pb, pp) = (mean_at(&both), mean_at(&positives));
        let (rb, rn) = (summarize(&both).recall, summarize(&negatives).recall);
        if pp < pb {
            strict_precision += 1;
        } else if pp > pb {
            failures.push(format!("{}: positives-only precision {pp:.3} > {pb:.3}", g.name));
        }
        if rn < rb {
            strict_recall += 1;
        } else if rn > rb {
            failures.push(format!("{}: negatives-only recall {rn:.3} > {rb:.3}", g.name));
        }
    }
    let detail = format!(
        "positives-only precision lower on {strict_precision}/{0} groups, negatives-only recall lower on {strict_recall}/{0} and never higher",
        c.manifest.groups.len()
    );
    if failures.is_empty() && strict_precision >= 3 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", failures.join("; ")))
    }
}

fn k_sweep(c: &Corpus) -> Check {
    let mut points = Vec::new();
    for k in 1..=4 {
        let cfg = SimulationConfig {
            k,
            max_iterations: 1,
            ..SimulationConfig::default()
        };
        let (mut p, mut r, mut n) = (0.0, 0.0, 0.0);
        for g in &c.manifest.groups {
            for run in simulate_group(g, &c.fb, &cfg).map_err(|e| e.to_string())? {
                p += run.at(1).precision;
                r += run.at(1).recall;
                n += 1.0;
            }
        }
        points.push((p / n, r / n));
    }
    let detail = points
        .iter()
        .enumerate()
        .map(|(i, (p, r))| format!("k={} P{p:.3} R{r:.3}", i + 1))
        .collect::<Vec<_>>()
        .join(", ");
    let ok = points.windows(2).all(|w| w[1].0 >= w[0].0 && w[1].1 <= w[0].1);
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn noisy_oracle(c: &Corpus) -> Check {
    let groups = c.manifest.groups.len();
    let cfg = SimulationConfig {
        error_rate: 0.2,
        runs: 70 / groups,
        ..SimulationConfig::default()
    };
    let (mut total, mut flagged, mut bad) = (0, 0, Vec::new());
    for g in &c.manifest.groups {
        for (i, r) in simulate_group(g, &c.fb, &cfg)
            .map_err(|e| e.to_string())?
            .into_iter()
            .enumerate()
        {
            total += 1;
            if r.flagged_inconsistent {
                flagged += 1;
            } else if r.completed() && r.precision < 1.0 {
                bad.push(format!("{} run {i}: precision {:.3}", g.name, r.precision));
            }
        }
    }
    let detail = format!(
        "{total} runs, {flagged} flagged, {} unflagged completed runs below precision 1",
        bad.len()
    );
    if total == 70 && flagged > 0 && bad.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", bad.join("; ")))
    }
}

fn regexize_self_match(c: &Corpus) -> Check {
    let mut failures = Vec::new();
    let mut checked = 0;
    for kind in [NodeKind::If, NodeKind::Loop] {
        for (cond, _) in c.fb.labels_of_kind(kind) {
            checked += 1;
            let pattern = regexize(cond);
            for p in [pattern.clone(), compact(&pattern)] {
                let ok = Pattern::new(&p).map(|re| re.matches(cond)).unwrap_or(false);
                if !ok {
                    failures.push(format!("{cond:?} -> {p:?}"));
                }
            }
        }
    }
    for (cond, want) in [
        ("range==null && i<=this.leadingPtr", ".*==null && .*<=this.*"),
        ("this.leadingPtr>=0", "this.*>=0"),
    ] {
        if regexize(cond) != want {
            failures.push(format!("{cond:?} -> {:?}, expected {want:?}", regexize(cond)));
        }
    }
    let detail = format!("{checked} corpus conditions, {} failures", failures.len());
    if failures.is_empty() && checked > 0 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", failures.join("; ")))
    }
}

fn performance() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    write_files(dir.path(), &performance_repository(1000, 1)).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let (fb, report) = extract_repository(dir.path()).map_err(|e| e.to_string())?;
    let extraction = start.elapsed();
    if report.methods_parsed != 1000 {
        return Err(format!("extracted {} methods", report.methods_parsed));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(50_000);
    let mut methods = Vec::new();
    let mut big = FactBase::build(Vec::new());
    while big.fact_count() < 50_000 {
        methods.extend(random_methods(&mut rng, 200, 20));
        big = FactBase::build(methods.clone());
    }
    let h = parse_query(
        r#"query(X) :- methoddec(X), contains(X,A), iflike(A,".*>=0"), contains(A,B), methodcall(B,"get"), before(B,C)."#,
    )
    .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let hits = evaluate(&h, &big).map_err(|e| e.to_string())?.len();
    let query = start.elapsed();
    let detail = format!(
        "extracted 1000 methods ({} facts) in {extraction:.2?}; {}-atom query over {} facts in {query:.2?} ({hits} hits)",
        fb.fact_count(),
        h.len(),
        big.fact_count()
    );
    if extraction < Duration::from_secs(10) && query < Duration::from_secs(2) && h.len() == 6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

type Named<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn main() {
    let c = corpus();
    let checks: Vec<Named<'_>> = vec![
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("golden walkthrough", Box::new(walkthrough)),
        (
            "consistency and monotonicity",
            Box::new(|| consistency_and_monotonicity(&c)),
        ),
        ("simulation trend", Box::new(|| table3(&c))),
        ("bias ordering", Box::new(|| bias_ordering(&c))),
        ("label policy", Box::new(|| label_policy(&c))),
        ("k sweep", Box::new(|| k_sweep(&c))),
        ("noisy oracle", Box::new(|| noisy_oracle(&c))),
        ("regexize self-match", Box::new(|| regexize_self_match(&c))),
        ("performance", Box::new(performance)),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
