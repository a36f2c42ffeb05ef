use facet_core::{extract_repository, Bias, FactBase};
use facet_harness::simulate::ConfigError;
use facet_harness::{
    bundled_corpus, simulate_group, simulate_records, summarize, sweep, Grid, GroundTruthGroup, LabelPolicy, Manifest,
    SimulationConfig, SimulationError, Termination,
};
use proptest::prelude::*;

fn corpus() -> (FactBase, Manifest) {
    let dir = bundled_corpus();
    let (fb, _) = extract_repository(&dir).unwrap();
    (fb, Manifest::load(&dir.join("groups.toml")).unwrap())
}

fn small(runs: usize) -> SimulationConfig {
    SimulationConfig {
        runs,
        ..SimulationConfig::default()
    }
}

#[test]
fn runs_are_reproducible() {
    let (fb, m) = corpus();
    let g = &m.groups[0];
    let a = simulate_group(g, &fb, &small(4)).unwrap();
    let b = simulate_group(g, &fb, &small(4)).unwrap();
    assert_eq!(a, b);
    let other = simulate_group(g, &fb, &SimulationConfig { seed: 99, ..small(4) }).unwrap();
    assert_eq!(other.len(), 4);
}

#[test]
fn clean_oracle_never_flags() {
    let (fb, m) = corpus();
    for g in &m.groups {
        for r in simulate_records(g, &fb, &small(3)).unwrap() {
            assert!(!r.metrics.flagged_inconsistent, "{}: {:?}", g.name, r.session.reports);
            assert!(r.session.reports.is_empty());
            assert_eq!(r.metrics.history.len(), r.metrics.iterations);
        }
    }
}

#[test]
fn history_matches_the_session() {
    let (fb, m) = corpus();
    let g = &m.groups[1];
    for r in simulate_records(g, &fb, &small(3)).unwrap() {
        for (score, it) in r.metrics.history.iter().zip(&r.session.iterations) {
            assert_eq!(score.results, it.results.len());
        }
        let last = r.metrics.history.last().unwrap();
        assert_eq!(last.precision, r.metrics.precision);
        assert_eq!(last.recall, r.metrics.recall);
        // at() clamps past the end of the run
        assert_eq!(r.metrics.at(100), last);
        assert_eq!(r.metrics.at(0), &r.metrics.history[0]);
    }
}

#[test]
fn iteration_cap_stops_runs() {
    let (fb, m) = corpus();
    let cfg = SimulationConfig {
        max_iterations: 1,
        ..small(3)
    };
    for r in simulate_group(&m.groups[2], &fb, &cfg).unwrap() {
        assert_eq!(r.iterations, 1);
        assert!(matches!(
            r.termination,
            Termination::IterationCap | Termination::Exhausted
        ));
    }
}

#[test]
fn config_is_validated() {
    let (fb, m) = corpus();
    for (cfg, want) in [
        (SimulationConfig { k: 0, ..small(1) }, ConfigError::K),
        (SimulationConfig { n: 0, ..small(1) }, ConfigError::N),
        (SimulationConfig { runs: 0, ..small(1) }, ConfigError::Runs),
        (
            SimulationConfig {
                error_rate: 1.5,
                ..small(1)
            },
            ConfigError::ErrorRate(1.5),
        ),
        (
            SimulationConfig {
                max_iterations: 0,
                ..small(1)
            },
            ConfigError::MaxIterations,
        ),
    ] {
        match simulate_group(&m.groups[0], &fb, &cfg) {
            Err(SimulationError::Config(e)) => assert_eq!(e, want),
            other => panic!("{other:?}"),
        }
    }
    let empty = GroundTruthGroup {
        name: "empty".into(),
        members: Vec::new(),
        paths: Vec::new(),
    };
    assert!(matches!(
        simulate_group(&empty, &fb, &small(1)),
        Err(SimulationError::EmptyGroup(_))
    ));
    let ghost = GroundTruthGroup {
        name: "ghost".into(),
        members: vec!["Nowhere.java#gone()".into()],
        paths: Vec::new(),
    };
    assert!(matches!(
        simulate_group(&ghost, &fb, &small(1)),
        Err(SimulationError::UnknownSeed(_))
    ));
}

#[test]
fn policies_parse() {
    for p in LabelPolicy::ALL {
        assert_eq!(p.as_str().parse::<LabelPolicy>().unwrap(), p);
    }
    assert_eq!("negatives".parse::<LabelPolicy>().unwrap(), LabelPolicy::NegativesOnly);
    assert!("some".parse::<LabelPolicy>().is_err());
}

#[test]
fn single_cell_sweep_equals_simulate_group() {
    let (fb, m) = corpus();
    let cfg = SimulationConfig {
        bias: Bias::SequentialOrder,
        ..small(3)
    };
    let report = sweep(&Grid::single(cfg.clone()), &fb, &m.groups[..2]).unwrap();
    assert_eq!(report.rows.len(), 2);
    for (row, g) in report.rows.iter().zip(&m.groups) {
        assert_eq!(row.group, g.name);
        assert_eq!(row.config, cfg);
        assert_eq!(row.summary, summarize(&simulate_group(g, &fb, &cfg).unwrap()));
    }
}

#[test]
fn sweep_report_formats() {
    let (fb, m) = corpus();
    let grid = Grid {
        base: small(2),
        biases: vec![Bias::NestedStructure, Bias::FeatureVector],
        policies: vec![LabelPolicy::Both],
        ks: vec![1, 2],
        ns: vec![3],
    };
    assert_eq!(grid.configs().len(), 4);
    let report = sweep(&grid, &fb, &m.groups[..1]).unwrap();
    let tsv = report.to_tsv();
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("group\tbias\tpolicy\tk\tn"));
    assert!(lines.iter().all(|l| l.split('\t').count() == 13));
    assert!(lines[1].starts_with(&format!("{}\tnested-structure\tboth\t1\t3\t", m.groups[0].name)));
    assert_eq!(report.summary().lines().count(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn results_only_shrink(seed in any::<u64>(), bias_i in 0usize..3, group in 0usize..5, noisy in any::<bool>()) {
        let (fb, m) = corpus();
        let cfg = SimulationConfig {
            bias: Bias::ALL[bias_i],
            error_rate: if noisy { 0.2 } else { 0.0 },
            seed,
            ..small(1)
        };
        let r = simulate_records(&m.groups[group], &fb, &cfg).unwrap().remove(0);
        for w in r.session.iterations.windows(2) {
            prop_assert!(w[1].results.iter().all(|x| w[0].results.contains(x)));
        }
        prop_assert!(r.session.iterations[0].results.contains(&r.session.seed.method));
        prop_assert!(r.session.current().results.contains(&r.session.seed.method));
    }
}
