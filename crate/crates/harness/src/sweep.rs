//! Grids of simulation configurations and their tab-separated report.

use std::fmt::Write as _;

use facet_core::{Bias, FactBase};
use serde::Serialize;

use crate::manifest::GroundTruthGroup;
use crate::simulate::{simulate_group, summarize, LabelPolicy, SimulationConfig, SimulationError, Summary};

/// Every combination of the listed values is run on top of `base`.
#[derive(Debug, Clone)]
pub struct Grid {
    pub base: SimulationConfig,
    pub biases: Vec<Bias>,
    pub policies: Vec<LabelPolicy>,
    pub ks: Vec<usize>,
    pub ns: Vec<usize>,
}

impl Grid {
    /// The single cell `cfg`.
    pub fn single(cfg: SimulationConfig) -> Grid {
        Grid {
            biases: vec![cfg.bias],
            policies: vec![cfg.label_policy],
            ks: vec![cfg.k],
            ns: vec![cfg.n],
            base: cfg,
        }
    }

    pub fn configs(&self) -> Vec<SimulationConfig> {
        let mut out = Vec::new();
        for &bias in &self.biases {
            for &label_policy in &self.policies {
                for &k in &self.ks {
                    for &n in &self.ns {
                        out.push(SimulationConfig {
                            k,
                            n,
                            bias,
                            label_policy,
                            ..self.base.clone()
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub group: String,
    pub config: SimulationConfig,
    pub summary: Summary,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub rows: Vec<Row>,
}

pub fn sweep(grid: &Grid, fb: &FactBase, groups: &[GroundTruthGroup]) -> Result<Report, SimulationError> {
    let mut rows = Vec::new();
    for cfg in grid.configs() {
        for g in groups {
            let runs = simulate_group(g, fb, &cfg)?;
            rows.push(Row {
                group: g.name.clone(),
                config: cfg.clone(),
                summary: summarize(&runs),
            });
        }
    }
    Ok(Report { rows })
}

const COLUMNS: &[&str] = &[
    "group",
    "bias",
    "policy",
    "k",
    "n",
    "error_rate",
    "runs",
    "precision",
    "recall",
    "f1",
    "iterations",
    "query_length",
    "flagged",
];

impl Report {
    pub fn to_tsv(&self) -> String {
        let mut out = COLUMNS.join("\t");
        out.push('\n');
        for r in &self.rows {
            let c = &r.config;
            let s = &r.summary;
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{:.2}\t{:.2}\t{:.2}",
                r.group,
                c.bias,
                c.label_policy,
                c.k,
                c.n,
                c.error_rate,
                s.runs,
                s.precision,
                s.recall,
                s.f1,
                s.iterations,
                s.query_length,
                s.flagged
            );
        }
        out
    }

    /// One line per configuration, averaged over groups.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let mut seen: Vec<&SimulationConfig> = Vec::new();
        for r in &self.rows {
            if seen.contains(&&r.config) {
                continue;
            }
            seen.push(&r.config);
            let cells: Vec<&Summary> = self
                .rows
                .iter()
                .filter(|x| x.config == r.config)
                .map(|x| &x.summary)
                .collect();
            let n = cells.len() as f64;
            let mean = |f: fn(&Summary) -> f64| cells.iter().map(|s| f(s)).sum::<f64>() / n;
            let c = &r.config;
            let _ = writeln!(
                out,
                "{} bias, {} labels, k={}, n={}, error rate {}: precision {:.2}, recall {:.2}, F1 {:.2}, {:.1} iterations, {:.1} atoms, {:.0}% flagged over {} groups",
                c.bias,
                c.label_policy,
                c.k,
                c.n,
                c.error_rate,
                mean(|s| s.precision),
                mean(|s| s.recall),
                mean(|s| s.f1),
                mean(|s| s.iterations),
                mean(|s| s.query_length),
                100.0 * mean(|s| s.flagged),
                cells.len()
            );
        }
        out
    }
}
