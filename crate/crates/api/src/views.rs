//! JSON bodies of the API.

use std::collections::HashMap;
use std::path::Path;

use facet_core::learner::InconsistencyReport;
use facet_core::{Bias, FactBase, NodeIdx, NodeKind, ResultStatus, Session, Status};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Health {
    pub status: String,
    pub version: String,
    pub fingerprint: String,
    pub methods: usize,
    pub facts: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MethodView {
    pub id: String,
    pub name: String,
    pub file: String,
    pub start_line: u32,
    pub end_line: u32,
}

impl MethodView {
    pub fn new(fb: &FactBase, m: NodeIdx) -> MethodView {
        let node = fb.node(m);
        MethodView {
            id: node.id.clone(),
            name: fb.label(m).to_string(),
            file: fb.file_of(m).to_string(),
            start_line: node.span.start_line,
            end_line: node.span.end_line,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FeatureView {
    pub id: String,
    pub kind: NodeKind,
    pub label: String,
    pub start_line: u32,
    pub end_line: u32,
    pub depth: u32,
    /// Enclosing node, `None` for top-level statements.
    pub parent: Option<String>,
}

impl FeatureView {
    pub fn new(fb: &FactBase, n: NodeIdx) -> FeatureView {
        let node = fb.node(n);
        let method = fb.method_of(n);
        FeatureView {
            id: node.id.clone(),
            kind: node.kind,
            label: fb.label(n).to_string(),
            start_line: node.span.start_line,
            end_line: node.span.end_line,
            depth: node.depth - fb.node(method).depth,
            parent: node.parent.filter(|&p| p != method).map(|p| fb.node(p).id.clone()),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Features {
    pub method: MethodView,
    pub features: Vec<FeatureView>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StartRequest {
    pub method_id: String,
    /// Inclusive 1-based lines; the whole method when absent.
    #[serde(default)]
    pub line_range: Option<(u32, u32)>,
    pub annotated_node_ids: Vec<String>,
    #[serde(default)]
    pub bias: Bias,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelRequest {
    #[serde(default)]
    pub positives: Vec<String>,
    #[serde(default)]
    pub negatives: Vec<String>,
    /// Milliseconds spent inspecting each labeled result.
    #[serde(default)]
    pub inspect_ms: HashMap<String, u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResultView {
    #[serde(flatten)]
    pub method: MethodView,
    pub status: ResultStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snippet: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelView {
    pub method_id: String,
    pub positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inspect_ms: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IterationView {
    pub index: usize,
    pub query: String,
    pub result_count: usize,
    pub labels: Vec<LabelView>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SeedView {
    pub method: MethodView,
    pub line_range: (u32, u32),
    pub annotated: Vec<FeatureView>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionView {
    pub id: String,
    pub status: Status,
    pub bias: Bias,
    pub fingerprint: String,
    pub seed: SeedView,
    pub iterations: Vec<IterationView>,
    /// Index of the current iteration.
    pub iteration: usize,
    pub query: String,
    pub results: Vec<ResultView>,
    pub reports: Vec<InconsistencyReport>,
    /// What the last label request did: `refined`, `unchanged` or `infeasible`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
}

/// Method source, read lazily from the repository root.
pub(crate) struct Sources<'a> {
    root: Option<&'a Path>,
    files: HashMap<String, Option<String>>,
}

impl<'a> Sources<'a> {
    pub(crate) fn new(root: Option<&'a Path>) -> Sources<'a> {
        Sources {
            root,
            files: HashMap::new(),
        }
    }

    pub(crate) fn lines(&mut self, file: &str, start: u32, end: u32) -> Option<String> {
        let root = self.root?;
        let text = self
            .files
            .entry(file.to_string())
            .or_insert_with(|| std::fs::read_to_string(root.join(file)).ok())
            .as_deref()?;
        let lines: Vec<&str> = text
            .lines()
            .skip(start.saturating_sub(1) as usize)
            .take((end + 1).saturating_sub(start) as usize)
            .collect();
        Some(lines.join("\n"))
    }
}

impl SessionView {
    pub(crate) fn new(s: &Session, fb: &FactBase, sources: &mut Sources<'_>, outcome: Option<&str>) -> SessionView {
        let method = |id: &str| -> MethodView {
            match fb.lookup(id) {
                Some(m) => MethodView::new(fb, m),
                None => MethodView {
                    id: id.to_string(),
                    name: String::new(),
                    file: String::new(),
                    start_line: 0,
                    end_line: 0,
                },
            }
        };
        let current = s.current();
        let results = current
            .results
            .iter()
            .map(|id| {
                let m = method(id);
                let snippet = sources.lines(&m.file, m.start_line, m.end_line);
                ResultView {
                    status: s.result_status(id),
                    method: m,
                    snippet,
                }
            })
            .collect();
        SessionView {
            id: s.id.clone(),
            status: s.status,
            bias: s.bias,
            fingerprint: s.fingerprint.clone(),
            seed: SeedView {
                method: method(&s.seed.method),
                line_range: s.seed.lines,
                annotated: s
                    .seed
                    .annotated
                    .iter()
                    .filter_map(|id| fb.lookup(id))
                    .map(|n| FeatureView::new(fb, n))
                    .collect(),
            },
            iterations: s
                .iterations
                .iter()
                .map(|it| IterationView {
                    index: it.index,
                    query: it.query.clone(),
                    result_count: it.results.len(),
                    labels: it
                        .labels
                        .iter()
                        .map(|l| LabelView {
                            method_id: l.method.clone(),
                            positive: l.positive,
                            at_ms: l.at_ms,
                            inspect_ms: l.inspect_ms,
                        })
                        .collect(),
                })
                .collect(),
            iteration: current.index,
            query: current.query.clone(),
            results,
            reports: s.reports.clone(),
            outcome: outcome.map(String::from),
        }
    }
}

/// Body of every error response.
#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorBody {
    /// Machine-readable reason.
    pub error: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<InconsistencyReport>,
}
