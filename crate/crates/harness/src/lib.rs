//! Simulated labeling sessions over a bundled synthetic corpus, with
//! precision, recall and iteration reports.

pub mod corpus;
pub mod manifest;
pub mod metrics;
pub mod simulate;
pub mod sweep;

pub use manifest::{GroundTruthGroup, Manifest, ManifestError};
pub use metrics::{metrics, Scores};
pub use simulate::{
    simulate_group, simulate_records, simulate_run, summarize, LabelPolicy, RunMetrics, RunRecord, SimulationConfig,
    SimulationError, Summary, Termination,
};
pub use sweep::{sweep, Grid, Report};

use std::path::{Path, PathBuf};

/// The committed corpus directory of this crate.
pub fn bundled_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}
