//! Ground-truth groups for simulation, stored as TOML:
//!
//! ```toml
//! [[group]]
//! name = "comment-ranges"
//! members = ["org/x/A.java#f(int)", "org/x/A.java#g(int)"]
//! paths = ["org/x/A.java"]
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use facet_core::FactBase;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Methods a user would consider "the same kind of code".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundTruthGroup {
    pub name: String,
    pub members: Vec<String>,
    /// Corpus files the group and its look-alikes live in.
    #[serde(default)]
    pub paths: Vec<String>,
}

impl GroundTruthGroup {
    pub fn member_set(&self) -> BTreeSet<String> {
        self.members.iter().cloned().collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(rename = "group", default)]
    pub groups: Vec<GroundTruthGroup>,
}

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("cannot read manifest: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad manifest: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("group `{0}` has fewer than two members")]
    TooSmall(String),
    #[error("group `{group}` lists unknown method `{method}`")]
    UnknownMember { group: String, method: String },
    #[error("duplicate group name `{0}`")]
    Duplicate(String),
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, ManifestError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Manifest, ManifestError> {
        Manifest::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("manifest serializes")
    }

    /// Checks group sizes and that every member is a method of `fb`.
    pub fn validate(&self, fb: &FactBase) -> Result<(), ManifestError> {
        let mut names = BTreeSet::new();
        for g in &self.groups {
            if !names.insert(&g.name) {
                return Err(ManifestError::Duplicate(g.name.clone()));
            }
            if g.member_set().len() < 2 {
                return Err(ManifestError::TooSmall(g.name.clone()));
            }
            for m in &g.members {
                let ok = fb.lookup(m).is_some_and(|i| fb.method_of(i) == i);
                if !ok {
                    return Err(ManifestError::UnknownMember {
                        group: g.name.clone(),
                        method: m.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn group(&self, name: &str) -> Option<&GroundTruthGroup> {
        self.groups.iter().find(|g| g.name == name)
    }
}
