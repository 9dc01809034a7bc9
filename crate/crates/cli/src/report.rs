//! Machine-readable run reports.

use std::collections::BTreeMap;

use dim_core::{SearchStats, Status};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReportStatus {
    #[serde(rename = "found")]
    Found,
    #[serde(rename = "noDim")]
    NoDim,
}

impl From<Status> for ReportStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Found => ReportStatus::Found,
            Status::NoDim => ReportStatus::NoDim,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_stack: usize,
    pub rule_firings: BTreeMap<String, u64>,
}

impl From<&SearchStats> for ReportStats {
    fn from(s: &SearchStats) -> Self {
        ReportStats { nodes: s.nodes, leaves: s.leaves, max_stack: s.max_stack, rule_firings: s.rule_firings() }
    }
}

/// One solver run. Edges are 1-based like the input format; `count` is a
/// decimal string because it can exceed any fixed-width integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub input: String,
    pub status: ReportStatus,
    pub weight: Option<f64>,
    pub edges: Vec<[usize; 2]>,
    pub count: String,
    pub stats: ReportStats,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// One row of the leaf-bound benchmark.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub status: ReportStatus,
    pub leaves: u64,
    pub bound: f64,
    pub ratio: f64,
    pub pass: bool,
    pub wall_ms: f64,
}
