use serde::Serialize;

use crate::coverage::{self, IntervalSet};
use crate::solution::Solution;

pub const SCHEMA_VERSION: u32 = 1;

/// Per-chromosome solver report. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub schema: u32,
    pub record: &'static str,
    pub chrom: Option<String>,
    pub n: usize,
    pub feasible: bool,
    pub kept: usize,
    pub removed: usize,
    pub mincov: u64,
    pub maxcov_before: u64,
    pub maxcov_after: u64,
    pub method: Option<&'static str>,
    pub flow_solves: u64,
    pub augmentations: u64,
    pub tree_nodes: u64,
    pub subsets: u64,
    pub wall_ms: f64,
}

impl StatsReport {
    pub fn new(chrom: Option<String>, n: usize, maxcov_before: u64, solution: Option<&Solution>, wall_ms: f64) -> Self {
        let work = solution.map(|s| s.work).unwrap_or_default();
        let kept = solution.map_or(0, |s| s.kept.len());
        Self {
            schema: SCHEMA_VERSION,
            record: "solve",
            chrom,
            n,
            feasible: solution.is_some(),
            kept,
            removed: if solution.is_some() { n - kept } else { 0 },
            mincov: solution.map_or(0, |s| s.achieved_mincov),
            maxcov_before,
            maxcov_after: solution.map_or(0, |s| s.achieved_maxcov),
            method: solution.map(|s| s.method.as_str()),
            flow_solves: work.flow_solves,
            augmentations: work.augmentations,
            tree_nodes: work.tree_nodes,
            subsets: work.subsets,
            wall_ms,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Coverage of one chromosome without any pruning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageSummary {
    pub schema: u32,
    pub record: &'static str,
    pub chrom: Option<String>,
    pub n: usize,
    pub span_start: Option<u64>,
    pub span_end: Option<u64>,
    pub segments: usize,
    pub mincov: u64,
    pub maxcov: u64,
}

impl CoverageSummary {
    pub fn new(chrom: Option<String>, set: &IntervalSet) -> Self {
        let profile = coverage::coverage_profile(set);
        let span = set.span();
        Self {
            schema: SCHEMA_VERSION,
            record: "coverage",
            chrom,
            n: set.len(),
            span_start: span.map(|s| s.start),
            span_end: span.map(|s| s.end),
            segments: profile.segments(),
            mincov: profile.min(),
            maxcov: profile.max(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}
