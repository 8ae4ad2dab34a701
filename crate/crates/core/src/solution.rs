use std::fmt;

use serde::Serialize;

use crate::coverage::{self, IntervalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactGeneric,
    ExactTailored,
    Approx,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactGeneric => "exact-generic",
            Method::ExactTailored => "exact-tailored",
            Method::Approx => "approx",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Work counters accumulated by a solver run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Work {
    pub flow_solves: u64,
    pub augmentations: u64,
    pub tree_nodes: u64,
    pub subsets: u64,
}

/// A pruned subset of an instance.
///
/// `kept` holds ascending indices into the original set. The achieved
/// coverages are measured over the span of the original set, with uncovered
/// points counting as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub kept: Vec<usize>,
    pub achieved_mincov: u64,
    pub achieved_maxcov: u64,
    pub method: Method,
    pub work: Work,
}

impl Solution {
    pub(crate) fn empty(method: Method) -> Self {
        Self {
            kept: Vec::new(),
            achieved_mincov: 0,
            achieved_maxcov: 0,
            method,
            work: Work::default(),
        }
    }

    /// Measures `kept` against `set` and wraps it as a solution.
    pub(crate) fn measure(set: &IntervalSet, mut kept: Vec<usize>, method: Method, work: Work) -> Self {
        kept.sort_unstable();
        let (achieved_mincov, achieved_maxcov) = match set.span() {
            None => (0, 0),
            Some(span) => {
                let profile = coverage::coverage_profile(&set.subset(&kept));
                (profile.min_over(span), profile.max())
            }
        };
        Self {
            kept,
            achieved_mincov,
            achieved_maxcov,
            method,
            work,
        }
    }

    /// Indices of `set` not in `kept`.
    pub fn removed(&self, n: usize) -> Vec<usize> {
        let mut keep = vec![false; n];
        for &i in &self.kept {
            keep[i] = true;
        }
        (0..n).filter(|&i| !keep[i]).collect()
    }
}
