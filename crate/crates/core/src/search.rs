//! Exact optimization: the largest threshold `t` for which the flow decision
//! succeeds, found by doubling followed by binary search.

use std::fmt;
use std::str::FromStr;

use crate::coverage::{self, IntervalSet};
use crate::error::{Error, Result};
use crate::flow;
pub use crate::solution::{Method, Solution, Work};

/// Max-flow engine used for each decision probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Augmenting paths from the zero flow.
    Generic,
    /// Augmenting paths from the backbone flow of value `k - t`; at most `t`
    /// augmentations per probe.
    Tailored,
}

impl Engine {
    pub fn warm_start(self) -> bool {
        matches!(self, Engine::Tailored)
    }

    pub fn method(self) -> Method {
        match self {
            Engine::Generic => Method::ExactGeneric,
            Engine::Tailored => Method::ExactTailored,
        }
    }

    /// Tailored when `k <= n / max(1, log2 n)`, generic otherwise.
    pub fn default_for(n: usize, k: u64) -> Engine {
        let log = if n > 1 { (n as f64).log2() } else { 1.0 };
        if (k as f64) <= n as f64 / log.max(1.0) {
            Engine::Tailored
        } else {
            Engine::Generic
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Generic => "generic",
            Engine::Tailored => "tailored",
        })
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "generic" => Ok(Engine::Generic),
            "tailored" => Ok(Engine::Tailored),
            other => Err(format!("unknown engine '{other}' (expected generic or tailored)")),
        }
    }
}

/// `min(k, mincov_span(S))`; no subset can do better.
pub fn opt_upper_bound(set: &IntervalSet, k: u64) -> u64 {
    k.min(coverage::mincov_span(set))
}

/// One decision probe issued during the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probe {
    pub t: u64,
    pub feasible: bool,
}

/// Finds a subset with coverage at most `k` maximizing the minimum coverage
/// over the original span.
pub fn solve_exact(set: &IntervalSet, k: u64, engine: Engine) -> Result<Solution> {
    solve_exact_traced(set, k, engine).map(|(sol, _)| sol)
}

/// Like [`solve_exact`], also returning the sequence of thresholds probed.
pub fn solve_exact_traced(set: &IntervalSet, k: u64, engine: Engine) -> Result<(Solution, Vec<Probe>)> {
    if k < 1 {
        return Err(Error::InvalidCap(k));
    }
    let method = engine.method();
    if set.is_empty() {
        return Ok((Solution::empty(method), Vec::new()));
    }
    let profile = coverage::coverage_profile(set);
    if profile.max() <= k {
        let all = (0..set.len()).collect();
        return Ok((Solution::measure(set, all, method, Work::default()), Vec::new()));
    }

    let upper = k.min(profile.min());
    // OPT <= upper, so upper + 1 is the largest threshold worth probing.
    let cap = k.min(upper + 1);
    let mut prober = Prober {
        set,
        k,
        warm_start: engine.warm_start(),
        work: Work::default(),
        probes: Vec::new(),
    };

    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut first_bad: Option<u64> = None;
    if upper > 0 {
        let mut t = 1;
        loop {
            match prober.probe(t)? {
                Some(kept) => {
                    best = Some((t, kept));
                    if t == cap {
                        break;
                    }
                    t = (2 * t).min(cap);
                }
                None => {
                    first_bad = Some(t);
                    break;
                }
            }
        }
    }

    let (opt, kept) = match best {
        None => {
            let kept = prober.probe(0)?.expect("t = 0 is always feasible");
            (0, kept)
        }
        Some((mut lo, mut witness)) => {
            if let Some(mut hi) = first_bad {
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    match prober.probe(mid)? {
                        Some(kept) => {
                            lo = mid;
                            witness = kept;
                        }
                        None => hi = mid,
                    }
                }
            }
            (lo, witness)
        }
    };
    let sol = Solution::measure(set, kept, method, prober.work);
    if sol.achieved_mincov != opt || sol.achieved_maxcov > k {
        return Err(Error::InvariantViolation(format!(
            "flow witness measures mincov {} / maxcov {}, expected {opt} / <= {k}",
            sol.achieved_mincov, sol.achieved_maxcov
        )));
    }
    Ok((sol, prober.probes))
}

struct Prober<'a> {
    set: &'a IntervalSet,
    k: u64,
    warm_start: bool,
    work: Work,
    probes: Vec<Probe>,
}

impl Prober<'_> {
    fn probe(&mut self, t: u64) -> Result<Option<Vec<usize>>> {
        let run = flow::run_flow(self.set, self.k, t, self.warm_start)?;
        self.work.flow_solves += 1;
        self.work.augmentations += run.max_flow.augmentations;
        let feasible = run.is_feasible();
        self.probes.push(Probe { t, feasible });
        Ok(feasible.then(|| run.kept()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> IntervalSet {
        IntervalSet::from_pairs([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)]).unwrap()
    }

    #[test]
    fn fig2_optimum_and_probe_order() {
        for engine in [Engine::Generic, Engine::Tailored] {
            let (sol, probes) = solve_exact_traced(&fig2(), 3, engine).unwrap();
            assert_eq!(sol.achieved_mincov, 2);
            assert!(sol.achieved_maxcov <= 3);
            // A and B are the only intervals at p = 0, E and F the only ones on [8, 10)
            for needed in [0, 1, 4, 5] {
                assert!(sol.kept.contains(&needed));
            }
            let seq: Vec<(u64, bool)> = probes.iter().map(|p| (p.t, p.feasible)).collect();
            assert_eq!(seq, vec![(1, true), (2, true), (3, false)]);
            assert_eq!(sol.method, engine.method());
        }
    }

    #[test]
    fn shortcut_when_already_under_cap() {
        let s = IntervalSet::from_pairs([(0, 5)]).unwrap();
        let (sol, probes) = solve_exact_traced(&s, 2, Engine::Tailored).unwrap();
        assert_eq!(sol.achieved_mincov, 1);
        assert_eq!(sol.kept, vec![0]);
        assert!(probes.is_empty());
    }

    #[test]
    fn gap_forces_zero() {
        let s = IntervalSet::from_pairs([(0, 2), (0, 2), (3, 5)]).unwrap();
        for engine in [Engine::Generic, Engine::Tailored] {
            let sol = solve_exact(&s, 1, engine).unwrap();
            assert_eq!(sol.achieved_mincov, 0);
            assert!(sol.achieved_maxcov <= 1);
        }
    }

    #[test]
    fn empty_and_invalid() {
        let sol = solve_exact(&IntervalSet::default(), 4, Engine::Generic).unwrap();
        assert!(sol.kept.is_empty());
        assert_eq!(sol.achieved_mincov, 0);
        assert_eq!(solve_exact(&fig2(), 0, Engine::Generic), Err(Error::InvalidCap(0)));
    }

    #[test]
    fn upper_bound() {
        assert_eq!(opt_upper_bound(&fig2(), 3), 2);
        assert_eq!(opt_upper_bound(&IntervalSet::default(), 3), 0);
        let five = IntervalSet::from_pairs(std::iter::repeat_n((0, 9), 5)).unwrap();
        assert_eq!(opt_upper_bound(&five, 1), 1);
    }

    #[test]
    fn reaches_k_when_possible() {
        let s = IntervalSet::from_pairs(std::iter::repeat_n((0, 9), 7)).unwrap();
        let (sol, probes) = solve_exact_traced(&s, 5, Engine::Tailored).unwrap();
        assert_eq!(sol.achieved_mincov, 5);
        assert_eq!(sol.kept.len(), 5);
        let ts: Vec<u64> = probes.iter().map(|p| p.t).collect();
        assert_eq!(ts, vec![1, 2, 4, 5]);
    }

    #[test]
    fn default_engine_choice() {
        assert_eq!(Engine::default_for(100_000, 30), Engine::Tailored);
        assert_eq!(Engine::default_for(16, 10), Engine::Generic);
        assert_eq!(Engine::default_for(1, 1), Engine::Tailored);
    }
}
