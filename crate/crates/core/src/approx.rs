//! `O(n log n)` approximation.
//!
//! Intervals are swept in order of their start points. Each one is checked
//! against a coverage tree holding the current coverage of every segment:
//! it is deleted iff its span still exceeds the cap somewhere and its
//! minimum current coverage is above `floor(k/2)` (the interval is
//! expendable). Intervals whose minimum coverage is at most `floor(k/2)` are
//! crucial and always survive, which yields a final minimum coverage of at
//! least `floor(k/2)/k` times the optimum.

use crate::coverage::{self, Interval, IntervalSet};
use crate::error::{Error, Result};
use crate::solution::{Method, Solution, Work};

/// Perfect binary tree over the segments between consecutive delimiters,
/// with per-node min/max of leaf coverage and a lazy balance counter.
///
/// The coverage of a leaf is its stored value plus the balances of all its
/// ancestors and itself. Stored min/max of an internal node aggregate
/// `child.stored + child.balance` over both children.
#[derive(Debug, Clone)]
pub struct CoverageTree {
    delimiters: Vec<u64>,
    /// number of real leaves (segments)
    len: usize,
    /// number of leaves including padding; a power of two
    size: usize,
    min: Vec<i64>,
    max: Vec<i64>,
    balance: Vec<i64>,
    touched: u64,
}

impl CoverageTree {
    /// Builds the tree over the coverage of the full set.
    pub fn build(set: &IntervalSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidInstance("coverage tree needs at least one interval".into()));
        }
        let profile = coverage::coverage_profile(set);
        let values: Vec<i64> = profile.segment_cov.iter().map(|&c| c as i64).collect();
        Ok(Self::from_values(profile.delimiters, &values))
    }

    /// Builds a tree over explicit segment values; `delimiters` must have one
    /// more entry than `values`.
    pub fn from_values(delimiters: Vec<u64>, values: &[i64]) -> Self {
        assert_eq!(delimiters.len(), values.len() + 1, "one value per segment");
        let len = values.len();
        let size = len.next_power_of_two().max(1);
        let mut min = vec![i64::MAX; 2 * size];
        let mut max = vec![i64::MIN; 2 * size];
        for (j, &v) in values.iter().enumerate() {
            min[size + j] = v;
            max[size + j] = v;
        }
        for v in (1..size).rev() {
            min[v] = min[2 * v].min(min[2 * v + 1]);
            max[v] = max[2 * v].max(max[2 * v + 1]);
        }
        Self {
            delimiters,
            len,
            size,
            min,
            max,
            balance: vec![0; 2 * size],
            touched: 0,
        }
    }

    /// Number of real leaves.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn delimiters(&self) -> &[u64] {
        &self.delimiters
    }

    /// Total nodes visited by queries and updates so far.
    pub fn touched(&self) -> u64 {
        self.touched
    }

    pub const ROOT: usize = 1;

    pub fn balance(&self, node: usize) -> i64 {
        self.balance[node]
    }

    /// Current (min, max) over the whole tree.
    pub fn root_min_max(&self) -> (i64, i64) {
        (
            self.min[Self::ROOT] + self.balance[Self::ROOT],
            self.max[Self::ROOT] + self.balance[Self::ROOT],
        )
    }

    /// Current coverage of segment `j`, summing pending balances on the way
    /// down without modifying the tree.
    pub fn leaf_value(&self, j: usize) -> i64 {
        assert!(j < self.len);
        let mut v = self.size + j;
        let mut total = self.min[v];
        while v >= 1 {
            total += self.balance[v];
            v /= 2;
        }
        total
    }

    pub fn leaf_values(&self) -> Vec<i64> {
        (0..self.len).map(|j| self.leaf_value(j)).collect()
    }

    /// Moves the balance of `node` into its two children.
    pub fn push_down(&mut self, node: usize) {
        let b = self.balance[node];
        if b == 0 || node >= self.size {
            return;
        }
        self.balance[2 * node] += b;
        self.balance[2 * node + 1] += b;
        self.balance[node] = 0;
        // children now carry b, so their aggregate rises by b
        self.min[node] = self.min[node].saturating_add(b);
        self.max[node] = self.max[node].saturating_add(b);
    }

    fn segment_range(&self, q: Interval) -> Result<(usize, usize)> {
        let find = |p: u64| self.delimiters.binary_search(&p).map_err(|_| Error::NotADelimiter(p));
        let lo = find(q.start)?;
        let hi = find(q.end)?;
        Ok((lo, hi))
    }

    /// Current (min, max) coverage over `[q.start, q.end)`.
    pub fn range_query(&mut self, q: Interval) -> Result<(i64, i64)> {
        let (lo, hi) = self.segment_range(q)?;
        self.query_segments(lo, hi)
    }

    /// Decrements the coverage of every segment inside `[q.start, q.end)`.
    pub fn range_decrement(&mut self, q: Interval) -> Result<()> {
        let (lo, hi) = self.segment_range(q)?;
        self.add_segments(lo, hi, -1)
    }

    /// (min, max) over segments `lo..hi`.
    pub fn query_segments(&mut self, lo: usize, hi: usize) -> Result<(i64, i64)> {
        if lo >= hi || hi > self.len {
            return Err(Error::EmptyRange);
        }
        Ok(self.query(Self::ROOT, 0, self.size, lo, hi))
    }

    /// Adds `delta` to segments `lo..hi`.
    pub fn add_segments(&mut self, lo: usize, hi: usize, delta: i64) -> Result<()> {
        if lo >= hi || hi > self.len {
            return Err(Error::EmptyRange);
        }
        self.update(Self::ROOT, 0, self.size, lo, hi, delta);
        Ok(())
    }

    fn query(&mut self, v: usize, node_lo: usize, node_hi: usize, lo: usize, hi: usize) -> (i64, i64) {
        self.touched += 1;
        if lo <= node_lo && node_hi <= hi {
            return (self.min[v] + self.balance[v], self.max[v] + self.balance[v]);
        }
        self.push_down(v);
        let mid = (node_lo + node_hi) / 2;
        let mut acc = (i64::MAX, i64::MIN);
        if lo < mid {
            let (a, b) = self.query(2 * v, node_lo, mid, lo, hi);
            acc = (acc.0.min(a), acc.1.max(b));
        }
        if hi > mid {
            let (a, b) = self.query(2 * v + 1, mid, node_hi, lo, hi);
            acc = (acc.0.min(a), acc.1.max(b));
        }
        acc
    }

    fn update(&mut self, v: usize, node_lo: usize, node_hi: usize, lo: usize, hi: usize, delta: i64) {
        self.touched += 1;
        if lo <= node_lo && node_hi <= hi {
            self.balance[v] += delta;
            return;
        }
        self.push_down(v);
        let mid = (node_lo + node_hi) / 2;
        if lo < mid {
            self.update(2 * v, node_lo, mid, lo, hi, delta);
        }
        if hi > mid {
            self.update(2 * v + 1, mid, node_hi, lo, hi, delta);
        }
        self.pull_up(v, node_lo, mid);
    }

    fn pull_up(&mut self, v: usize, node_lo: usize, mid: usize) {
        let (l, r) = (2 * v, 2 * v + 1);
        let left = (self.min[l] + self.balance[l], self.max[l] + self.balance[l]);
        // right child made of padding only
        let right = if mid >= self.len {
            (i64::MAX, i64::MIN)
        } else {
            (self.min[r] + self.balance[r], self.max[r] + self.balance[r])
        };
        debug_assert!(node_lo < self.len);
        self.min[v] = left.0.min(right.0);
        self.max[v] = left.1.max(right.1);
    }
}

/// One step of the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepStep {
    pub index: usize,
    pub mincov: i64,
    pub maxcov: i64,
    pub deleted: bool,
}

/// Prunes `set` so that coverage never exceeds `k`, keeping every segment's
/// coverage at least `min(initial coverage, floor(k/2))`.
pub fn approx_prune(set: &IntervalSet, k: u64) -> Result<Solution> {
    approx_prune_traced(set, k).map(|(sol, _)| sol)
}

/// Like [`approx_prune`], also returning the per-interval decisions in sweep
/// order.
pub fn approx_prune_traced(set: &IntervalSet, k: u64) -> Result<(Solution, Vec<SweepStep>)> {
    if k < 1 {
        return Err(Error::InvalidCap(k));
    }
    if set.is_empty() {
        return Ok((Solution::empty(Method::Approx), Vec::new()));
    }
    let cap = k as i64;
    let floor = (k / 2) as i64;
    let mut tree = CoverageTree::build(set)?;
    let mut order: Vec<usize> = (0..set.len()).collect();
    let items = set.items();
    order.sort_by_key(|&i| (items[i].start, items[i].end, i));

    let mut keep = vec![true; set.len()];
    let mut steps = Vec::with_capacity(set.len());
    for i in order {
        let q = items[i];
        let (mn, mx) = tree.range_query(q)?;
        let deleted = mx > cap && mn > floor;
        if deleted {
            tree.range_decrement(q)?;
            keep[i] = false;
        }
        steps.push(SweepStep {
            index: i,
            mincov: mn,
            maxcov: mx,
            deleted,
        });
    }

    let kept = (0..set.len()).filter(|&i| keep[i]).collect();
    let work = Work {
        tree_nodes: tree.touched(),
        ..Work::default()
    };
    let sol = Solution::measure(set, kept, Method::Approx, work);
    let floor_target = coverage::mincov_span(set).min(k / 2);
    if sol.achieved_maxcov > k || sol.achieved_mincov < floor_target {
        return Err(Error::InvariantViolation(format!(
            "approximation produced maxcov {} (cap {k}) and mincov {} (floor {floor_target})",
            sol.achieved_maxcov, sol.achieved_mincov
        )));
    }
    Ok((sol, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_range_min_max;

    fn fig2() -> IntervalSet {
        IntervalSet::from_pairs([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)]).unwrap()
    }

    fn iv(s: u64, e: u64) -> Interval {
        Interval::new(s, e).unwrap()
    }

    #[test]
    fn build_fig2() {
        let tree = CoverageTree::build(&fig2()).unwrap();
        assert_eq!(tree.delimiters(), &[0, 1, 2, 3, 4, 6, 8, 10]);
        assert_eq!(tree.leaf_values(), vec![2, 4, 4, 3, 4, 3, 2]);
        assert_eq!(tree.root_min_max(), (2, 4));
        assert!((0..tree.min.len()).all(|v| tree.balance(v) == 0));
    }

    #[test]
    fn build_small() {
        let tree = CoverageTree::build(&IntervalSet::from_pairs([(0, 5)]).unwrap()).unwrap();
        assert_eq!(tree.leaf_values(), vec![1]);
        let mut tree = CoverageTree::build(&IntervalSet::from_pairs([(0, 2), (2, 4)]).unwrap()).unwrap();
        assert_eq!(tree.leaf_values(), vec![1, 1]);
        assert_eq!(tree.range_query(iv(0, 4)).unwrap(), (1, 1));
        assert!(CoverageTree::build(&IntervalSet::default()).is_err());
    }

    #[test]
    fn query_and_decrement_fig2() {
        let mut tree = CoverageTree::build(&fig2()).unwrap();
        assert_eq!(tree.range_query(iv(1, 3)).unwrap(), (4, 4));
        assert_eq!(tree.range_query(iv(4, 6)).unwrap(), (4, 4));
        tree.range_decrement(iv(0, 2)).unwrap();
        assert_eq!(tree.range_query(iv(0, 2)).unwrap(), (1, 3));
        // untouched range
        assert_eq!(tree.range_query(iv(2, 10)).unwrap(), (2, 4));
        assert_eq!(tree.range_query(iv(5, 6)), Err(Error::NotADelimiter(5)));
    }

    #[test]
    fn full_span_decrements_shift_root() {
        let mut tree = CoverageTree::build(&fig2()).unwrap();
        for _ in 0..3 {
            tree.range_decrement(iv(0, 10)).unwrap();
        }
        assert_eq!(tree.root_min_max(), (-1, 1));
        assert_eq!(tree.range_query(iv(0, 10)).unwrap(), (-1, 1));
    }

    #[test]
    fn push_down_is_semantic_no_op() {
        let mut tree = CoverageTree::from_values(vec![0, 1, 2, 3, 4], &[5, 6, 7, 8]);
        tree.add_segments(0, 4, -2).unwrap();
        assert_eq!(tree.balance(CoverageTree::ROOT), -2);
        let before = tree.leaf_values();
        tree.push_down(CoverageTree::ROOT);
        assert_eq!(tree.balance(CoverageTree::ROOT), 0);
        assert_eq!(tree.balance(2), -2);
        assert_eq!(tree.balance(3), -2);
        assert_eq!(tree.leaf_values(), before);
        tree.push_down(CoverageTree::ROOT);
        assert_eq!(tree.balance(2), -2);
        assert_eq!(tree.root_min_max(), (3, 6));
        assert_eq!(tree.query_segments(1, 3).unwrap(), (4, 5));
    }

    #[test]
    fn padding_never_leaks() {
        // 5 segments padded to 8
        let values = [3, 1, 4, 1, 5];
        let mut tree = CoverageTree::from_values((0..6).collect(), &values);
        for _ in 0..10 {
            tree.add_segments(0, 5, -1).unwrap();
            tree.add_segments(4, 5, 1).unwrap();
        }
        assert_eq!(tree.leaf_values(), vec![-7, -9, -6, -9, 5]);
        assert_eq!(tree.root_min_max(), (-9, 5));
        assert_eq!(tree.query_segments(0, 5).unwrap(), (-9, 5));
    }

    #[test]
    fn random_against_flat_array() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let len = rng.gen_range(1..40);
            let mut flat: Vec<i64> = (0..len).map(|_| rng.gen_range(0..20)).collect();
            let mut tree = CoverageTree::from_values((0..=len as u64).collect(), &flat);
            for _ in 0..100 {
                let a = rng.gen_range(0..len);
                let b = rng.gen_range(a + 1..=len);
                if rng.gen_bool(0.5) {
                    tree.add_segments(a, b, -1).unwrap();
                    flat[a..b].iter_mut().for_each(|x| *x -= 1);
                } else {
                    assert_eq!(tree.query_segments(a, b).unwrap(), naive_range_min_max(&flat, a..b).unwrap());
                }
            }
            assert_eq!(tree.leaf_values(), flat);
        }
    }

    #[test]
    fn three_identical_intervals() {
        let s = IntervalSet::from_pairs([(0, 10), (0, 10), (0, 10)]).unwrap();
        let (sol, steps) = approx_prune_traced(&s, 2).unwrap();
        assert_eq!(sol.kept, vec![1, 2]);
        assert_eq!(sol.achieved_mincov, 2);
        assert_eq!((steps[0].mincov, steps[0].maxcov, steps[0].deleted), (3, 3, true));
        assert_eq!((steps[1].mincov, steps[1].maxcov, steps[1].deleted), (2, 2, false));
    }

    #[test]
    fn fig2_trace() {
        let (sol, steps) = approx_prune_traced(&fig2(), 3).unwrap();
        let order: Vec<usize> = steps.iter().map(|s| s.index).collect();
        // B, A, D, E, C, F
        assert_eq!(order, vec![1, 0, 3, 4, 2, 5]);
        let deleted: Vec<bool> = steps.iter().map(|s| s.deleted).collect();
        assert_eq!(deleted, vec![true, false, true, true, false, false]);
        let mm: Vec<(i64, i64)> = steps.iter().map(|s| (s.mincov, s.maxcov)).collect();
        assert_eq!(mm, vec![(2, 4), (1, 4), (3, 4), (2, 4), (2, 3), (1, 3)]);
        assert_eq!(sol.kept, vec![0, 2, 5]);
        assert_eq!(sol.achieved_maxcov, 3);
        assert_eq!(sol.achieved_mincov, 1);
    }

    #[test]
    fn nothing_deleted_under_cap() {
        let s = fig2();
        let sol = approx_prune(&s, 4).unwrap();
        assert_eq!(sol.kept, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn errors_and_empty() {
        assert_eq!(approx_prune(&fig2(), 0), Err(Error::InvalidCap(0)));
        let sol = approx_prune(&IntervalSet::default(), 3).unwrap();
        assert!(sol.kept.is_empty());
    }
}
