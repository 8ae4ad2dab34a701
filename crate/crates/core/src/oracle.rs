//! Brute-force references for checking the solvers on small inputs.

use std::ops::Range;

use crate::coverage::IntervalSet;
use crate::error::{Error, Result};
use crate::solution::{Method, Solution, Work};

/// Default guard on the number of intervals for exhaustive enumeration.
pub const DEFAULT_LIMIT: usize = 20;

/// Guard applied when the caller overrides the default limit.
pub const HARD_LIMIT: usize = 30;

/// Enumerates every subset of `set` and returns one with coverage at most
/// `k` maximizing the minimum coverage over the span of `set`.
///
/// Among optimal subsets the lexicographically smallest sorted index list is
/// returned. Refuses inputs with more than `limit` intervals (`limit` itself
/// is clamped to [`HARD_LIMIT`]).
pub fn brute_force_opt(set: &IntervalSet, k: u64, limit: usize) -> Result<Solution> {
    if k < 1 {
        return Err(Error::InvalidCap(k));
    }
    let n = set.len();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(Solution::empty(Method::Oracle));
    }

    // One probe point per elementary segment; its mask holds every interval
    // covering it.
    let mut points: Vec<u64> = set.iter().flat_map(|iv| [iv.start, iv.end]).collect();
    points.sort_unstable();
    points.dedup();
    points.pop();
    let masks: Vec<u64> = points
        .iter()
        .map(|&p| {
            set.iter()
                .enumerate()
                .filter(|(_, iv)| iv.covers(p))
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect();

    let mut best: Option<(u64, u64)> = None;
    for subset in 0..(1u64 << n) {
        let mut lo = u64::MAX;
        let mut hi = 0;
        for &m in &masks {
            let c = (m & subset).count_ones() as u64;
            lo = lo.min(c);
            hi = hi.max(c);
        }
        if hi > k {
            continue;
        }
        best = match best {
            None => Some((subset, lo)),
            Some((b, v)) if lo > v || (lo == v && lex_less(subset, b)) => Some((subset, lo)),
            keep => keep,
        };
    }

    let (mask, mincov) = best.expect("the empty subset is always feasible");
    let kept: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
    let maxcov = masks.iter().map(|&m| (m & mask).count_ones() as u64).max().unwrap_or(0);
    Ok(Solution {
        kept,
        achieved_mincov: mincov,
        achieved_maxcov: maxcov,
        method: Method::Oracle,
        work: Work {
            subsets: 1 << n,
            ..Work::default()
        },
    })
}

/// Whether the ascending index list of `a` precedes that of `b`.
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let d = (a ^ b).trailing_zeros();
    let a_has_d = a & (1 << d) != 0;
    let lacking = if a_has_d { b } else { a };
    // the list lacking d comes first only if it stops before d
    let lacking_ends = d == 63 || lacking >> (d + 1) == 0;
    a_has_d != lacking_ends
}

/// Linear-scan minimum and maximum over `values[range]`.
pub fn naive_range_min_max(values: &[i64], range: Range<usize>) -> Result<(i64, i64)> {
    let slice = values.get(range).ok_or(Error::EmptyRange)?;
    let min = *slice.iter().min().ok_or(Error::EmptyRange)?;
    let max = *slice.iter().max().ok_or(Error::EmptyRange)?;
    Ok((min, max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_list(m: u64) -> Vec<usize> {
        (0..64).filter(|&i| m & (1 << i) != 0).collect()
    }

    #[test]
    fn lex_order_matches_vec_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(lex_less(a, b), as_list(a) < as_list(b), "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn fig2_opt() {
        let s = IntervalSet::from_pairs([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)]).unwrap();
        let sol = brute_force_opt(&s, 3, DEFAULT_LIMIT).unwrap();
        assert_eq!(sol.achieved_mincov, 2);
        assert!(sol.achieved_maxcov <= 3);
        assert_eq!(sol.work.subsets, 64);
    }

    #[test]
    fn single_and_empty() {
        let s = IntervalSet::from_pairs([(0, 5)]).unwrap();
        let sol = brute_force_opt(&s, 1, DEFAULT_LIMIT).unwrap();
        assert_eq!(sol.achieved_mincov, 1);
        assert_eq!(sol.kept, vec![0]);

        let sol = brute_force_opt(&IntervalSet::default(), 4, DEFAULT_LIMIT).unwrap();
        assert_eq!(sol.achieved_mincov, 0);
        assert!(sol.kept.is_empty());
    }

    #[test]
    fn smallest_witness_among_ties() {
        let s = IntervalSet::from_pairs([(0, 5), (0, 5), (0, 5)]).unwrap();
        let sol = brute_force_opt(&s, 2, DEFAULT_LIMIT).unwrap();
        assert_eq!(sol.kept, vec![0, 1]);
        // with OPT = 0 the empty set wins the tie-break
        let gap = IntervalSet::from_pairs([(0, 2), (0, 2), (3, 5)]).unwrap();
        let sol = brute_force_opt(&gap, 1, DEFAULT_LIMIT).unwrap();
        assert_eq!(sol.achieved_mincov, 0);
        assert!(sol.kept.is_empty());
    }

    #[test]
    fn guard() {
        let s = IntervalSet::from_pairs((0..21).map(|i| (i, i + 1))).unwrap();
        assert_eq!(
            brute_force_opt(&s, 2, DEFAULT_LIMIT),
            Err(Error::TooLarge { n: 21, limit: 20 })
        );
    }

    #[test]
    fn naive_min_max() {
        let v = [2, 4, 4, 3, 4, 3, 2];
        assert_eq!(naive_range_min_max(&v, 1..3).unwrap(), (4, 4));
        assert_eq!(naive_range_min_max(&v, 6..7).unwrap(), (2, 2));
        assert_eq!(naive_range_min_max(&[5, 5, 5], 0..3).unwrap(), (5, 5));
        assert_eq!(naive_range_min_max(&v, 3..3), Err(Error::EmptyRange));
        assert_eq!(naive_range_min_max(&v, 5..9), Err(Error::EmptyRange));
    }
}
