#![allow(dead_code)]

use covprune::IntervalSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fig2() -> IntervalSet {
    IntervalSet::from_pairs([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)]).unwrap()
}

/// Dense random instance: `n` intervals over `[0, width)`, so overlaps and
/// shared endpoints are common.
pub fn random_instance(rng: &mut ChaCha8Rng, n: usize, width: u64) -> IntervalSet {
    IntervalSet::from_pairs((0..n).map(|_| {
        let s = rng.gen_range(0..width - 1);
        let e = rng.gen_range(s + 1..=(s + 1 + width / 2).min(width));
        (s, e)
    }))
    .unwrap()
}

/// Coverage of `kept` at one probe point per segment of the original set,
/// counted directly.
pub fn point_coverages(set: &IntervalSet, kept: &[usize]) -> Vec<u64> {
    let mut points: Vec<u64> = set.iter().flat_map(|iv| [iv.start, iv.end]).collect();
    points.sort_unstable();
    points.dedup();
    points.pop();
    points
        .iter()
        .map(|&p| kept.iter().filter(|&&i| set.items()[i].covers(p)).count() as u64)
        .collect()
}

/// (min over the original span, max) of the coverage of `kept`.
pub fn measure(set: &IntervalSet, kept: &[usize]) -> (u64, u64) {
    let c = point_coverages(set, kept);
    (c.iter().copied().min().unwrap_or(0), c.iter().copied().max().unwrap_or(0))
}
