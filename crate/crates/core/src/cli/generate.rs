use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coverage::{Interval, IntervalSet};

/// Random instance for benchmarking: starts uniform over `[0, span_length)`,
/// lengths uniform over `[1, span_length / 10]`, clipped to the span.
pub fn generate_instance(n: usize, span_length: u64, seed: u64) -> IntervalSet {
    let span_length = span_length.max(1);
    let max_len = (span_length / 10).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let start = rng.gen_range(0..span_length);
            let len = rng.gen_range(1..=max_len);
            let end = start.saturating_add(len).min(span_length);
            Interval { start, end }
        })
        .collect()
}
