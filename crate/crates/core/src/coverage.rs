//! Interval model and exact coverage computation by sweep.

use std::fmt;

use crate::error::{Error, Result};

/// A half-open integer interval `[start, end)` with `start < end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: u64,
    pub end: u64,
}

impl Interval {
    pub fn new(start: u64, end: u64) -> Result<Self> {
        if start < end {
            Ok(Self { start, end })
        } else {
            Err(Error::EmptyInterval { start, end })
        }
    }

    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn covers(&self, p: u64) -> bool {
        self.start <= p && p < self.end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end)
    }
}

/// An ordered collection of intervals. The position of an interval in the
/// set is its identity; solutions refer to intervals by these indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    items: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(items: Vec<Interval>) -> Self {
        Self { items }
    }

    /// Builds a set from raw `(start, end)` pairs, rejecting empty intervals.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let items = pairs
            .into_iter()
            .map(|(s, e)| Interval::new(s, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Interval> {
        self.items.get(index)
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.items.iter()
    }

    /// `[min start, max end)`, or `None` for the empty set.
    pub fn span(&self) -> Option<Interval> {
        let start = self.items.iter().map(|i| i.start).min()?;
        let end = self.items.iter().map(|i| i.end).max()?;
        Some(Interval { start, end })
    }

    /// The intervals at `indices`, in the order given.
    ///
    /// Panics if an index is out of range.
    pub fn subset(&self, indices: &[usize]) -> IntervalSet {
        IntervalSet {
            items: indices.iter().map(|&i| self.items[i]).collect(),
        }
    }

    /// Sorted distinct endpoints.
    pub fn delimiters(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.items.iter().flat_map(|i| [i.start, i.end]).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        Self {
            items: iter.into_iter().collect(),
        }
    }
}

/// Coverage as a step function over the distinct interval endpoints.
///
/// `segment_cov[j]` is the coverage of every point in
/// `[delimiters[j], delimiters[j + 1])`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageProfile {
    pub delimiters: Vec<u64>,
    pub segment_cov: Vec<u64>,
}

impl CoverageProfile {
    pub fn is_empty(&self) -> bool {
        self.segment_cov.is_empty()
    }

    /// Number of segments (one less than the number of delimiters).
    pub fn segments(&self) -> usize {
        self.segment_cov.len()
    }

    /// Index of the segment containing `p`, if `p` lies inside the profile.
    pub fn segment_of(&self, p: u64) -> Option<usize> {
        if self.delimiters.len() < 2 {
            return None;
        }
        let last = *self.delimiters.last().unwrap();
        if p < self.delimiters[0] || p >= last {
            return None;
        }
        // partition_point gives the first delimiter > p
        Some(self.delimiters.partition_point(|&d| d <= p) - 1)
    }

    /// Coverage at `p`; zero outside the profile.
    pub fn value_at(&self, p: u64) -> u64 {
        self.segment_of(p).map_or(0, |j| self.segment_cov[j])
    }

    pub fn min(&self) -> u64 {
        self.segment_cov.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.segment_cov.iter().copied().max().unwrap_or(0)
    }

    /// Minimum coverage over `span`, counting points outside this profile as
    /// coverage 0.
    pub fn min_over(&self, span: Interval) -> u64 {
        let (Some(&first), Some(&last)) = (self.delimiters.first(), self.delimiters.last()) else {
            return 0;
        };
        if span.start < first || span.end > last {
            return 0;
        }
        let lo = self.segment_of(span.start).unwrap();
        let hi = self.delimiters.partition_point(|&d| d < span.end);
        self.segment_cov[lo..hi].iter().copied().min().unwrap_or(0)
    }
}

/// Sweeps the endpoints of `set` to build its coverage profile.
pub fn coverage_profile(set: &IntervalSet) -> CoverageProfile {
    let delimiters = set.delimiters();
    if delimiters.is_empty() {
        return CoverageProfile::default();
    }
    let index = |p: u64| delimiters.binary_search(&p).expect("endpoint is a delimiter");
    let mut delta = vec![0i64; delimiters.len()];
    for iv in set {
        delta[index(iv.start)] += 1;
        delta[index(iv.end)] -= 1;
    }
    let mut running = 0i64;
    let segment_cov = delta[..delimiters.len() - 1]
        .iter()
        .map(|d| {
            running += d;
            running as u64
        })
        .collect();
    CoverageProfile {
        delimiters,
        segment_cov,
    }
}

/// Minimum coverage over the span `[min start, max end)`; 0 for the empty set.
pub fn mincov_span(set: &IntervalSet) -> u64 {
    coverage_profile(set).min()
}

/// Maximum coverage at any point; 0 for the empty set.
pub fn maxcov(set: &IntervalSet) -> u64 {
    coverage_profile(set).max()
}

/// Number of intervals covering `p`.
pub fn cov_at(set: &IntervalSet, p: u64) -> u64 {
    set.iter().filter(|iv| iv.covers(p)).count() as u64
}

/// Minimum coverage of `set` over `span`, where points of `span` not covered
/// by any interval of `set` count as 0.
pub fn mincov_over(set: &IntervalSet, span: Interval) -> u64 {
    coverage_profile(set).min_over(span)
}
