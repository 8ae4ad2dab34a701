//! Pruning interval sets (e.g. aligned reads) so that coverage never exceeds
//! a cap `k` while the minimum coverage across the covered span is as large
//! as possible.
//!
//! Three solvers are provided:
//!
//! * [`search::solve_exact`]: exact optimum via a max-flow decision procedure
//!   ([`flow::decide`]) combined with doubling and binary search over the
//!   coverage threshold.
//! * [`approx::approx_prune`]: an `O(n log n)` sweep over a lazily balanced
//!   coverage tree, guaranteeing a minimum coverage of at least
//!   `floor(k/2)/k` times the optimum.
//! * [`oracle::brute_force_opt`]: exhaustive subset enumeration for small
//!   instances, used to validate the other two.

pub mod approx;
pub mod cli;
pub mod coverage;
mod error;
pub mod flow;
pub mod oracle;
pub mod search;
mod solution;

pub use coverage::{CoverageProfile, Interval, IntervalSet};
pub use error::{Error, Result};
pub use solution::{Method, Solution, Work};
