"""Smoke test for the covprune_py extension module.

Build and install first:  maturin develop -m crates/python/Cargo.toml
"""

import covprune_py as cp

reads = cp.IntervalSet([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)])
assert len(reads) == 6
assert reads.span() == (0, 10)

delims, cov = cp.coverage_profile(reads)
assert delims == [0, 1, 2, 3, 4, 6, 8, 10]
assert cov == [2, 4, 4, 3, 4, 3, 2]
assert cp.mincov_span(reads) == 2
assert cp.maxcov(reads) == 4
assert cp.cov_at(reads, 1) == 4

sol = cp.decide(reads, 3, 1)
assert sol is not None and sol.achieved_maxcov <= 3 and sol.achieved_mincov >= 1
assert cp.decide(reads, 3, 3, warm_start=False) is None

for engine in ("generic", "tailored"):
    exact = cp.solve_exact(reads, 3, engine)
    assert exact.achieved_mincov == 2, exact
assert cp.brute_force_opt(reads, 3).achieved_mincov == 2
assert cp.opt_upper_bound(reads, 3) == 2

approx = cp.approx_prune(reads, 3)
assert approx.kept == [0, 2, 5], approx.kept
assert approx.achieved_maxcov == 3 and approx.achieved_mincov == 1

big = cp.generate_instance(20000, seed=5)
a = cp.approx_prune(big, 20)
e = cp.solve_exact(big, 20)
assert a.achieved_maxcov <= 20 and e.achieved_maxcov <= 20
assert a.achieved_mincov * 20 >= (20 // 2) * e.achieved_mincov

try:
    cp.IntervalSet([(3, 3)])
except ValueError:
    pass
else:
    raise AssertionError("empty interval accepted")

try:
    cp.solve_exact(reads, 3, "fastest")
except ValueError:
    pass
else:
    raise AssertionError("unknown engine accepted")

print("smoke ok:", exact, approx)
