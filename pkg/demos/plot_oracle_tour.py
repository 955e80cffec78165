"""
The brute-force oracle
======================

The oracle never touches cyclotomic cosets. It finds its own element of
order n, writes down the parity checks from the designed zeros and then
answers questions by linear algebra and enumeration.
"""
import time

from qbch import construct, farr_verdict
from qbch.oracle import (
    GridSpec,
    OracleBudget,
    min_distance_bounded,
    root_parity_check,
    verify_grid,
)

###############################################################################
# Weight-limited search
# ---------------------
# BCH(26,3;3) has too many codewords to list comfortably, but searching all
# supports of size at most 4 settles its minimum distance.

v = farr_verdict(26, 3, 3)
H = root_parity_check(26, 3, 1, 3)
print("sphere-packing verdict:", v.forced_exact)
print("weight <= 3:", min_distance_bounded(H, 3, 3))
print("weight <= 4:", min_distance_bounded(H, 3, 4))

###############################################################################
# A small grid
# ------------
# Run every check on short lengths. Budget overruns show up as
# inconclusive entries, never as silent passes.

t0 = time.perf_counter()
rep = verify_grid(GridSpec(qs=(2, 3), ns=tuple(range(3, 26)), max_redundancy=16),
                  ("euclidean", "hermitian", "dimension", "bch_bound", "farr", "dual_distance", "generator"),
                  budget=OracleBudget(time_budget=10))
print(f"\nchecked {rep.checked}")
print(f"mismatches: {len(rep.mismatches)}  inconclusive: {len(rep.inconclusive)}  "
      f"({time.perf_counter() - t0:.1f}s)")
print(construct(15, 2, 1, 3))
