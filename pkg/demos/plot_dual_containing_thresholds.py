"""
Where dual containment stops
============================

Narrow-sense BCH codes contain their Euclidean dual for every designed
distance up to a threshold and lose that property shortly after. This
script walks through one length in detail and then tabulates the
threshold against the largest containing designed distance for many lengths.
"""
from math import gcd

from qbch import construct, euclidean_dual_containing, threshold_report
from qbch.cyclotomic import negate

###############################################################################
# One length up close
# -------------------
# For n = 15 over GF(2) the defining set grows coset by coset. Containment
# fails as soon as Z meets its own negation.

n, q = 15, 2
for delta in range(2, 7):
    code = construct(n, q, 1, delta)
    clash = sorted(set(code.Z) & set(negate(code.Z, n)))
    print(f"delta={delta}  k={code.k:2d}  Z={list(code.Z)}  clash={clash}")

rep = threshold_report(n, q)
print("sufficient:", rep.sufficient_delta_max, " necessary:", rep.necessary_delta_max,
      " exact:", rep.exact_threshold)

###############################################################################
# Threshold versus reality
# ------------------------
# floor(kappa) is a guarantee, so it never exceeds the largest containing
# designed distance. When kappa is an integer the two coincide.

print(f"\n{'n':>4} {'m':>3} {'kappa':>8} {'largest':>8} {'exact':>6}")
for n in range(5, 64, 2):
    if gcd(n, q) != 1:
        continue
    rep = threshold_report(n, q)
    if rep.ctx.m < 2:
        continue
    largest = max((d for d in range(2, n + 1)
                   if euclidean_dual_containing(construct(n, q, 1, d).Z, n)), default=1)
    assert rep.sufficient_delta_max <= largest
    print(f"{n:>4} {rep.ctx.m:>3} {str(rep.kappa):>8} {largest:>8} {str(rep.exact_threshold or ''):>6}")
