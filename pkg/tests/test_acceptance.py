"""
Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``) for the bare summary.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from math import gcd

import pytest

from qbch.bch import construct, dimension_formula, dimension_hypotheses_hold, farr_verdict, generator_matrix
from qbch.cyclotomic import multiplicative_order
from qbch.duality import (
    euclid_necessary,
    euclid_sufficient,
    euclidean_dual_containing,
    hermitian_dual_containing,
    hermitian_sufficient,
)
from qbch.oracle import (
    GridSpec,
    Inconclusive,
    NoneBelow,
    OracleBudget,
    dual_distance_exhaustive,
    euclidean_containment_matrix,
    hermitian_containment_matrix,
    min_distance_bounded,
    min_distance_exhaustive,
    min_distance_information_sets,
    root_parity_check,
    root_table,
    verify_grid,
)

GRID_QS = (2, 3, 4, 5)
GRID_NS = tuple(range(1, 64))


def grid_points(qs=GRID_QS, n_max=63):
    for q in qs:
        for n in range(2, n_max + 1):
            if gcd(n, q) == 1:
                yield q, n


def _line(num: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {detail}"


# ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    rep = verify_grid(GridSpec(qs=GRID_QS, ns=GRID_NS), ("euclidean",), workers=1)
    dt = time.perf_counter() - t0
    ok = rep.ok and not rep.inconclusive and dt < 300
    return ok, (f"Euclidean coset vs matrix: {rep.checked.get('euclidean', 0)} codes, "
                f"{len(rep.mismatches)} mismatches, {dt:.1f}s single-threaded")


def criterion_2():
    rep = verify_grid(GridSpec(qs=(2, 3), ns=tuple(range(1, 41))), ("hermitian",), workers=1)
    ok = rep.ok and not rep.inconclusive and rep.checked.get("hermitian", 0) > 0
    return ok, f"Hermitian coset vs matrix: {rep.checked.get('hermitian', 0)} codes, {len(rep.mismatches)} mismatches"


def criterion_3():
    checked = bad = 0
    for q, n in grid_points():
        for delta in range(2, n + 1):
            if not dimension_hypotheses_hold(n, q, delta):
                continue
            checked += 1
            k_sets = construct(n, q, 1, delta).k
            k_rank = n - root_parity_check(n, q, 1, delta).shape[0]
            if not dimension_formula(n, q, delta) == k_sets == k_rank:
                bad += 1
    return bad == 0 and checked > 0, f"dimension formula vs n-|Z| vs oracle rank: {checked} cases, {bad} mismatches"


def criterion_4():
    cases = bad = 0
    for q in (2, 3, 4):
        m = 2
        while q**m <= 256:
            n = q**m - 1
            predicted = q ** ((m + 1) // 2) - 1 - (q - 2) * (m % 2)
            contains = [euclidean_dual_containing(construct(n, q, 1, d).Z, n) for d in range(2, n + 1)]
            largest = max((d for d, c in zip(range(2, n + 1), contains) if c), default=1)
            below = all(contains[: predicted - 1])
            above = not any(contains[predicted - 1:])
            t = root_table(n, q)
            mat = {d: euclidean_containment_matrix(H, q)
                   for d, H in t.iter_parity_checks(1, range(2, min(n, predicted + 1) + 1))}
            mat_ok = all(mat[d] == (d <= predicted) for d in mat)
            steane = q != 2 or predicted == 2 ** ((m + 1) // 2) - 1
            cases += 1
            if not (largest == predicted and below and above and mat_ok and steane):
                bad += 1
            m += 1
    n15 = (euclidean_dual_containing(construct(15, 2, 1, 3).Z, 15)
           and not euclidean_dual_containing(construct(15, 2, 1, 4).Z, 15))
    return bad == 0 and n15, f"primitive exact thresholds for q in {{2,3,4}}, q^m <= 256: {cases} lengths, {bad} wrong"


def criterion_5():
    checked = bad = 0
    for q, n in grid_points():
        if multiplicative_order(q, n) < 2:
            continue
        for delta in range(euclid_necessary(n, q), n + 1):
            checked += 1
            if euclidean_dual_containing(construct(n, q, 1, delta).Z, n):
                bad += 1
    return bad == 0, f"no dual-containing code with delta >= floor(q sqrt n): {checked} codes, {bad} counterexamples"


def criterion_6():
    coset = {d: hermitian_dual_containing(construct(15, 4, 1, d).Z, 15, 2) for d in range(2, 8)}
    matrix = {d: hermitian_containment_matrix(construct(15, 4, 1, d)) for d in range(2, 8)}
    expect = {d: d <= 5 for d in range(2, 8)}
    ok = coset == expect == matrix and hermitian_sufficient(15, 2) == 5
    return ok, f"n=15, q=2 Hermitian: contains for delta<=5, fails at 6 (threshold {hermitian_sufficient(15, 2)})"


def _cli_json(*argv) -> dict:
    p = subprocess.run([sys.executable, "-m", "qbch", *argv], capture_output=True, text=True)
    assert p.returncode == 0, p.stderr
    return json.loads(p.stdout)


def criterion_7():
    herm = _cli_json("quantum", "--family", "hermitian", "15", "2", "3")
    euc = _cli_json("quantum", "--family", "euclid", "31", "2", "7")
    nest = _cli_json("quantum", "--family", "nested", "31", "2", "3", "5")
    anchors = (herm["label"] == "[[15,7,>=3]]_2" and euc["label"] == "[[31,1,>=7]]_2"
               and nest["label"] == "[[31,5,>=3]]_2" and nest["pure_to"] == 5)
    budget = OracleBudget(max_message_enumeration=2**26)
    dists, times = {}, []
    for name, (n, q, d) in {"herm": (15, 4, 3), "euc": (31, 2, 7), "n3": (31, 2, 3), "n5": (31, 2, 5)}.items():
        t0 = time.perf_counter()
        dists[name] = min_distance_exhaustive(generator_matrix(construct(n, q, 1, d)), q, budget)
        times.append(time.perf_counter() - t0)
    ok = anchors and dists == {"herm": 3, "euc": 7, "n3": 3, "n5": 5} and max(times) < 30
    return ok, (f"quantum anchors {herm['label']}, {euc['label']}, {nest['label']} pure to {nest['pure_to']}; "
                f"ingredient distances {list(dists.values())}, slowest {max(times):.2f}s")


def criterion_8():
    v26 = farr_verdict(26, 3, 3)
    H = root_parity_check(26, 3, 1, 3)
    none3 = min_distance_bounded(H, 3, 3)
    found4 = min_distance_bounded(H, 3, 4)
    v15 = farr_verdict(15, 2, 3)
    d15 = min_distance_exhaustive(generator_matrix(construct(15, 2, 1, 3)), 2)
    ok = (v26.forced_exact == 4 and none3 == NoneBelow(3) and found4 == 4
          and v15.applicable and (v15.d_low, v15.d_high) == (3, 4) and v15.forced_exact is None and d15 == 3)
    return ok, f"BCH(26,3;3) forced d=4, oracle {none3}, {found4}; BCH(15,2;3) d in {{3,4}}, oracle {d15}"


def criterion_9():
    enumerated = certified = bad = undecided = 0
    for q, n in grid_points():
        if multiplicative_order(q, n) < 2:
            continue
        dmax = euclid_sufficient(n, q)
        for delta in range(2, min(dmax, n) + 1):
            H = root_parity_check(n, q, 1, delta)
            if H.shape[0] > 16:
                continue
            d = dual_distance_exhaustive(H, q, OracleBudget(max_message_enumeration=2**24))
            if not isinstance(d, Inconclusive):
                enumerated += 1
                bad += d < dmax + 1
                continue
            # too many dual words to list: exhaust every dual word of weight <= dmax instead
            res = min_distance_information_sets(H, q, dmax, OracleBudget(max_support_enumeration=2**30))
            if isinstance(res, Inconclusive):
                undecided += 1
            else:
                certified += 1
                bad += not isinstance(res, NoneBelow)
    ok = bad == 0 and undecided == 0
    return ok, (f"dual distance >= floor(kappa)+1 for n-k <= 16: {enumerated} by full enumeration, "
                f"{certified} by exhaustive low-weight search, {bad} violations, {undecided} undecided")


def criterion_10():
    def scan(jobs):
        return subprocess.run(
            [sys.executable, "-m", "qbch", "scan", "--q", "2,3,4,5", "--n", "1:63", "--delta", "all",
             "--jobs", str(jobs)],
            capture_output=True, check=True,
        ).stdout

    a, b = scan(1), scan(8)
    ok = a == b and len(a) > 0
    return ok, f"scan output with 1 and 8 workers: {len(a.splitlines())} rows, byte-identical={a == b}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("num", range(1, len(CRITERIA) + 1))
def test_criterion(num, capsys):
    ok, detail = CRITERIA[num - 1]()
    with capsys.disabled():
        print("\n" + _line(num, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(i, ok, detail), flush=True)
    sys.exit(1 if failures else 0)
