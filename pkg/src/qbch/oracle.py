"""
Brute-force ground truth for everything the coset-level formulas claim.

Nothing here looks at cyclotomic cosets. A BCH code is rebuilt from its
roots: an element ``alpha`` of order n is found in GF(q)[y]/(f) for a
freshly searched irreducible f, and the parity-check matrix over GF(q) is
the coordinate expansion of the rows ``(alpha^(i j))_i`` for the designed
exponents j. Dual containment, dimension and distances are then decided
by linear algebra and enumeration.

Every enumeration is budgeted. Running out of budget yields an
:class:`Inconclusive` value, never a silent pass.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

import numpy as np

from . import _linalg
from .bch import (
    BchCode,
    construct,
    dimension_formula,
    dimension_hypotheses_hold,
    farr_verdict,
    generator_matrix,
)
from .cyclotomic import multiplicative_order
from .duality import euclid_sufficient, euclidean_dual_containing, hermitian_dual_containing
from .gf import TABLE_LIMIT, FieldSpec, field_of_order, prime_factors

__all__ = [
    "OracleBudget",
    "Inconclusive",
    "NoneBelow",
    "RootTable",
    "root_table",
    "root_parity_check",
    "euclidean_containment_matrix",
    "hermitian_containment_matrix",
    "min_distance_exhaustive",
    "min_distance_bounded",
    "min_distance_information_sets",
    "dual_distance_exhaustive",
    "dual_distance_at_least",
    "css_distance_exhaustive",
    "GridSpec",
    "Mismatch",
    "VerifyReport",
    "verify_grid",
    "CHECKS",
]


@dataclass(frozen=True)
class OracleBudget:
    max_message_enumeration: int = 2**22
    max_weight_enumeration: int = 6
    max_support_enumeration: int = 2**26
    time_budget: float | None = None

    def __post_init__(self):
        if min(self.max_message_enumeration, self.max_weight_enumeration,
               self.max_support_enumeration) <= 0:
            raise ValueError("budgets must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")

    def deadline(self) -> float | None:
        return None if self.time_budget is None else time.monotonic() + self.time_budget

    @classmethod
    def from_env(cls, **overrides) -> OracleBudget:
        env = {
            "max_message_enumeration": os.environ.get("QBCH_MAX_MESSAGES"),
            "max_weight_enumeration": os.environ.get("QBCH_MAX_WEIGHT"),
            "time_budget": os.environ.get("QBCH_TIME_BUDGET"),
        }
        kw = {k: (float(v) if k == "time_budget" else int(v)) for k, v in env.items() if v}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


@dataclass(frozen=True)
class Inconclusive:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class NoneBelow:
    """No nonzero codeword of weight <= w_max exists."""

    w_max: int


class _Timeout(Exception):
    pass


def _tick(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise _Timeout


# ---------------------------------------------------------------------------
# GF(q)[y]/(f) with f irreducible: just enough to find alpha and its powers


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _pmul(F: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    if F.e == 1:
        return np.convolve(a, b) % F.p
    out = np.zeros(a.size + b.size - 1, dtype=np.int64)
    prods = F.vmul(a[:, None], b[None, :])
    for i in range(a.size):
        out[i:i + b.size] = F.vadd(out[i:i + b.size], prods[i])
    return out


def _pmod(F: FieldSpec, a: np.ndarray, f: np.ndarray) -> np.ndarray:
    """a mod f for nonzero f (not necessarily monic)."""
    a = _trim(np.array(a, dtype=np.int64))
    f = _trim(f)
    d = f.size - 1
    inv = F.inv(int(f[-1]))
    for k in range(a.size - 1, d - 1, -1):
        c = int(a[k])
        if c:
            t = F.mul(c, inv)
            a[k - d:k + 1] = F.vsub(a[k - d:k + 1], F.vmul(t, f))
    return _trim(a[:d] if d > 0 else a[:0])


def _pgcd(F: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = _trim(a), _trim(b)
    while b.size:
        a, b = b, _pmod(F, a, b)
    return a


class _QuotientField:
    """GF(q^m) realised as GF(q)[y]/(f); elements are length-m arrays."""

    def __init__(self, F: FieldSpec, m: int, seed: int):
        self.F = F
        self.m = m
        self.rng = np.random.default_rng(seed)
        self.f = self._find_irreducible()
        # reduction rows: y^(m+k) mod f
        self.red = np.zeros((max(m - 1, 0), m), dtype=np.int64)
        cur = np.zeros(m, dtype=np.int64)
        if m > 1:
            cur[m - 1] = 1
            for k in range(m - 1):
                cur = self._times_y(cur)
                self.red[k] = cur

    def _times_y(self, a: np.ndarray) -> np.ndarray:
        F, m = self.F, self.m
        top = int(a[-1])
        out = np.concatenate([[0], a[:-1]]).astype(np.int64)
        if top:
            out = F.vsub(out, F.vmul(top, self.f[:m]))
        return out

    def _is_irreducible(self, f: np.ndarray) -> bool:
        F, m = self.F, f.size - 1
        y = np.array([0, 1], dtype=np.int64)
        u = y
        for _ in range(m // 2):
            u = self._powmod_poly(u, F.q, f)
            diff = _trim(F.vsub(np.pad(u, (0, max(0, 2 - u.size))), np.pad(y, (0, max(0, u.size - 2)))))
            if _pgcd(F, f, diff).size > 1:
                return False
        return True

    def _powmod_poly(self, a: np.ndarray, e: int, f: np.ndarray) -> np.ndarray:
        F = self.F
        result = np.array([1], dtype=np.int64)
        base = _pmod(F, a, f)
        while e:
            if e & 1:
                result = _pmod(F, _pmul(F, result, base), f)
            e >>= 1
            if e:
                base = _pmod(F, _pmul(F, base, base), f)
        return result

    def _find_irreducible(self) -> np.ndarray:
        F, m = self.F, self.m
        while True:
            low = self.rng.integers(0, F.q, size=m)
            if low[0] == 0:
                continue
            f = np.concatenate([low, [1]]).astype(np.int64)
            if self._is_irreducible(f):
                return f

    def one(self) -> np.ndarray:
        out = np.zeros(self.m, dtype=np.int64)
        out[0] = 1
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        F, m = self.F, self.m
        prod = _pmul(F, a, b)
        if prod.size < 2 * m - 1:
            prod = np.pad(prod, (0, 2 * m - 1 - prod.size))
        low, high = prod[:m], prod[m:]
        if high.size and high.any():
            low = F.vadd(low, F.vsum(F.vmul(high[:, None], self.red), axis=0))
        return low

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def random_nonzero(self) -> np.ndarray:
        while True:
            a = self.rng.integers(0, self.F.q, size=self.m).astype(np.int64)
            if a.any():
                return a

    def element_of_order(self, n: int) -> np.ndarray:
        Q = self.F.q**self.m
        if (Q - 1) % n:
            raise ValueError(f"{n} does not divide {Q - 1}")
        one = self.one()
        ps = prime_factors(n)
        while True:
            a = self.pow(self.random_nonzero(), (Q - 1) // n)
            if all(not np.array_equal(self.pow(a, n // r), one) for r in ps):
                return a


@dataclass
class RootTable:
    """
    Coordinates (over GF(q)) of alpha^i, i < n, for an element of order n.

    ``powers[i]`` is a length-m vector; ``block(j)`` is the m x n
    coordinate expansion of the row (alpha^(i j))_i.
    """

    n: int
    q: int
    m: int
    powers: np.ndarray

    @property
    def field(self) -> FieldSpec:
        return field_of_order(self.q)

    def block(self, j: int) -> np.ndarray:
        idx = (np.arange(self.n) * j) % self.n
        return self.powers[idx].T

    def parity_check(self, b: int, delta: int) -> np.ndarray:
        """Full-rank parity-check matrix of the code with zeros alpha^b..alpha^(b+delta-2)."""
        blocks = [self.block(j % self.n) for j in range(b, b + delta - 1)]
        return _linalg.rref(self.field, np.vstack(blocks))[0]

    def iter_parity_checks(self, b: int, deltas: Iterable[int]):
        """Yield (delta, H) for increasing deltas, extending the row space incrementally."""
        F = self.field
        H = np.zeros((0, self.n), dtype=np.int64)
        next_j = b
        for delta in sorted(deltas):
            new = [self.block(j % self.n) for j in range(next_j, b + delta - 1)]
            next_j = max(next_j, b + delta - 1)
            if new and H.shape[0] < self.n:
                H = _linalg.rref(F, np.vstack([H] + new))[0]
            yield delta, H


@lru_cache(maxsize=256)
def root_table(n: int, q: int) -> RootTable:
    """Build the root table for length n over GF(q) (cached)."""
    F = field_of_order(q)
    m = multiplicative_order(q, n)
    ext = _QuotientField(F, m, seed=1_000_003 * q + m)
    alpha = ext.element_of_order(n)
    powers = np.zeros((n, m), dtype=np.int64)
    cur = ext.one()
    for i in range(n):
        powers[i] = cur
        cur = ext.mul(cur, alpha)
    assert np.array_equal(cur, ext.one())
    return RootTable(n, q, m, powers)


def root_parity_check(n: int, q: int, b: int, delta: int) -> np.ndarray:
    return root_table(n, q).parity_check(b, delta)


def _as_parity_check(code_or_H, q):
    if isinstance(code_or_H, BchCode):
        c = code_or_H
        return root_parity_check(c.n, c.q, c.b, c.delta), c.q
    if q is None:
        raise TypeError("q is required when passing a matrix")
    return np.asarray(code_or_H, dtype=np.int64), q


# ---------------------------------------------------------------------------
# containment


def euclidean_containment_matrix(code_or_H: BchCode | np.ndarray, q: int | None = None) -> bool:
    """
    C^perp is contained in C, decided as H H^T = 0 over GF(q).

    The rows of a parity-check matrix H span C^perp, so containment holds
    exactly when each of them is itself orthogonal to every row of H.
    """
    H, q = _as_parity_check(code_or_H, q)
    if H.shape[0] == 0:
        return True
    F = field_of_order(q)
    return not _linalg.matmul(F, H, H.T).any()


def hermitian_containment_matrix(code_or_H: BchCode | np.ndarray, q: int | None = None) -> bool:
    """
    Hermitian dual of a code over GF(Q), Q = q^2, contained in the code.

    ``q`` here is the field size Q. The Hermitian dual is the entrywise
    q-th power of C^perp, so the test is H (H^(q))^T = 0.
    """
    H, Q = _as_parity_check(code_or_H, q)
    if H.shape[0] == 0:
        return True
    F = field_of_order(Q)
    r = int(round(Q**0.5))
    if r * r != Q:
        raise ValueError(f"GF({Q}) has no Hermitian form")
    conj = F.vpow(H, r)
    return not _linalg.matmul(F, H, conj.T).any()


# ---------------------------------------------------------------------------
# distances


def _span(F: FieldSpec, rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    T = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        T = np.concatenate([F.vadd(T, F.vmul(c, row)[None, :]) for c in range(F.q)])
    return T


def _pack_bits(M: np.ndarray) -> np.ndarray:
    weights = np.left_shift(np.uint64(1), np.arange(M.shape[1], dtype=np.uint64))
    return (M.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def _min_weight_span(F: FieldSpec, G: np.ndarray, deadline) -> int:
    k, n = G.shape
    lo = k
    while lo > 0 and F.q**lo > 2**16:
        lo -= 1
    lo = max(lo, 1) if k else 0
    hi_rows, lo_rows = G[: k - lo], G[k - lo:]
    best = n + 1
    if F.q == 2 and n <= 63:
        L = _pack_bits(_span(F, lo_rows))
        Hs = _pack_bits(_span(F, hi_rows)) if hi_rows.shape[0] else np.zeros(1, dtype=np.uint64)
        for idx, h in enumerate(Hs):
            w = np.bitwise_count(L ^ h)
            if idx == 0:
                w = w[1:]
            if w.size:
                best = min(best, int(w.min()))
            if idx % 64 == 0:
                _tick(deadline)
        return best
    L = _span(F, lo_rows)
    Hs = _span(F, hi_rows) if hi_rows.shape[0] else np.zeros((1, n), dtype=np.int64)
    for idx, h in enumerate(Hs):
        w = np.count_nonzero(F.vadd(L, h[None, :]), axis=1)
        if idx == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
        _tick(deadline)
    return best


def min_distance_exhaustive(
    G: np.ndarray, q: int, budget: OracleBudget = OracleBudget()
) -> int | Inconclusive:
    """
    Minimum Hamming weight over all nonzero codewords spanned by the rows of G.

    G must have full row rank. A zero-dimensional code reports n + 1.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        return n + 1
    if q**k > budget.max_message_enumeration:
        return Inconclusive(f"{q}^{k} codewords exceed budget {budget.max_message_enumeration}")
    try:
        return _min_weight_span(field_of_order(q), G, budget.deadline())
    except _Timeout:
        return Inconclusive("time budget exhausted")


def _colex_supports(n: int, w: int):
    """Supports of size w, grouped by their largest element, each group in colex order."""
    for top in range(w - 1, n):
        if w == 1:
            yield np.array([[top]], dtype=np.int64)
            continue
        inner = np.array(list(itertools.combinations(range(top), w - 1)), dtype=np.int64)
        inner = inner[np.lexsort(inner.T)]
        yield np.hstack([inner, np.full((inner.shape[0], 1), top, dtype=np.int64)])


def _patterns(q: int, w: int) -> np.ndarray:
    """Coefficient patterns with first entry 1 and all entries nonzero."""
    rest = list(itertools.product(range(1, q), repeat=w - 1))
    return np.array([(1,) + r for r in rest], dtype=np.int64).reshape(len(rest), w)


def min_distance_bounded(
    H: np.ndarray, q: int, w_max: int, budget: OracleBudget = OracleBudget()
) -> int | NoneBelow | Inconclusive:
    """
    Smallest w <= w_max for which some support of size w carries a nonzero
    vector in the null space of H; NoneBelow(w_max) when there is none.

    Supports are scanned in colexicographic order and coefficient patterns
    are normalised to a leading 1, so the search is exhaustive up to scaling.
    """
    H = np.asarray(H, dtype=np.int64)
    r, n = H.shape
    F = field_of_order(q)
    w_max = min(w_max, n)
    work = sum(comb(n, w) * (q - 1) ** (w - 1) for w in range(1, w_max + 1))
    if work > budget.max_support_enumeration:
        return Inconclusive(f"{work} support patterns exceed budget")
    deadline = budget.deadline()
    try:
        for w in range(1, w_max + 1):
            P = _patterns(q, w)
            for S in _colex_supports(n, w):
                _tick(deadline)
                if r == 0:
                    return w
                step = max(1, 2**21 // (r * P.shape[0] * w))
                for s0 in range(0, S.shape[0], step):
                    cols = H[:, S[s0:s0 + step]]  # r x s x w
                    comb_ = F.vsum(F.vmul(cols[:, :, None, :], P[None, None, :, :]), axis=-1)
                    if (~comb_.any(axis=0)).any():
                        return w
    except _Timeout:
        return Inconclusive("time budget exhausted")
    return NoneBelow(w_max)


def _disjoint_information_sets(F: FieldSpec, G: np.ndarray) -> list[tuple[list[int], np.ndarray]]:
    k, n = G.shape
    remaining = list(range(n))
    out = []
    while len(remaining) >= k:
        rest = [c for c in range(n) if c not in remaining]
        res = _linalg.systematic(F, G, columns=remaining + rest)
        if res is None:
            break
        M, piv = res
        if any(p not in remaining for p in piv):
            break
        out.append((piv, M))
        remaining = [c for c in remaining if c not in piv]
    return out


def min_distance_information_sets(
    G: np.ndarray, q: int, w_max: int, budget: OracleBudget = OracleBudget()
) -> int | NoneBelow | Inconclusive:
    """
    Exact minimum distance if it is at most w_max, else NoneBelow(w_max).

    With g disjoint information sets, a codeword of weight <= w_max has
    weight <= floor(w_max / g) on at least one of them, so enumerating
    every message of that weight on every set is exhaustive for weights
    up to w_max. G must have full row rank.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        return NoneBelow(w_max)
    F = field_of_order(q)
    sets = _disjoint_information_sets(F, G)
    g = len(sets)
    t = min(w_max // g, k)
    work = g * sum(comb(k, i) * (q - 1) ** (i - 1) for i in range(1, t + 1))
    if work > budget.max_support_enumeration:
        return Inconclusive(f"{work} messages exceed budget")
    deadline = budget.deadline()
    best = n + 1
    try:
        for piv, M in sets:
            rows = M[: len(piv)]
            for i in range(1, t + 1):
                P = _patterns(q, i)
                step = max(1, 2**21 // (P.shape[0] * i * n))
                for S in _colex_supports(k, i):
                    for s0 in range(0, S.shape[0], step):
                        _tick(deadline)
                        sel = rows[S[s0:s0 + step]]  # s x i x n
                        words = F.vsum(F.vmul(P[None, :, :, None], sel[:, None, :, :]), axis=2)
                        best = min(best, int(np.count_nonzero(words, axis=-1).min()))
    except _Timeout:
        return Inconclusive("time budget exhausted")
    return best if best <= w_max else NoneBelow(w_max)


def dual_distance_exhaustive(
    code_or_H: BchCode | np.ndarray, q: int | None = None, budget: OracleBudget = OracleBudget()
) -> int | Inconclusive:
    """Minimum weight of C^perp by enumerating the row space of H (n + 1 when C^perp = 0)."""
    H, q = _as_parity_check(code_or_H, q)
    if H.shape[0] == 0:
        return H.shape[1] + 1
    return min_distance_exhaustive(H, q, budget)


def dual_distance_at_least(
    code_or_H: BchCode | np.ndarray, bound: int, q: int | None = None,
    budget: OracleBudget = OracleBudget(),
) -> bool | Inconclusive:
    """
    Whether d(C^perp) >= bound: full enumeration of C^perp when affordable,
    otherwise an information-set search for dual words of weight < bound.
    """
    H, q = _as_parity_check(code_or_H, q)
    d = dual_distance_exhaustive(H, q, budget)
    if not isinstance(d, Inconclusive):
        return d >= bound
    res = min_distance_information_sets(H, q, bound - 1, budget)
    if isinstance(res, Inconclusive):
        return res
    return isinstance(res, NoneBelow)


def _distance_up_to(G: np.ndarray, H: np.ndarray, q: int, w: int, budget: OracleBudget):
    """
    Exact minimum distance when it is at most ``w``, else NoneBelow(w).

    Tries full enumeration, support search on H and the information-set
    search in increasing order of work, returning the first conclusive answer.
    """
    k, n = G.shape
    w = min(w, n)
    costs = [
        (q**k, "exhaustive"),
        (sum(comb(n, i) * (q - 1) ** (i - 1) for i in range(1, w + 1)), "bounded"),
        (max(1, n // max(k, 1)) * sum(comb(k, i) * (q - 1) ** (i - 1)
                                      for i in range(1, min(w, k) + 1)), "infoset"),
    ]
    last: Inconclusive = Inconclusive("no method attempted")
    for _, method in sorted(costs):
        if method == "exhaustive":
            res = min_distance_exhaustive(G, q, budget)
            if not isinstance(res, Inconclusive) and res > w:
                res = NoneBelow(w)
        elif method == "bounded":
            res = min_distance_bounded(H, q, w, budget)
        else:
            res = min_distance_information_sets(G, q, w, budget)
        if not isinstance(res, Inconclusive):
            return res
        last = res
    return last


def _generator_matches(F: FieldSpec, table: RootTable, code: BchCode, H: np.ndarray) -> bool:
    """
    The table-built generator spans the code, up to the choice of root of unity.

    Both sides pick their own element of order n, so the oracle code for
    alpha' = alpha^s has defining set s Z; G must be annihilated by the
    parity checks of some such s.
    """
    G = generator_matrix(code)
    if _linalg.rank(F, G) != code.k:
        return False
    n = code.n
    js = range(code.b, code.b + code.delta - 1)
    for s in range(1, n + 1):
        if gcd(s, n) != 1:
            continue
        Hs = np.vstack([table.block((s * j) % n) for j in js])
        if not _linalg.matmul(F, G, Hs.T).any():
            return True
    return False


def css_distance_exhaustive(
    G1: np.ndarray, G2: np.ndarray, q: int, budget: OracleBudget = OracleBudget()
) -> int | Inconclusive:
    """
    min wt over (C2 minus C1) u (C1^perp minus C2^perp) for row spaces C1 inside C2.

    Both sets are enumerated in full; returns n + 1 when both are empty.
    """
    F = field_of_order(q)
    G1 = np.asarray(G1, dtype=np.int64)
    G2 = np.asarray(G2, dtype=np.int64)
    n = G2.shape[1]
    P1 = _linalg.nullspace(F, G1, n)  # generates C1^perp
    P2 = _linalg.nullspace(F, G2, n)  # generates C2^perp
    if max(q ** G2.shape[0], q ** P1.shape[0]) > budget.max_message_enumeration:
        return Inconclusive("CSS code too large to enumerate")
    best = n + 1
    for words, outer in ((G2, P1), (P1, G2)):
        # a word of C2 lies in C1 iff it is orthogonal to C1^perp, and dually
        T = _span(F, words)
        if outer.shape[0]:
            inside = ~_linalg.matmul(F, T, outer.T).any(axis=1)
        else:
            inside = np.ones(T.shape[0], dtype=bool)
        w = np.count_nonzero(T[~inside], axis=1)
        if w.size:
            best = min(best, int(w.min()))
    return best


# ---------------------------------------------------------------------------
# grid verification

CHECKS = ("euclidean", "hermitian", "dimension", "bch_bound", "farr", "dual_distance", "generator")


@dataclass(frozen=True)
class GridSpec:
    """
    Parameter grid: every q in ``qs`` and n in ``ns`` with gcd(n, q) = 1.

    ``deltas=None`` means every designed distance 2..n. For Hermitian
    checks q is the base field size and the codes live over GF(q^2).
    ``max_redundancy`` restricts the dual-distance check to n - k at most
    this value.
    """

    qs: tuple[int, ...]
    ns: tuple[int, ...]
    bs: tuple[int, ...] = (1,)
    deltas: tuple[int, ...] | None = None
    max_redundancy: int | None = None

    def instances(self) -> list[tuple[int, int]]:
        return [(q, n) for q in sorted(self.qs) for n in sorted(self.ns) if gcd(n, q) == 1]

    def deltas_for(self, n: int) -> list[int]:
        if self.deltas is None:
            return list(range(2, n + 1))
        return [d for d in sorted(self.deltas) if 2 <= d <= n]


@dataclass(frozen=True, order=True)
class Mismatch:
    q: int
    n: int
    b: int
    delta: int
    check: str
    detail: str = field(compare=False, default="")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class VerifyReport:
    mismatches: list[Mismatch] = field(default_factory=list)
    inconclusive: list[Mismatch] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)

    def merge(self, other: VerifyReport) -> None:
        self.mismatches.extend(other.mismatches)
        self.inconclusive.extend(other.inconclusive)
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list[str]:
        return [m.to_json() for m in sorted(self.mismatches)]


def _record(rep: VerifyReport, check: str, key, outcome, detail: str = "") -> None:
    rep.checked[check] = rep.checked.get(check, 0) + 1
    if isinstance(outcome, Inconclusive):
        rep.inconclusive.append(Mismatch(*key, check, outcome.reason))
    elif not outcome:
        rep.mismatches.append(Mismatch(*key, check, detail))


def _verify_instance(args) -> VerifyReport:
    q, n, grid, checks, budget = args
    rep = VerifyReport()
    deltas = grid.deltas_for(n)
    if not deltas:
        return rep
    checks = set(checks)
    euclid_checks = checks - {"hermitian"}
    if euclid_checks:
        table = root_table(n, q)
        F = field_of_order(q)
        small_field = q**table.m <= TABLE_LIMIT
        for b in grid.bs:
            for delta, H in table.iter_parity_checks(b, deltas):
                key = (q, n, b, delta)
                code = construct(n, q, b, delta)
                if "euclidean" in checks:
                    coset = euclidean_dual_containing(code.Z, n)
                    matrix = euclidean_containment_matrix(H, q)
                    _record(rep, "euclidean", key, coset == matrix, f"coset={coset} matrix={matrix}")
                if "dimension" in checks:
                    k_oracle = n - H.shape[0]
                    _record(rep, "dimension", key, k_oracle == code.k, f"k={code.k} oracle={k_oracle}")
                    if b == 1 and dimension_hypotheses_hold(n, q, delta):
                        kf = dimension_formula(n, q, delta)
                        _record(rep, "dimension_formula", key, kf == code.k, f"formula={kf} k={code.k}")
                if "generator" in checks and small_field:
                    ok = _generator_matches(F, table, code, H)
                    _record(rep, "generator", key, ok, "generator spans no BCH code with these zeros")
                G0 = None
                if {"bch_bound", "farr"} & checks:
                    G0 = _linalg.nullspace(F, H, n) if H.shape[0] else np.eye(n, dtype=np.int64)
                if "bch_bound" in checks:
                    d = _distance_up_to(G0, H, q, delta - 1, budget)
                    ok = d if isinstance(d, Inconclusive) else isinstance(d, NoneBelow) or d >= delta
                    _record(rep, "bch_bound", key, ok, f"weight {d} codeword below delta")
                if "farr" in checks and b == 1 and dimension_hypotheses_hold(n, q, delta):
                    v = farr_verdict(n, q, delta)
                    if v.applicable:
                        d = _distance_up_to(G0, H, q, delta + 1, budget)
                        if isinstance(d, Inconclusive):
                            _record(rep, "farr", key, d)
                        else:
                            d_val = None if isinstance(d, NoneBelow) else d
                            want = {v.forced_exact} if v.forced_exact else {delta, delta + 1}
                            _record(rep, "farr", key, d_val in want, f"d={d_val} want={sorted(want)}")
                if "dual_distance" in checks and b == 1 and table.m >= 2:
                    dmax = euclid_sufficient(n, q)
                    small = grid.max_redundancy is None or H.shape[0] <= grid.max_redundancy
                    if delta <= dmax and small:
                        res = dual_distance_at_least(H, dmax + 1, q, budget)
                        _record(rep, "dual_distance", key, res, f"dual distance < {dmax + 1}")
    if "hermitian" in checks:
        Q = q * q
        table = root_table(n, Q)
        for b in grid.bs:
            for delta, H in table.iter_parity_checks(b, deltas):
                key = (q, n, b, delta)
                code = construct(n, Q, b, delta)
                coset = hermitian_dual_containing(code.Z, n, q)
                matrix = hermitian_containment_matrix(H, Q)
                _record(rep, "hermitian", key, coset == matrix, f"coset={coset} matrix={matrix}")
    return rep


def verify_grid(
    grid: GridSpec,
    checks: Sequence[str] = ("euclidean",),
    *,
    budget: OracleBudget = OracleBudget(),
    workers: int = 1,
) -> VerifyReport:
    """
    Run the selected checks on every grid instance.

    Instances are independent; with ``workers > 1`` they run in separate
    processes. The merged report is sorted by (q, n, b, delta, check).
    """
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    jobs = [(q, n, grid, tuple(checks), budget) for q, n in grid.instances()]
    report = VerifyReport()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_instance, jobs))
    else:
        parts = [_verify_instance(j) for j in jobs]
    for part in parts:
        report.merge(part)
    report.mismatches.sort()
    report.inconclusive.sort()
    return report
