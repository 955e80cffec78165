"""
BCH codes: construction, dimension, generator/parity-check matrices,
dual defining sets and the sharpened minimum-distance statements.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, isqrt

import numpy as np

from . import _linalg
from .cyclotomic import CosetContext, DefiningSet, context, defining_set, negate
from .duality import (
    euclidean_dual_containing,
    euclid_sufficient,
    hermitian_dual_containing,
    hermitian_sufficient,
)
from .errors import HypothesisViolated
from .gf import (
    FieldSpec,
    Polynomial,
    extension_field,
    field_of_order,
    product_of_linear_factors,
    project_to_subfield,
)

__all__ = [
    "BchCode",
    "MinDistanceVerdict",
    "construct",
    "dimension_formula",
    "dimension_hypotheses_hold",
    "generator_polynomial",
    "generator_matrix",
    "parity_check_matrix",
    "dual_defining_set",
    "hermitian_dual_defining_set",
    "farr_verdict",
    "dual_distance_lower_bound",
    "consecutive_run_bound",
    "code_record",
]


@dataclass(frozen=True, eq=False)
class BchCode:
    """
    BCH code of length n over GF(q) with defining set C_b u ... u C_{b+delta-2}.

    The generator polynomial is computed lazily, at most once, and may be
    read from several threads.
    """

    ctx: CosetContext
    b: int
    delta: int
    defining: DefiningSet = field(repr=False)
    k: int
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def Z(self) -> tuple[int, ...]:
        return self.defining.Z

    @property
    def narrow_sense(self) -> bool:
        return self.b == 1

    @property
    def primitive(self) -> bool:
        return self.ctx.primitive

    @property
    def field(self) -> FieldSpec:
        return field_of_order(self.q)

    def generator(self) -> Polynomial:
        with self._lock:
            g = self._cache.get("g")
            if g is None:
                g = self._cache["g"] = _generator_polynomial(self)
        return g

    def __repr__(self):
        return f"BCH(n={self.n}, q={self.q}, b={self.b}, delta={self.delta}; k={self.k})"


def construct(n: int, q: int, b: int = 1, delta: int = 2) -> BchCode:
    """Build BCH(n, q; b, delta). Raises NotCoprime or DeltaOutOfRange."""
    ctx = context(n, q)
    Z = defining_set(ctx, b, delta)
    return BchCode(ctx, b, delta, Z, n - len(Z))


def dimension_hypotheses_hold(n: int, q: int, delta: int) -> bool:
    """q^floor(m/2) < n <= q^m - 1 and 2 <= delta <= min(floor(n q^ceil(m/2)/(q^m-1)), n)."""
    m = context(n, q).m
    if not q ** (m // 2) < n <= q**m - 1:
        return False
    return 2 <= delta <= min(n * q ** ((m + 1) // 2) // (q**m - 1), n)


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _cosets_needed(q: int, delta: int) -> int:
    # ceil((delta-1)(1-1/q)), exact
    return _ceil_frac(Fraction((delta - 1) * (q - 1), q))


def dimension_formula(n: int, q: int, delta: int) -> int:
    """
    Closed-form dimension n - m ceil((delta-1)(1-1/q)) of a narrow-sense code.

    Raises HypothesisViolated outside the range where it is proven;
    :func:`construct` always computes the exact value instead.
    """
    if not dimension_hypotheses_hold(n, q, delta):
        raise HypothesisViolated(f"dimension formula not proven for n={n}, q={q}, delta={delta}")
    m = context(n, q).m
    return n - m * _cosets_needed(q, delta)


def _generator_polynomial(code: BchCode) -> Polynomial:
    base = code.field
    big = extension_field(base, code.m)
    alpha = big.primitive_element ** ((big.q - 1) // code.n)
    f = product_of_linear_factors(code.Z, alpha, code.n)
    return project_to_subfield(f, base)


def generator_polynomial(code: BchCode) -> Polynomial:
    """g(x) over GF(q). Raises FieldTooLarge when GF(q^m) exceeds the table limit."""
    return code.generator()


def generator_matrix(code: BchCode) -> np.ndarray:
    """k x n matrix whose rows are the cyclic shifts x^i g(x), i < k."""
    g = np.array(code.generator().coeffs, dtype=np.int64)
    G = np.zeros((code.k, code.n), dtype=np.int64)
    for i in range(code.k):
        G[i, i:i + len(g)] = g
    return G


def parity_check_matrix(code: BchCode) -> np.ndarray:
    """(n-k) x n matrix built from shifts of the reciprocal of h = (x^n - 1)/g."""
    F = code.field
    g = code.generator()
    h, r = divmod(Polynomial.xn_minus_one(F, code.n), g)
    assert r.is_zero()
    hr = np.array(h.coeffs[::-1], dtype=np.int64)
    H = np.zeros((code.n - code.k, code.n), dtype=np.int64)
    for i in range(code.n - code.k):
        H[i, i:i + len(hr)] = hr
    return H


def dual_defining_set(code: BchCode) -> tuple[int, ...]:
    """Defining set of the Euclidean dual: -(N minus Z)."""
    zs = set(code.Z)
    return negate((z for z in range(code.n) if z not in zs), code.n)


def _base_of_square(Q: int) -> int:
    q = isqrt(Q)
    if q * q != Q:
        raise HypothesisViolated(f"alphabet {Q} is not a square; no Hermitian form")
    return q


def hermitian_dual_defining_set(code: BchCode) -> tuple[int, ...]:
    """Defining set of the Hermitian dual of a code over GF(q^2): {-q z : z not in Z}."""
    q = _base_of_square(code.q)
    zs = set(code.Z)
    return tuple(sorted({(-q * z) % code.n for z in range(code.n) if z not in zs}))


def consecutive_run_bound(Z, n: int) -> int:
    """
    1 + the longest cyclic run of consecutive residues in Z (BCH bound).

    Returns n + 1 when Z covers every residue (the zero code).
    """
    zs = set(Z)
    if len(zs) >= n:
        return n + 1
    best = 0
    for start in range(n):
        if start in zs and (start - 1) % n not in zs:
            run = 0
            while (start + run) % n in zs:
                run += 1
            best = max(best, run)
    return best + 1


@dataclass(frozen=True)
class MinDistanceVerdict:
    """
    Outcome of the sphere-packing sharpening of the BCH bound.

    ``d_low``/``d_high`` bracket the minimum distance when ``applicable``;
    ``forced_exact`` is delta + 1 when additionally delta = 0 mod q.
    ``d_at_least`` is the unconditional lower bound: delta + 1 whenever
    delta = 0 mod q (C_delta = C_{delta/q} lies in Z), else delta.
    """

    applicable: bool
    d_low: int
    d_high: int | None
    forced_exact: int | None
    d_at_least: int
    lhs: int
    rhs: int


def farr_verdict(n: int, q: int, delta: int) -> MinDistanceVerdict:
    """
    Decide whether the minimum distance of BCH(n, q; delta) is delta or delta+1.

    Condition: sum_{i <= floor((delta+1)/2)} C(n,i)(q-1)^i > q^(m ceil((delta-1)(1-1/q))),
    evaluated in exact integers. Raises HypothesisViolated when the length
    or designed-distance range of the dimension theorem fails.
    """
    if not dimension_hypotheses_hold(n, q, delta):
        raise HypothesisViolated(f"farr corollary not stated for n={n}, q={q}, delta={delta}")
    m = context(n, q).m
    lhs = sum(comb(n, i) * (q - 1) ** i for i in range((delta + 1) // 2 + 1))
    rhs = q ** (m * _cosets_needed(q, delta))
    applicable = lhs > rhs
    divisible = delta % q == 0
    return MinDistanceVerdict(
        applicable=applicable,
        d_low=delta,
        d_high=delta + 1 if applicable else None,
        forced_exact=delta + 1 if applicable and divisible else None,
        d_at_least=delta + 1 if divisible else delta,
        lhs=lhs,
        rhs=rhs,
    )


def dual_distance_lower_bound(code: BchCode, flavor: str = "euclidean") -> int:
    """
    delta_max + 1 for narrow-sense codes with delta <= delta_max.

    Euclidean: delta_max = floor(kappa) for (n, q). Hermitian (code over
    GF(q^2)): delta_max is the Hermitian sufficient threshold for base q.
    """
    if not code.narrow_sense:
        raise HypothesisViolated("dual distance bound is stated for narrow-sense codes")
    if flavor == "euclidean":
        if code.m < 2:
            raise HypothesisViolated("requires ord_n(q) >= 2")
        dmax = euclid_sufficient(code.n, code.q)
    elif flavor == "hermitian":
        dmax = hermitian_sufficient(code.n, _base_of_square(code.q))
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    if not 2 <= code.delta <= dmax:
        raise HypothesisViolated(f"delta={code.delta} exceeds delta_max={dmax}")
    return dmax + 1


def code_record(code: BchCode, *, flavor: str = "euclidean", with_generator: bool = False) -> dict:
    """JSON-ready description of a code (schema 1)."""
    rec = {
        "schema": 1,
        "n": code.n,
        "q": code.q,
        "b": code.b,
        "delta": code.delta,
        "m": code.m,
        "k": code.k,
        "defining_set": list(code.Z),
        "d_bound": consecutive_run_bound(code.Z, code.n),
    }
    if flavor in ("euclidean", "both"):
        rec["dual_containing"] = euclidean_dual_containing(code.Z, code.n)
    if flavor in ("hermitian", "both"):
        rec["hermitian_dual_containing"] = hermitian_dual_containing(
            code.Z, code.n, _base_of_square(code.q)
        )
    if with_generator:
        rec["generator"] = code.generator().to_json()
    return rec
