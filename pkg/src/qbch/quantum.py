"""
Quantum stabilizer code parameters obtained from dual-containing and
nested BCH codes.

Distances are always lower bounds: the classical designed distance. Each
family checks its hypotheses at the defining-set level and cross-checks
its closed-form dimension against the exact BCH dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bch import BchCode, construct, generator_matrix
from .cyclotomic import multiplicative_order
from .duality import (
    euclid_sufficient,
    euclidean_dual_containing,
    hermitian_dual_containing,
    hermitian_family_bound,
)
from .errors import HypothesisViolated, NotNested

__all__ = [
    "QuantumCodeParams",
    "nested_css",
    "euclid_css",
    "hermitian_family",
    "expanded_family",
    "css_general",
]

CONSTRUCTIONS = ("NestedCSS", "EuclideanCSS", "Hermitian", "Expanded", "CSS")


@dataclass(frozen=True)
class QuantumCodeParams:
    """
    [[n, k, >= d_low]]_q with a purity bound.

    ``pure_to`` is None when no purity statement applies. ``k_as_printed``
    is set only when an alternative closed form disagrees with ``k``.
    """

    n: int
    k: int
    d_low: int
    q: int
    pure_to: int | None
    construction: str
    provenance: dict = field(default_factory=dict)
    k_as_printed: int | None = None

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k={self.k} outside [0, {self.n}]")
        if self.d_low < 2:
            raise ValueError("distance lower bound must be at least 2")
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")

    @property
    def label(self) -> str:
        return f"[[{self.n},{self.k},>={self.d_low}]]_{self.q}"

    def to_json(self) -> dict:
        rec = {
            "schema": 1,
            "n": self.n,
            "k": self.k,
            "d_low": self.d_low,
            "q": self.q,
            "pure_to": self.pure_to,
            "construction": self.construction,
            "provenance": dict(self.provenance),
        }
        if self.k_as_printed is not None and self.k_as_printed != self.k:
            rec["k_as_printed"] = self.k_as_printed
        return rec


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _order_at_least_two(n: int, q: int) -> int:
    m = multiplicative_order(q, n)
    if m < 2:
        raise HypothesisViolated(f"ord_{n}({q}) = {m} < 2")
    return m


def nested_css(n: int, q: int, delta1: int, delta2: int) -> QuantumCodeParams:
    """
    CSS code from BCH(n, q; delta2) inside BCH(n, q; delta1).

    Requires ord_n(q) >= 2 and 2 <= delta1 < delta2 <= floor(kappa). The
    logical dimension is m(delta2 - delta1 - floor((delta2-1)/q) + floor((delta1-1)/q)).
    """
    m = _order_at_least_two(n, q)
    dmax = euclid_sufficient(n, q)
    if not 2 <= delta1 < delta2 <= dmax:
        raise HypothesisViolated(
            f"need 2 <= delta1 < delta2 <= {dmax}, got delta1={delta1}, delta2={delta2}"
        )
    k = m * (delta2 - delta1 - (delta2 - 1) // q + (delta1 - 1) // q)
    c1, c2 = construct(n, q, 1, delta1), construct(n, q, 1, delta2)
    assert k == c1.k - c2.k, (k, c1.k, c2.k)
    return QuantumCodeParams(
        n, k, delta1, q, delta2, "NestedCSS",
        {"n": n, "q": q, "delta1": delta1, "delta2": delta2, "m": m},
    )


def euclid_css(n: int, q: int, delta: int) -> QuantumCodeParams:
    """
    CSS code from a narrow-sense dual-containing BCH(n, q; delta):
    [[n, n - 2m ceil((delta-1)(1-1/q)), >= delta]]_q, pure to floor(kappa) + 1.
    """
    m = _order_at_least_two(n, q)
    dmax = euclid_sufficient(n, q)
    if not 2 <= delta <= dmax:
        raise HypothesisViolated(f"delta={delta} outside [2, {dmax}] for n={n}, q={q}")
    k = n - 2 * m * _ceil_frac(Fraction((delta - 1) * (q - 1), q))
    code = construct(n, q, 1, delta)
    assert euclidean_dual_containing(code.Z, n)
    assert k == 2 * code.k - n, (k, code.k)
    return QuantumCodeParams(
        n, k, delta, q, dmax + 1, "EuclideanCSS",
        {"n": n, "q": q, "delta": delta, "m": m},
    )


def hermitian_family(n: int, q: int, delta: int) -> QuantumCodeParams:
    """
    Quantum code from a narrow-sense BCH code over GF(q^2) containing its
    Hermitian dual: [[n, n - 2m ceil((delta-1)(1-1/q^2)), >= delta]]_q with
    m = ord_n(q^2) >= 2, for 2 <= delta <= floor(n(q^m-1)/(q^(2m)-1));
    pure to that bound plus one.
    """
    Q = q * q
    m = _order_at_least_two(n, Q)
    dmax = hermitian_family_bound(n, q)
    if not 2 <= delta <= dmax:
        raise HypothesisViolated(f"delta={delta} outside [2, {dmax}] for n={n}, q={q}")
    k = n - 2 * m * _ceil_frac(Fraction((delta - 1) * (Q - 1), Q))
    code = construct(n, Q, 1, delta)
    assert hermitian_dual_containing(code.Z, n, q)
    assert k == 2 * code.k - n, (k, code.k)
    return QuantumCodeParams(
        n, k, delta, q, dmax + 1, "Hermitian",
        {"n": n, "q2": Q, "delta": delta, "m": m},
    )


def expanded_family(n: int, q: int, l: int, delta: int) -> QuantumCodeParams:
    """
    Expand the Euclidean CSS code over GF(q^l) along a basis of GF(q^l)/GF(q):
    [[l n, l (n - 2m ceil((delta-1)(1-1/q^l))), >= delta]]_q with m = ord_n(q^l).

    ``k_as_printed`` carries l n - 2 l m ceil((delta-1)(1-1/q)), the form
    with the base alphabet inside the ceiling, for comparison.
    """
    if l < 1:
        raise HypothesisViolated("expansion degree must be positive")
    ql = q**l
    inner = euclid_css(n, ql, delta)
    m = inner.provenance["m"]
    k = l * inner.k
    printed = l * n - 2 * l * m * _ceil_frac(Fraction((delta - 1) * (q - 1), q))
    return QuantumCodeParams(
        l * n, k, delta, q, delta, "Expanded",
        {"n": n, "q": q, "l": l, "ql": ql, "delta": delta, "m": m},
        k_as_printed=printed if printed != k else None,
    )


def css_general(
    c1: BchCode, c2: BchCode, *, exact_distance: bool = False, budget=None
) -> QuantumCodeParams:
    """
    CSS code from nested cyclic codes C1 inside C2 (defining sets Z2 inside Z1).

    The distance is the designed distance of C2 unless ``exact_distance``
    asks the oracle for min wt((C2 minus C1) u (C1^perp minus C2^perp)),
    which is only feasible for small codes.
    """
    if (c1.n, c1.q) != (c2.n, c2.q):
        raise NotNested("codes differ in length or alphabet")
    if not set(c2.Z) <= set(c1.Z):
        raise NotNested("defining set of C2 is not contained in that of C1")
    n, q = c1.n, c1.q
    k = c2.k - c1.k
    d = c2.delta
    if exact_distance and k > 0:
        from .oracle import OracleBudget, Inconclusive, css_distance_exhaustive

        res = css_distance_exhaustive(
            generator_matrix(c1), generator_matrix(c2), q, budget or OracleBudget()
        )
        if not isinstance(res, Inconclusive):
            d = res
    return QuantumCodeParams(
        n, k, max(d, 2), q, None, "CSS",
        {"n": n, "q": q, "C1": [c1.b, c1.delta], "C2": [c2.b, c2.delta]},
    )
