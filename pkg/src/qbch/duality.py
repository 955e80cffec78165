"""
Dual-containment predicates and designed-distance thresholds.

Euclidean results concern BCH codes over GF(q). Hermitian results concern
codes over GF(q^2); every Hermitian function here takes the *base* q and
squares it internally.

Threshold functions return the largest designed distance a statement
allows (for sufficient conditions) or the value beyond which containment
is impossible (for necessary conditions), as documented per function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable

from .cyclotomic import CosetContext, context, multiplicative_order, negate, scale_negate_q
from .errors import HypothesisViolated, NotApplicable

__all__ = [
    "euclidean_dual_containing",
    "hermitian_dual_containing",
    "kappa",
    "euclid_sufficient",
    "euclid_order_one_threshold",
    "euclid_necessary",
    "euclid_exact_threshold",
    "nonnarrow_euclid_bound",
    "hermitian_sufficient",
    "hermitian_family_bound",
    "hermitian_nonnarrow_special",
    "hermitian_nonnarrow_primitive_bound",
    "ThresholdReport",
    "threshold_report",
]


def euclidean_dual_containing(Z: Iterable[int], n: int) -> bool:
    """True iff the cyclic code with defining set Z contains its Euclidean dual."""
    zs = set(Z)
    return zs.isdisjoint(negate(zs, n))


def hermitian_dual_containing(Z: Iterable[int], n: int, q: int) -> bool:
    """
    True iff the cyclic code over GF(q^2) with defining set Z contains its
    Hermitian dual.

    ``Z`` must be closed under multiplication by q^2 modulo n.
    """
    zs = set(Z)
    if any((z * q * q) % n not in zs for z in zs):
        raise ValueError("defining set is not closed under multiplication by q^2")
    return zs.isdisjoint(scale_negate_q(zs, n, q))


def _odd(m: int) -> int:
    return m % 2


def kappa(n: int, q: int) -> Fraction:
    """n (q^ceil(m/2) - 1 - (q-2)[m odd]) / (q^m - 1), with m = ord_n(q)."""
    m = multiplicative_order(q, n)
    return Fraction(n * (q ** ((m + 1) // 2) - 1 - (q - 2) * _odd(m)), q**m - 1)


def euclid_sufficient(n: int, q: int) -> int:
    """floor(kappa): narrow-sense codes with 2 <= delta <= this contain their dual."""
    k = kappa(n, q)
    return k.numerator // k.denominator


def euclid_order_one_threshold(n: int, q: int) -> int:
    """
    Exact threshold floor((n+1)/2) when q = 1 (mod n).

    For n = 1 the value 1 is returned; no designed distance qualifies.
    """
    if q % n != 1 % n:
        raise HypothesisViolated(f"q={q} is not 1 modulo n={n}")
    return (n + 1) // 2


def euclid_necessary(n: int, q: int) -> int:
    """
    floor(q sqrt(n)): narrow-sense codes with delta >= this never contain
    their dual (stated for ord_n(q) >= 2).
    """
    if multiplicative_order(q, n) < 2:
        raise HypothesisViolated("necessity bound is stated for ord_n(q) >= 2")
    return isqrt(q * q * n)


def euclid_exact_threshold(n: int, q: int) -> int | None:
    """kappa when it is an integer and m >= 2 (containment iff delta <= kappa)."""
    m = multiplicative_order(q, n)
    k = kappa(n, q)
    if m >= 2 and k.denominator == 1:
        return k.numerator
    return None


def nonnarrow_euclid_bound(n: int, q: int) -> int:
    """
    For primitive n = q^m - 1 with m > 1: any b, delta above the returned
    value gives a code that does not contain its Euclidean dual.
    """
    m = multiplicative_order(q, n)
    if n != q**m - 1:
        raise HypothesisViolated(f"n={n} is not primitive for q={q}")
    if m <= 1:
        raise HypothesisViolated("requires m > 1")
    if m % 2 == 0:
        return q ** (m // 2) - 1
    return 2 * (q ** ((m + 1) // 2) - q + 1)


def hermitian_sufficient(n: int, q: int) -> int:
    """
    Largest delta guaranteed by the Hermitian sufficient condition, with
    m = ord_n(q^2):
    floor(n (q^(m+[m even]) - 1 - (q^2-2)[m even]) / (q^(2m) - 1)).
    """
    m = multiplicative_order(q * q, n)
    ev = 1 - _odd(m)
    return n * (q ** (m + ev) - 1 - (q * q - 2) * ev) // (q ** (2 * m) - 1)


def hermitian_family_bound(n: int, q: int) -> int:
    """floor(n (q^m - 1) / (q^(2m) - 1)), m = ord_n(q^2): the gate of the
    Hermitian quantum family (never larger than :func:`hermitian_sufficient`)."""
    m = multiplicative_order(q * q, n)
    return n * (q**m - 1) // (q ** (2 * m) - 1)


def hermitian_nonnarrow_special(n: int, q: int) -> int:
    """
    n / (q^m + 1) for lengths divisible by q^m + 1, m = ord_n(q^2) odd.

    Any b with delta greater than the returned value gives a code over
    GF(q^2) that does not contain its Hermitian dual. Even m is rejected:
    the congruence -q s q^(m-1) = s behind the bound needs m odd, and
    narrow-sense counterexamples exist otherwise (n=15, q=2 contains its
    Hermitian dual up to delta=5 although n/(q^m+1) = 3).
    """
    m = multiplicative_order(q * q, n)
    if n % (q**m + 1):
        raise HypothesisViolated(f"q^m+1={q**m + 1} does not divide n={n}")
    if m % 2 == 0:
        raise HypothesisViolated(f"m=ord_n(q^2)={m} is even")
    return n // (q**m + 1)


def hermitian_nonnarrow_primitive_bound(n: int, q: int) -> int:
    """
    For n = q^(2m) - 1 (any b): delta above the returned value rules out
    Hermitian dual containment. Returns q^m - 1 for odd m and
    2(q^(m+1) - q^2 + 1) for even m != 2.
    """
    m = multiplicative_order(q * q, n)
    if n != q ** (2 * m) - 1:
        raise HypothesisViolated(f"n={n} is not q^(2m)-1 for q={q}")
    if m % 2:
        return q**m - 1
    if m == 2:
        raise NotApplicable("the even case excludes m = 2")
    return 2 * (q ** (m + 1) - q * q + 1)


@dataclass(frozen=True)
class ThresholdReport:
    """
    All thresholds that apply to a given (n, q) and duality flavour.

    ``sufficient_delta_max``: narrow-sense codes with 2 <= delta <= it
    contain their dual. ``necessary_delta_max``: narrow-sense codes with
    delta >= it never do (Euclidean only). ``exact_threshold``: present when
    containment holds iff delta <= it. ``nonnarrow_delta_max``: for any b,
    delta above it rules containment out. ``family_delta_max``: gate used by
    the Hermitian quantum family.
    """

    ctx: CosetContext
    flavor: str
    narrow_sense: bool = True
    kappa: Fraction | None = None
    sufficient_delta_max: int | None = None
    necessary_delta_max: int | None = None
    exact_threshold: int | None = None
    nonnarrow_delta_max: int | None = None
    family_delta_max: int | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        k = self.kappa
        return {
            "schema": 1,
            "n": self.ctx.n,
            "q": self.ctx.q,
            "m": self.ctx.m,
            "flavor": self.flavor,
            "narrow_sense": self.narrow_sense,
            "kappa": None if k is None else {"num": k.numerator, "den": k.denominator},
            "sufficient_delta_max": self.sufficient_delta_max,
            "necessary_delta_max": self.necessary_delta_max,
            "exact_threshold": self.exact_threshold,
            "nonnarrow_delta_max": self.nonnarrow_delta_max,
            "family_delta_max": self.family_delta_max,
            "notes": list(self.notes),
        }


def _euclidean_report(n: int, q: int) -> ThresholdReport:
    ctx = context(n, q)
    notes = []
    nonnarrow = None
    if ctx.m == 1:
        t = euclid_order_one_threshold(n, q)
        if n == 1:
            notes.append("degenerate length n=1")
        return ThresholdReport(
            ctx, "euclidean", kappa=kappa(n, q), sufficient_delta_max=t,
            necessary_delta_max=t + 1, exact_threshold=t, notes=tuple(notes),
        )
    k = kappa(n, q)
    suff = k.numerator // k.denominator
    nec = euclid_necessary(n, q)
    exact = euclid_exact_threshold(n, q)
    if ctx.primitive:
        nonnarrow = nonnarrow_euclid_bound(n, q)
    assert suff <= nec, (n, q, suff, nec)
    assert exact is None or exact == suff
    return ThresholdReport(
        ctx, "euclidean", kappa=k, sufficient_delta_max=suff,
        necessary_delta_max=nec, exact_threshold=exact, nonnarrow_delta_max=nonnarrow,
    )


def _hermitian_report(n: int, q: int) -> ThresholdReport:
    Q = q * q
    ctx = context(n, Q)
    notes = []
    nonnarrow = None
    if n == Q**ctx.m - 1:
        try:
            nonnarrow = hermitian_nonnarrow_primitive_bound(n, q)
        except NotApplicable as exc:
            notes.append(str(exc))
    else:
        try:
            nonnarrow = hermitian_nonnarrow_special(n, q)
        except HypothesisViolated:
            pass
    return ThresholdReport(
        ctx, "hermitian",
        sufficient_delta_max=hermitian_sufficient(n, q),
        nonnarrow_delta_max=nonnarrow,
        family_delta_max=hermitian_family_bound(n, q),
        notes=tuple(notes),
    )


def threshold_report(n: int, q: int, flavor: str = "euclidean") -> ThresholdReport:
    """Collect every applicable threshold; ``q`` is the base field size for both flavours."""
    if flavor == "euclidean":
        return _euclidean_report(n, q)
    if flavor == "hermitian":
        return _hermitian_report(n, q)
    raise ValueError(f"unknown flavor {flavor!r}")
