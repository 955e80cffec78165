"""
Multiplicative orders, q-ary cyclotomic cosets modulo n, and BCH defining sets.

Residue sets are plain sorted tuples of ints so they serialise directly to
JSON arrays and compare by value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable

from .errors import DeltaOutOfRange, NotCoprime
from .gf import prime_power

__all__ = [
    "CosetContext",
    "Coset",
    "DefiningSet",
    "multiplicative_order",
    "context",
    "coset",
    "all_cosets",
    "defining_set",
    "negate",
    "scale_negate_q",
    "coset_size_guarantee",
    "coset_disjointness_bound",
]


def multiplicative_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q**m == 1 (mod n)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


@dataclass(frozen=True)
class CosetContext:
    """Length ``n``, alphabet size ``q`` and ``m = ord_n(q)``."""

    n: int
    q: int
    m: int

    @property
    def primitive(self) -> bool:
        return self.n == self.q**self.m - 1


@lru_cache(maxsize=4096)
def context(n: int, q: int) -> CosetContext:
    prime_power(q)
    return CosetContext(n, q, multiplicative_order(q, n))


@dataclass(frozen=True)
class Coset:
    representative: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def _orbit(x: int, n: int, q: int) -> tuple[int, ...]:
    x %= n
    seen = []
    y = x
    while True:
        seen.append(y)
        y = y * q % n
        if y == x:
            break
    return tuple(sorted(seen))


def coset(x: int, ctx: CosetContext) -> Coset:
    """The q-ary cyclotomic coset of ``x`` modulo ``n``."""
    if not 0 <= x < ctx.n:
        raise ValueError(f"{x} is not a residue modulo {ctx.n}")
    els = _orbit(x, ctx.n, ctx.q)
    return Coset(els[0], els)


@lru_cache(maxsize=1024)
def _partition(n: int, q: int) -> tuple[Coset, ...]:
    done = [False] * n
    out = []
    for x in range(n):
        if not done[x]:
            els = _orbit(x, n, q)
            for y in els:
                done[y] = True
            out.append(Coset(els[0], els))
    return tuple(out)


def all_cosets(ctx: CosetContext) -> tuple[Coset, ...]:
    """Partition of {0, ..., n-1} into cosets, ordered by representative."""
    return _partition(ctx.n, ctx.q)


@dataclass(frozen=True)
class DefiningSet:
    context: CosetContext
    b: int
    delta: int
    Z: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.Z)

    def __contains__(self, x):
        return x in self._members

    @property
    def _members(self) -> frozenset[int]:
        return frozenset(self.Z)


def defining_set(ctx: CosetContext, b: int, delta: int) -> DefiningSet:
    """
    Union of the cosets of ``b, b+1, ..., b+delta-2`` (taken mod n).

    ``b`` may be any integer; exponents wrap around modulo ``n``.
    """
    if not 2 <= delta <= ctx.n:
        raise DeltaOutOfRange(f"designed distance {delta} not in [2, {ctx.n}]")
    n, q = ctx.n, ctx.q
    members: set[int] = set()
    for x in range(b, b + delta - 1):
        r = x % n
        if r not in members:
            members.update(_orbit(r, n, q))
    return DefiningSet(ctx, b, delta, tuple(sorted(members)))


def negate(Z: Iterable[int], n: int) -> tuple[int, ...]:
    """{-z mod n : z in Z}"""
    return tuple(sorted({(-z) % n for z in Z}))


def scale_negate_q(Z: Iterable[int], n: int, q: int) -> tuple[int, ...]:
    """{-q z mod n : z in Z}"""
    return tuple(sorted({(-q * z) % n for z in Z}))


def _length_in_range(ctx: CosetContext) -> bool:
    q, m, n = ctx.q, ctx.m, ctx.n
    return q ** (m // 2) < n <= q**m - 1


def coset_size_guarantee(ctx: CosetContext, x: int) -> bool:
    """
    Whether |C_x| = m is guaranteed by the coset-size lemma.

    The lemma needs ``q^floor(m/2) < n <= q^m - 1`` and
    ``1 <= x <= n q^ceil(m/2) / (q^m - 1)``. When it applies, the coset
    size is checked and an AssertionError signals a broken invariant.
    """
    q, m, n = ctx.q, ctx.m, ctx.n
    if not 1 <= x < n or not _length_in_range(ctx):
        return False
    if x * (q**m - 1) > n * q ** ((m + 1) // 2):
        return False
    size = len(_orbit(x, n, q))
    assert size == m, f"|C_{x}| = {size} != m = {m} for n={n}, q={q}"
    return True


def coset_disjointness_bound(ctx: CosetContext) -> int:
    """
    Upper end of the range on which cosets of non-multiples of q are distinct.

    Equals ``min(floor(n q^ceil(m/2) / (q^m - 1) - 1), n - 1)``; returns 0
    when the length hypothesis ``q^floor(m/2) < n <= q^m - 1`` fails.
    """
    q, m, n = ctx.q, ctx.m, ctx.n
    if not _length_in_range(ctx):
        return 0
    return min((n * q ** ((m + 1) // 2)) // (q**m - 1) - 1, n - 1)
