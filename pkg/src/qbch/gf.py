"""
Exact arithmetic in GF(p^e) and univariate polynomials over it.

Elements are stored as their canonical integer encoding ``sum(c_i * p**i)``
where ``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` is the residue modulo the
field's defining polynomial. Multiplication goes through exp/log tables,
which caps the supported field size (``TABLE_LIMIT``).

The defining polynomial is the Conway polynomial whenever the field is
small enough to be in the bundled table (``p**e <= 2**16``); larger fields
use the lexicographically smallest monic primitive polynomial. Either way
the generator ``x`` is a primitive element, so generator polynomials built
on top of these fields are reproducible.
"""

from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CoefficientOutsideSubfield,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    NotPrimePower,
    WrongOrder,
)

__all__ = [
    "TABLE_LIMIT",
    "FieldSpec",
    "FieldElement",
    "Polynomial",
    "field_create",
    "extension_field",
    "subfield_embedding",
    "product_of_linear_factors",
    "project_to_subfield",
    "is_prime",
    "prime_factors",
    "prime_power",
]

TABLE_LIMIT = 2**20
CONWAY_LIMIT = 2**16

# add/mul lookup tables are materialised for fields up to this size
_SMALL_TABLE_LIMIT = 256


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p = ps[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def _digits(v: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _undigits(ds: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(ds)):
        v = v * p + c
    return v


# ---------------------------------------------------------------------------
# modulus selection


@lru_cache(maxsize=None)
def _conway_table() -> dict[tuple[int, int], tuple[int, ...]]:
    raw = json.loads(resources.files("qbch").joinpath("data/conway.json").read_text())
    table = {}
    for key, coeffs in raw["polynomials"].items():
        p, e = (int(t) for t in key.split(","))
        table[p, e] = tuple(coeffs)
    return table


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def _pmod_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    """(a * b) mod f over GF(p); f monic, a and b of length deg f."""
    e = len(f) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for i in range(e + 1):
                prod[k - e + i] = (prod[k - e + i] - c * f[i]) % p
    return prod[:e]


def _x_power_mod(k: int, f: Sequence[int], p: int) -> list[int]:
    e = len(f) - 1
    result = [1] + [0] * (e - 1)
    base = [0, 1] + [0] * (e - 2) if e > 1 else [(-f[0]) % p]
    while k:
        if k & 1:
            result = _pmod_mulmod(result, base, f, p)
        base = _pmod_mulmod(base, base, f, p)
        k >>= 1
    return result


def _is_primitive_polynomial(f: Sequence[int], p: int) -> bool:
    """True iff the monic ``f`` (low-first) makes ``x`` a generator of GF(p^e)*."""
    e = len(f) - 1
    if f[0] % p == 0:
        return False
    order = p**e - 1
    one = [1] + [0] * (e - 1)
    if _x_power_mod(order, f, p) != one:
        return False
    return all(_x_power_mod(order // r, f, p) != one for r in prime_factors(order))


def _search_primitive_polynomial(p: int, e: int) -> tuple[int, ...]:
    # candidates ordered by the integer encoding of their low coefficients
    for low in range(1, p**e):
        f = tuple(_digits(low, p, e)) + (1,)
        if _is_primitive_polynomial(f, p):
            return f
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Monic defining polynomial (lowest degree first) used for GF(p^e)."""
    if e == 1:
        return ((-_smallest_primitive_root(p)) % p, 1)
    if p**e <= CONWAY_LIMIT and (p, e) in _conway_table():
        return _conway_table()[p, e]
    return _search_primitive_polynomial(p, e)


# ---------------------------------------------------------------------------
# fields


class FieldSpec:
    """
    The finite field GF(p^e) with a fixed primitive defining polynomial.

    Instances are immutable once built and may be shared freely between
    threads. Scalar operations take and return canonical integer encodings;
    the ``v*`` methods are their vectorised counterparts on numpy arrays.
    Use :meth:`element` for an operator-overloaded wrapper.
    """

    __slots__ = (
        "p", "e", "q", "modulus", "primitive", "base",
        "_exp", "_log", "_pw", "_add_tab", "_mul_tab", "__weakref__",
    )

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(int(c) for c in modulus)
        self.base: FieldSpec | None = None
        self._pw = np.array([p**i for i in range(e)], dtype=np.int64)
        self._build_tables()
        self.primitive = int(self._exp[1 % (self.q - 1)]) if self.q > 2 else 1
        if self.q <= _SMALL_TABLE_LIMIT:
            els = np.arange(self.q)
            self._add_tab = self._vadd_digits(els[:, None], els[None, :])
            self._mul_tab = self._vmul_logs(els[:, None], els[None, :])
        else:
            self._add_tab = None
            self._mul_tab = None

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        seen = np.zeros(q, dtype=bool)
        if e == 1:
            g = (-self.modulus[0]) % p
            v = 1
            for i in range(q - 1):
                exp[i] = v
                v = v * g % p
        else:
            # x * v: shift digits up, fold the overflow digit back with the modulus
            fold = [_undigits(((-t * c) % p for c in self.modulus[:e]), p) for t in range(p)]
            v = 1
            for i in range(q - 1):
                exp[i] = v
                top, low = divmod(v * p, q)
                v = self.add(low, fold[top]) if top else low
        seen[exp] = True
        if seen.sum() != q - 1 or seen[0]:
            raise ValueError(f"modulus {self.modulus} is not primitive over GF({p})")
        log[exp] = np.arange(q - 1)
        self._exp = exp
        self._log = log

    # -- scalar arithmetic on integer encodings ---------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element encoding of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % p
        res, place = 0, 1
        while a or b:
            res += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return res

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.e == 1:
            return (-a) % p
        res, place = 0, 1
        while a:
            res += ((-(a % p)) % p) * place
            a //= p
            place *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        return int(self._exp[(int(self._log[a]) * k) % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return int(self._log[a])

    def exp(self, k: int) -> int:
        return int(self._exp[k % (self.q - 1)])

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        return (self.q - 1) // gcd(self.log(a), self.q - 1)

    # -- vectorised arithmetic ----------------------------------------------

    def _vadd_digits(self, a, b):
        p = self.p
        if p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._pw:
            out += (((a // w) % p + (b // w) % p) % p) * w
        return out

    def _vmul_logs(self, a, b):
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add_tab is not None and self.p != 2:
            return self._add_tab[a, b]
        return self._vadd_digits(a, b)

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul_tab is not None:
            return self._mul_tab[a, b]
        return self._vmul_logs(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return a.copy()
        if self.e == 1:
            return (-a) % p
        out = np.zeros_like(a)
        for w in self._pw:
            out += ((-((a // w) % p)) % p) * w
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def vpow(self, a, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = self._exp[(self._log[a] * k) % (self.q - 1)]
        return np.where(a == 0, 1 if k == 0 else 0, out)

    def vsum(self, a, axis: int = -1) -> np.ndarray:
        """Field sum of ``a`` along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.e == 1:
            return a.sum(axis=axis) % p
        out = 0
        for w in self._pw:
            out = out + (((a // w) % p).sum(axis=axis) % p) * w
        return np.asarray(out, dtype=np.int64)

    # -- conveniences --------------------------------------------------------

    @property
    def order(self) -> int:
        return self.q

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, self._check(int(value)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.primitive)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def embed(self, a: int) -> int:
        """Image of a base-field encoding under the recorded embedding."""
        if self.base is None:
            raise FieldMismatch(f"{self} was not built as an extension")
        return int(subfield_embedding(self, self.base)[a])

    def _derive(self, base: FieldSpec) -> FieldSpec:
        clone = object.__new__(FieldSpec)
        for slot in FieldSpec.__slots__:
            if slot != "__weakref__":
                object.__setattr__(clone, slot, getattr(self, slot))
        clone.base = base
        return clone

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def _field_cached(p: int, e: int) -> FieldSpec:
    return FieldSpec(p, e, default_modulus(p, e))


def field_create(p: int, e: int = 1, *, limit: int = TABLE_LIMIT) -> FieldSpec:
    """
    Build (or fetch from cache) the field GF(p^e).

    Raises NotPrime if ``p`` is composite and FieldTooLarge when ``p**e``
    exceeds ``limit``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be positive")
    if p**e > limit:
        raise FieldTooLarge(f"GF({p}^{e}) has more than {limit} elements")
    return _field_cached(p, e)


def field_of_order(q: int, *, limit: int = TABLE_LIMIT) -> FieldSpec:
    p, e = prime_power(q)
    return field_create(p, e, limit=limit)


def extension_field(base: FieldSpec, m: int, *, limit: int = TABLE_LIMIT) -> FieldSpec:
    """
    GF(q^m) as an extension of ``base`` = GF(q).

    The returned field records ``base`` and embeds it by sending the base
    generator ``x`` to a root of the base modulus of order ``q - 1``.
    """
    if m < 1:
        raise ValueError("extension degree must be positive")
    if base.q**m > limit:
        raise FieldTooLarge(f"GF({base.q}^{m}) has more than {limit} elements")
    big = field_create(base.p, base.e * m, limit=limit)
    return big._derive(base)


_emb_lock = threading.Lock()
_emb_cache: dict[tuple, np.ndarray] = {}


def subfield_embedding(big: FieldSpec, small: FieldSpec) -> np.ndarray:
    """
    Array mapping each encoding of ``small`` to its image in ``big``.

    The image of the generator of ``small`` is the first root of its
    modulus among the generators of the order-(q-1) subgroup of ``big``.
    """
    if big.p != small.p or big.e % small.e:
        raise FieldMismatch(f"{small} is not a subfield of {big}")
    key = (big._key(), small._key())
    with _emb_lock:
        cached = _emb_cache.get(key)
    if cached is not None:
        return cached
    q, Q = small.q, big.q
    beta = big.exp((Q - 1) // (q - 1))

    def eval_modulus(x: int) -> int:
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, x), c)
        return acc

    gamma = None
    for j in range(1, max(q - 1, 2)):
        if gcd(j, q - 1) != 1:
            continue
        cand = big.pow(beta, j)
        if eval_modulus(cand) == 0:
            gamma = cand
            break
    if gamma is None:
        raise AssertionError("subfield generator not found")
    powers = [big.pow(gamma, i) for i in range(small.e)]
    image = np.zeros(q, dtype=np.int64)
    for v in range(q):
        acc = 0
        for c, g in zip(_digits(v, small.p, small.e), powers):
            for _ in range(c):
                acc = big.add(acc, g)
        image[v] = acc
    with _emb_lock:
        _emb_cache[key] = image
    return image


@dataclass(frozen=True)
class FieldElement:
    """An element of ``field`` carried with its canonical integer encoding."""

    field: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field._check(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return self.field.order_of(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field}({self.value})"


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """
    Univariate polynomial over a FieldSpec.

    ``coeffs`` holds canonical integer encodings, lowest degree first, with
    no trailing zeros; the zero polynomial has no coefficients.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[int | FieldElement] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch(f"{c.field} vs {field}")
                c = c.value
            cs.append(field._check(int(c)))
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field: FieldSpec) -> Polynomial:
        return cls(field, (0, 1))

    @classmethod
    def one(cls, field: FieldSpec) -> Polynomial:
        return cls(field, (1,))

    @classmethod
    def xn_minus_one(cls, field: FieldSpec, n: int) -> Polynomial:
        return cls(field, [field.neg(1)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, FieldElement):
            return Polynomial(self.field, [other])
        if isinstance(other, (int, np.integer)):
            return Polynomial(self.field, [int(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Polynomial(F, [F.add(x, y) for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        if not self.coeffs or not o.coeffs:
            return Polynomial(F)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        if d.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = d.degree
        inv_lead = F.inv(d.leading)
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t = F.mul(c, inv_lead)
            quot[k - dd] = t
            for i, dc in enumerate(d.coeffs):
                rem[k - dd + i] = F.sub(rem[k - dd + i], F.mul(t, dc))
        return Polynomial(F, quot), Polynomial(F, rem[:dd] if dd > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int | FieldElement) -> FieldElement:
        F = self.field
        xv = x.value if isinstance(x, FieldElement) else F._check(int(x))
        if isinstance(x, FieldElement) and x.field != F:
            raise FieldMismatch(f"{x.field} vs {F}")
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, xv), c)
        return FieldElement(F, acc)

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        inv = self.field.inv(self.leading)
        return Polynomial(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, field: FieldSpec, data: Sequence[int]) -> Polynomial:
        return cls(field, data)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def product_of_linear_factors(
    exponents: Iterable[int], alpha: FieldElement, n: int
) -> Polynomial:
    """
    Expand ``prod_{z in exponents} (x - alpha^z)``.

    ``alpha`` must have multiplicative order exactly ``n``; the result is a
    monic polynomial over ``alpha.field``.
    """
    F = alpha.field
    if alpha.value == 0 or F.order_of(alpha.value) != n:
        raise WrongOrder(f"{alpha} does not have multiplicative order {n}")
    coeffs = [1]
    for z in sorted(set(int(z) % n for z in exponents)):
        r = F.neg(F.pow(alpha.value, z))
        # multiply by (x + r) in place
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(c, r))
        coeffs = nxt
    return Polynomial(F, coeffs)


def project_to_subfield(f: Polynomial, target: FieldSpec) -> Polynomial:
    """
    Re-express ``f`` over the subfield ``target``.

    Raises CoefficientOutsideSubfield if some coefficient is not fixed by
    the q-th power map of ``target``.
    """
    image = subfield_embedding(f.field, target)
    preimage = {int(v): i for i, v in enumerate(image)}
    out = []
    for c in f.coeffs:
        if c not in preimage:
            raise CoefficientOutsideSubfield(
                f"coefficient {c} of {f.field} does not lie in {target}"
            )
        out.append(preimage[c])
    return Polynomial(target, out)


def all_monic(field: FieldSpec, degree: int) -> Iterable[Polynomial]:
    """Every monic polynomial of the given degree (used by tests/oracles)."""
    for low in itertools.product(range(field.q), repeat=degree):
        yield Polynomial(field, list(low) + [1])
