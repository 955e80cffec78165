"""Finite-field and polynomial arithmetic, checked against sympy's GF(p)[x] routines."""

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import factorint
from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

from qbch.errors import (
    CoefficientOutsideSubfield,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    NotPrimePower,
    WrongOrder,
)
from qbch.gf import (
    FieldElement,
    Polynomial,
    _conway_table,
    extension_field,
    field_create,
    field_of_order,
    prime_power,
    product_of_linear_factors,
    project_to_subfield,
    subfield_embedding,
)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (2, 6), (7, 2), (3, 3)]


def _digits(v, p, e):
    return [(v // p**i) % p for i in range(e)]


def _sympy_mul(F, a, b):
    """Multiply encodings via sympy: digits as polynomials mod (p, modulus)."""
    p, e = F.p, F.e
    fa = [ZZ(c) for c in reversed(_digits(a, p, e))]
    fb = [ZZ(c) for c in reversed(_digits(b, p, e))]
    mod = [ZZ(c) for c in reversed(F.modulus)]
    r = gt.gf_rem(gt.gf_mul(fa, fb, p, ZZ), mod, p, ZZ)
    r = list(reversed([int(c) for c in r]))
    return sum(c * p**i for i, c in enumerate(r))


def test_gf8_modulus_and_generator():
    F = field_create(2, 3)
    assert F.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert F.primitive == 2  # x
    assert F.order_of(F.primitive) == 7
    # x * x^2 = x^3 = x + 1
    assert F.mul(2, 4) == 3


def test_prime_field_conventions():
    assert field_create(2, 1).primitive == 1
    assert field_create(5, 1).primitive == 2  # smallest primitive root
    assert field_create(5, 1).modulus == (3, 1)  # x - 2


def test_constructor_errors():
    with pytest.raises(NotPrime):
        field_create(4, 1)
    with pytest.raises(NotPrimePower):
        field_of_order(6)
    with pytest.raises(FieldTooLarge):
        extension_field(field_create(2, 1), 25)
    with pytest.raises(FieldTooLarge):
        field_create(2, 21)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_multiplication_matches_sympy(p, e):
    F = field_create(p, e)
    els = np.arange(F.q)
    got = F.vmul(els[:, None], els[None, :])
    for a in range(F.q):
        for b in range(0, F.q, max(1, F.q // 9)):
            assert got[a, b] == _sympy_mul(F, a, b)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, e):
    F = field_create(p, e)
    els = np.arange(F.q)
    nz = els[1:]
    assert (F.vmul(nz, F.vinv(nz)) == 1).all()
    assert (F.vadd(els, F.vneg(els)) == 0).all()
    assert (F.vpow(nz, F.q - 1) == 1).all()
    # exp/log mutually inverse
    assert all(F.exp(F.log(int(a))) == a for a in nz)
    assert sorted(F.exp(k) for k in range(F.q - 1)) == list(range(1, F.q))
    if p == 2:
        assert (F.vadd(els, els) == 0).all()


@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_frobenius_is_additive(pe, data):
    F = field_create(*pe)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_negative_powers(pe, data):
    F = field_create(*pe)
    a = data.draw(st.integers(1, F.q - 1))
    k = data.draw(st.integers(-50, 50))
    assert F.mul(F.pow(a, k), F.pow(a, -k)) == 1


def test_element_wrapper_errors():
    F = field_create(2, 3)
    G = field_create(3, 1)
    with pytest.raises(FieldMismatch):
        F.element(1) + G.element(1)
    with pytest.raises(DivisionByZero):
        F.element(1) / F.element(0)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    x = F.element(2)
    assert (x * x * x) == F.element(3)
    assert x**7 == F.one
    assert isinstance(x + 1, FieldElement)


@pytest.mark.parametrize("key", sorted(_conway_table()))
def test_conway_table_entries_primitive(key):
    p, e = key
    f = _conway_table()[key]
    assert len(f) == e + 1 and f[-1] == 1
    mod = [ZZ(c) for c in reversed(f)]
    assert gt.gf_irreducible_p(mod, p, ZZ)
    q = p**e
    x = [ZZ(1), ZZ(0)]
    for r in factorint(q - 1):
        assert gt.gf_pow_mod(x, (q - 1) // r, mod, p, ZZ) != [ZZ(1)]


def test_conway_compatibility_sample():
    # the defining-polynomial root of GF(p^e) raised to (p^e-1)/(p^d-1) satisfies the
    # Conway polynomial of GF(p^d) for d | e
    for p, e in [(2, 4), (2, 6), (3, 4), (2, 8), (5, 4)]:
        big = field_create(p, e)
        for d in range(1, e):
            if e % d:
                continue
            small = field_create(p, d)
            beta = big.pow(big.primitive, (big.q - 1) // (small.q - 1))
            val = 0
            for i, c in enumerate(small.modulus):
                val = big.add(val, big.mul(c % p, big.pow(beta, i)))
            assert val == 0, (p, e, d)


def test_extension_embedding():
    F2 = field_create(2, 1)
    G16 = extension_field(F2, 4)
    assert list(subfield_embedding(G16, F2)) == [0, 1]
    F4 = field_of_order(4)
    G = extension_field(F4, 2)
    image = subfield_embedding(G, F4)
    fixed = sorted(a for a in range(16) if G.pow(a, 4) == a)
    assert sorted(int(v) for v in image) == fixed
    assert G.order_of(int(image[F4.primitive])) == 3
    # homomorphism
    for a in range(4):
        for b in range(4):
            assert image[F4.mul(a, b)] == G.mul(int(image[a]), int(image[b]))
            assert image[F4.add(a, b)] == G.add(int(image[a]), int(image[b]))


def test_polynomial_arithmetic_against_sympy():
    F = field_create(3, 1)
    a = Polynomial(F, [1, 2, 0, 1])
    b = Polynomial(F, [2, 1])
    qo, r = divmod(a, b)
    assert qo * b + r == a
    sa = [ZZ(c) for c in reversed(a.coeffs)]
    sb = [ZZ(c) for c in reversed(b.coeffs)]
    sq, sr = gt.gf_div(sa, sb, 3, ZZ)
    assert list(reversed([int(c) for c in sq])) == list(qo.coeffs)
    assert list(reversed([int(c) for c in sr])) == list(r.coeffs)
    assert Polynomial(F, [0, 0]).coeffs == ()
    assert Polynomial.from_json(F, a.to_json()) == a


def test_product_of_linear_factors_examples():
    G8 = field_create(2, 3)
    alpha = G8.primitive_element
    assert product_of_linear_factors([], alpha, 7) == Polynomial.one(G8)
    f = product_of_linear_factors([1, 2, 4], alpha, 7)
    assert f.coeffs == (1, 1, 0, 1)
    with pytest.raises(WrongOrder):
        product_of_linear_factors([1], alpha, 5)

    G16 = extension_field(field_create(2, 1), 4)
    f = product_of_linear_factors([1, 2, 4, 8], G16.primitive_element, 15)
    g = project_to_subfield(f, field_create(2, 1))
    assert g.coeffs == (1, 1, 0, 0, 1)  # x^4 + x + 1
    with pytest.raises(CoefficientOutsideSubfield):
        project_to_subfield(product_of_linear_factors([1], G16.primitive_element, 15),
                            field_create(2, 1))
    one = project_to_subfield(Polynomial.one(G16), field_create(2, 1))
    assert one.coeffs == (1,)


@given(st.sets(st.integers(0, 14), max_size=8))
def test_product_divides_xn_minus_one(S):
    G16 = extension_field(field_create(2, 1), 4)
    f = product_of_linear_factors(sorted(S), G16.primitive_element, 15)
    assert f.degree == len(S)
    assert (Polynomial.xn_minus_one(G16, 15) % f).is_zero()


@given(st.sets(st.integers(0, 14), min_size=1, max_size=10))
def test_projection_succeeds_iff_closed(S):
    F4 = field_of_order(4)
    G16 = extension_field(F4, 2)
    f = product_of_linear_factors(sorted(S), G16.primitive_element, 15)
    closed = all((4 * z) % 15 in S for z in S)
    try:
        g = project_to_subfield(f, F4)
        ok = True
        assert all(F4.pow(c, 4) == c for c in g.coeffs)
    except CoefficientOutsideSubfield:
        ok = False
    assert ok == closed


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(NotPrimePower):
        prime_power(12)
