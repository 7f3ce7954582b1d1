import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dscayley.algebra import (SizeGuardError, Subgroup, additive_group, cyclic_group,
                              direct_product, field_make, group_from_descriptor,
                              group_from_string, is_irreducible, prime_power,
                              reduction_polynomial, twisted_group, unit_group)


def test_prime_power():
    assert prime_power(7) == (7, 1)
    assert prime_power(8) == (2, 3)
    assert prime_power(81) == (3, 4)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_prime_field_arithmetic():
    F = field_make(7)
    assert F.mul(3, 5) == 1
    assert F.add(4, 5) == 2
    assert F.sub(2, 5) == 4
    assert F.inv(3) == 5


def test_gf8_reduction():
    F = field_make(8)
    assert F.poly == (1, 1, 0, 1)
    # x * x^2 = x^3 = x + 1, whose index is 1 + 2 = 3
    assert F.mul(2, 4) == 3


def test_not_prime_power():
    with pytest.raises(ValueError):
        field_make(6)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        field_make(2**23)
    with pytest.raises(SizeGuardError):
        cyclic_group(100, max_order=50)
    with pytest.raises(SizeGuardError):
        twisted_group(12)


@pytest.mark.parametrize("m", [2, 3, 5, 7, 9, 11])
def test_fixed_binary_polynomials_irreducible(m):
    assert is_irreducible(reduction_polynomial(2, m), 2)


def test_sieved_polynomials():
    assert reduction_polynomial(3, 2) == (1, 0, 1)       # x^2 + 1
    assert reduction_polynomial(2, 4) == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert not is_irreducible((1, 0, 0, 1), 2)            # x^3 + 1 = (x+1)(x^2+x+1)


def _field_triples(q):
    if q <= 16:
        return itertools.product(range(q), repeat=3)
    rng = np.random.default_rng(q)
    return rng.integers(0, q, size=(3000, 3)).tolist()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64, 81, 128])
def test_field_axioms(q):
    F = field_make(q)
    for a, b, c in _field_triples(q):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


def test_field_vectorised_matches_scalar():
    F = field_make(27)
    a = np.arange(27)
    b = (a * 7 + 3) % 27
    assert F.mul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.add(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]


def test_unit_group():
    assert unit_group(field_make(4)).order == 3
    assert unit_group(field_make(2)).order == 1
    U = unit_group(field_make(7))
    assert U.order == 6
    # field element 3 has group index 2; 3 is a primitive root mod 7
    assert U.element_order(2) == 6
    powers = {pow(3, k, 7) for k in range(6)}
    assert powers == set(range(1, 7))


@pytest.mark.parametrize("q", [3, 4, 5, 8, 9, 13, 16, 27])
def test_unit_group_cyclic(q):
    U = unit_group(field_make(q))
    assert max(U.element_order(x) for x in range(U.order)) == q - 1


def test_twisted_group_m1():
    T = twisted_group(1)
    assert T.op(T.pair(1, 0), T.pair(1, 0)) == T.pair(0, 1)
    assert T.inv(T.pair(1, 1)) == T.pair(1, 0)
    for x in range(4):
        assert T.op(0, x) == x


@pytest.mark.parametrize("m", [1, 2, 3])
def test_twisted_group_structure(m):
    T = twisted_group(m)
    e = T.elements()
    table = T.op(e[:, None], e[None, :])
    assert T.order == 4**m
    assert np.array_equal(table, table.T)
    squares = T.op(e, e)
    assert np.count_nonzero(squares == 0) == 2**m
    assert set(np.flatnonzero(squares == 0).tolist()) == set(T.pair(0, np.arange(2**m)).tolist())
    fourth = T.op(squares, squares)
    assert not fourth.any()


def test_cyclic_and_products():
    Z5 = cyclic_group(5)
    assert Z5.op(2, 4) == 1
    G = direct_product(Z5, Z5)
    assert G.order == 25
    assert G.compose(2, 3) == 13
    assert G.split(13) == (2, 3)
    K = additive_group(field_make(4))
    assert all(K.op(x, x) == 0 for x in range(4))


GROUPS = [
    cyclic_group(12),
    direct_product(cyclic_group(4), cyclic_group(6)),
    additive_group(field_make(9)),
    unit_group(field_make(16)),
    direct_product(additive_group(field_make(5)), unit_group(field_make(5))),
    direct_product(unit_group(field_make(4)), unit_group(field_make(4))),
    twisted_group(2),
    direct_product(twisted_group(1), cyclic_group(4)),
    direct_product(cyclic_group(2), cyclic_group(3), cyclic_group(5)),
]


@pytest.mark.parametrize("G", GROUPS, ids=repr)
def test_group_axioms_exhaustive(G):
    e = G.elements()
    assert np.array_equal(G.op(0, e), e)
    assert not np.any(G.op(e, G.inv(e)))
    assert np.array_equal(G.inv(G.inv(e)), e)
    xy = G.op(e[:, None], e[None, :])
    assert np.array_equal(G.inv(xy), G.op(G.inv(e)[None, :], G.inv(e)[:, None]))
    for x, y in itertools.product(e, e):
        lhs = G.op(G.op(int(x), int(y)), e)
        rhs = G.op(int(x), G.op(int(y), e))
        assert np.array_equal(lhs, rhs)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 4**5 - 1), st.integers(0, 4**5 - 1), st.integers(0, 4**5 - 1))
def test_twisted_associative_random(x, y, z):
    T = twisted_group(5)
    assert T.op(T.op(x, y), z) == T.op(x, T.op(y, z))
    assert T.op(x, y) == T.op(y, x)


@pytest.mark.parametrize("G", GROUPS, ids=repr)
def test_descriptor_roundtrip(G):
    H = group_from_descriptor(G.descriptor())
    e = G.elements()
    assert H.order == G.order
    assert np.array_equal(H.op(e[:, None], e[None, :]), G.op(e[:, None], e[None, :]))


def test_group_from_string():
    assert group_from_string("z7").descriptor() == {"kind": "cyclic", "n": 7}
    G = group_from_string("z4xz4")
    assert G.order == 16
    assert group_from_string("add5xunits5").order == 20
    assert group_from_string("tw2").order == 16


def test_subgroup_validation():
    G = cyclic_group(4)
    assert Subgroup(G, [0, 2]).order == 2
    with pytest.raises(ValueError):
        Subgroup(G, [0, 1])
    with pytest.raises(ValueError):
        Subgroup(G, [2])


def test_power():
    G = cyclic_group(7)
    assert G.power(3, 2) == 6
    assert G.power(3, -1) == 4
