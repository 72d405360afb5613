from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfactor.rings import (
    GFpX,
    QQ,
    ZZ,
    ZZ_half,
    PolynomialRing,
    RingMismatchError,
    div_rem,
    gcd_ext,
    halve,
    invert_unit,
    is_unit,
    ring_from_tag,
    two_is_unit,
)

F5X = GFpX(5)


def test_rational_sum():
    assert QQ("1/2") + QQ("1/3") == QQ("5/6")


def test_poly_product_mod5():
    assert F5X([1, 1]) * F5X([4, 1]) == F5X([4, 0, 1])


def test_dyadic_sum():
    assert ZZ_half("3/8") + ZZ_half("1/8") == ZZ_half("1/2")


def test_integer_division():
    assert div_rem(ZZ(7), ZZ(3)) == (ZZ(2), ZZ(1))


def test_poly_division():
    assert div_rem(F5X([1, 0, 1]), F5X([0, 1])) == (F5X([0, 1]), F5X([1]))


def test_dyadic_division_shrinks_odd_part():
    a, b = ZZ_half(3), ZZ_half("5/2")
    q, r = div_rem(a, b)
    assert q * b + r == a
    assert r.norm() < b.norm()


def test_halve_in_f5x():
    assert halve(F5X([1])) == F5X([3])


def test_halve_fails_over_integers():
    with pytest.raises(ArithmeticError):
        halve(ZZ(1))


def test_units():
    assert is_unit(ZZ_half(4)) and is_unit(ZZ(-1))
    assert not is_unit(ZZ(2)) and not is_unit(ZZ_half(6))
    assert is_unit(F5X([3])) and not is_unit(F5X([0, 1]))
    assert invert_unit(ZZ_half("1/8")) == ZZ_half(8)


def test_two_is_unit_by_ring():
    assert [two_is_unit(r) for r in (ZZ, QQ, ZZ_half, F5X)] == [False, True, True, True]


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        QQ(1) + ZZ(1)


@pytest.mark.parametrize("ring", [ZZ, QQ, ZZ_half, F5X], ids=lambda r: r.name)
def test_tag_round_trip(ring):
    assert ring_from_tag(ring.tag()) == ring


def test_nested_polynomial_tag():
    P = PolynomialRing(ZZ)
    assert ring_from_tag(P.tag()) == P
    assert not P.euclidean
    assert PolynomialRing(QQ).euclidean


# -- properties ----------------------------------------------------------

ints = st.integers(-10**6, 10**6)
dyadics = st.builds(lambda m, k: ZZ_half(Fraction(m, 2**k)), ints, st.integers(0, 8))
polys = st.lists(st.integers(0, 4), max_size=6).map(F5X)
elements = st.one_of(
    ints.map(ZZ),
    st.fractions(max_denominator=50).map(QQ),
    dyadics,
    polys,
)


def _pair(strategy):
    return st.tuples(strategy, strategy)


pairs = st.one_of(_pair(ints.map(ZZ)), _pair(st.fractions(max_denominator=50).map(QQ)), _pair(dyadics), _pair(polys))


@settings(max_examples=300, deadline=None)
@given(pairs)
def test_division_with_remainder(ab):
    a, b = ab
    if not b:
        return
    q, r = div_rem(a, b)
    assert q * b + r == a
    assert not r or r.norm() < b.norm()


@settings(max_examples=200, deadline=None)
@given(pairs)
def test_bezout(ab):
    a, b = ab
    if not a and not b:
        return
    g, s, t = gcd_ext(a, b)
    assert s * a + t * b == g
    if g:
        assert not div_rem(a, g)[1] and not div_rem(b, g)[1]


@settings(max_examples=200, deadline=None)
@given(pairs, elements)
def test_ring_axioms(ab, _):
    a, b = ab
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b
    assert a + (-a) == a.ring.zero()


@settings(max_examples=100, deadline=None)
@given(elements)
def test_json_round_trip(x):
    assert x.ring(x.to_json()) == x
