import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_psi, leibniz_det, matching_pfaffian
from spfactor.forms import psi
from spfactor.matrices import (
    IdealSpec,
    Matrix,
    block_perp,
    determinant,
    inverse_unit_det,
    is_congruent_identity,
    is_symplectic,
    pfaffian,
    reduce_mod,
)
from spfactor.rings import GFpX, QQ, ZZ, ZZ_half
from spfactor.sampling import random_lin_word, random_skew
from spfactor.words import eval_word

F5X = GFpX(5)
RINGS = [ZZ, QQ, ZZ_half, F5X]


def _square(ring, size, rng):
    return Matrix(ring, [[ring.random(rng, 2) for _ in range(size)] for _ in range(size)])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("size", [1, 2, 3, 4, 5, 6])
def test_determinant_matches_leibniz(ring, size):
    rng = random.Random(size)
    for _ in range(4):
        m = _square(ring, size, rng)
        assert determinant(m) == leibniz_det(m)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("size", [2, 4, 6])
def test_pfaffian_matches_matching_sum(ring, size):
    rng = random.Random(size)
    for _ in range(4):
        m = random_skew(ring, size, rng)
        assert pfaffian(m) == matching_pfaffian(m)


def test_pfaffian_rejects_odd_size():
    with pytest.raises(ValueError):
        pfaffian(random_skew(QQ, 5, random.Random(0)))



@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_standard_form(n):
    assert psi(QQ, n) == dense_psi(QQ, n)
    assert pfaffian(psi(QQ, n)) == QQ.one()


def test_pfaffian_congruence():
    rng = random.Random(3)
    for _ in range(10):
        A = random_skew(QQ, 6, rng)
        B = _square(QQ, 6, rng)
        assert pfaffian(B.T @ A @ B) == determinant(B) * pfaffian(A)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_inverse_of_elementary_product(ring):
    rng = random.Random(11)
    for dim in (2, 3, 5):
        m = eval_word(random_lin_word(ring, dim, 8, rng))
        assert (m @ inverse_unit_det(m)).is_identity()


def test_inverse_requires_unit_determinant():
    with pytest.raises(ValueError):
        inverse_unit_det(Matrix(ZZ, [[2, 0], [0, 1]]))


def test_symplectic_check():
    n = 2
    assert is_symplectic(Matrix.identity(QQ, 4), psi(QQ, n))
    assert not is_symplectic(Matrix(QQ, [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]), psi(QQ, n))


def test_block_perp_layout():
    a = Matrix(ZZ, [[1]])
    b = Matrix(ZZ, [[2, 3], [4, 5]])
    assert block_perp(a, b) == Matrix(ZZ, [[1, 0, 0], [0, 2, 3], [0, 4, 5]])


def test_congruence_mod_ideal():
    ideal = IdealSpec(ZZ(3))
    m = Matrix(ZZ, [[4, 3], [-6, 7]])
    assert is_congruent_identity(m, ideal)
    assert not is_congruent_identity(Matrix(ZZ, [[2, 0], [0, 1]]), ideal)
    assert reduce_mod(m, ideal).is_identity()


def test_json_round_trip():
    m = Matrix(F5X, [[[1, 2], [0]], [[], [4, 0, 1]]])
    assert Matrix.from_json(m.to_json()) == m


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32))
def test_pfaffian_squared_is_determinant(n, seed):
    m = random_skew(QQ, 2 * n, random.Random(seed))
    pf = pfaffian(m)
    assert pf * pf == determinant(m)
