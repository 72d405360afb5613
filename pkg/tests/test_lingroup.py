import random

import pytest

from spfactor.lingroup import NotUnimodularError, row_transvection_word, um_to_e1
from spfactor.matrices import Matrix, determinant
from spfactor.rings import GFpX, QQ, ZZ, ZZ_half
from spfactor.sampling import random_unimodular
from spfactor.words import LinE, eval_word

RINGS = [ZZ, QQ, ZZ_half, GFpX(5)]


def _row(vec):
    return Matrix(vec[0].ring, [list(vec)])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("dim", [2, 3, 5])
def test_um_to_e1_reaches_e1(ring, dim):
    rng = random.Random(dim)
    for _ in range(10):
        a = random_unimodular(ring, dim, rng)
        w = um_to_e1(a)
        assert all(isinstance(g, LinE) for g in w.gens)
        beta = eval_word(w)
        assert _row(a) @ beta == Matrix.e_unit(ring, 1, 1, 1).submatrix([0], [0]).__class__(
            ring, [[1] + [0] * (dim - 1)]
        )
        assert determinant(beta) == ring.one()


def test_um_to_e1_known_vector():
    a = [ZZ(6), ZZ(10), ZZ(15)]
    beta = eval_word(um_to_e1(a))
    assert _row(a) @ beta == Matrix(ZZ, [[1, 0, 0]])


def test_um_to_e1_unit_pivot_normalized():
    a = [ZZ(-1), ZZ(0)]
    assert _row(a) @ eval_word(um_to_e1(a)) == Matrix(ZZ, [[1, 0]])


def test_not_unimodular():
    with pytest.raises(NotUnimodularError) as info:
        um_to_e1([ZZ(2), ZZ(4)])
    assert info.value.stage == "um_to_e1"
    with pytest.raises(NotUnimodularError):
        um_to_e1([QQ(0), QQ(0)])


def test_row_transvection():
    t = [None, QQ(2), QQ(0), QQ(5)]
    m = eval_word(row_transvection_word(1, t, 4))
    assert m == Matrix(QQ, [[1, 2, 0, 5], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
