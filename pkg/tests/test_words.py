import random

import pytest

from oracles import dense_se, product
from spfactor.forms import lin_e_matrix, psi
from spfactor.matrices import IdealSpec, Matrix
from spfactor.rings import GFpX, QQ, ZZ, ZZ_half
from spfactor.sampling import random_lin_word, random_se_word
from spfactor.words import (
    Conj,
    GeneratorWord,
    LinE,
    SymSE,
    VasC,
    eval_word,
    invert_word,
    simplify,
    word_from_json,
    word_in_ideal,
    word_to_json,
)

RINGS = [ZZ, QQ, ZZ_half, GFpX(5)]


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_eval_matches_dense_product(ring):
    rng = random.Random(1)
    for n in (1, 2, 3):
        w = random_se_word(ring, n, 12, rng)
        expected = product(ring, 2 * n, [dense_se(ring, n, g.i, g.j, g.a) for g in w.gens])
        assert eval_word(w) == expected


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_linear_eval_and_inverse(ring):
    rng = random.Random(2)
    w = random_lin_word(ring, 5, 15, rng)
    expected = product(ring, 5, [lin_e_matrix(ring, 5, g.i, g.j, g.a) for g in w.gens])
    assert eval_word(w) == expected
    assert (eval_word(w) @ eval_word(invert_word(w))).is_identity()


def test_empty_word_is_identity():
    assert eval_word(GeneratorWord(QQ, 4)).is_identity()


def test_conjugate_generator():
    outer = GeneratorWord(QQ, 4, [SymSE(1, 3, QQ(2))])
    inner = SymSE(2, 1, QQ(5))
    w = GeneratorWord(QQ, 4, [Conj(outer, inner)])
    x, y = dense_se(QQ, 2, 1, 3, 2), dense_se(QQ, 2, 2, 1, 5)
    assert eval_word(w) == x @ y @ dense_se(QQ, 2, 1, 3, -2)
    assert (eval_word(w) @ eval_word(invert_word(w))).is_identity()


def test_simplify_merges_and_drops():
    w = GeneratorWord(QQ, 4, [SymSE(1, 2, QQ(1)), SymSE(1, 2, QQ(-1)), SymSE(3, 1, QQ(2)), SymSE(3, 1, QQ(3))])
    s = simplify(w)
    assert s.gens == (SymSE(3, 1, QQ(5)),)
    assert eval_word(s) == eval_word(w)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_simplify_preserves_value(ring):
    rng = random.Random(5)
    w = random_se_word(ring, 2, 10, rng)
    w = w + invert_word(w) + w
    assert eval_word(simplify(w)) == eval_word(w)
    assert len(simplify(w)) <= len(w)


def test_word_in_ideal_looks_only_at_inner_parameters():
    outer = GeneratorWord(ZZ, 4, [SymSE(1, 3, ZZ(1))])
    w = GeneratorWord(ZZ, 4, [Conj(outer, SymSE(2, 1, ZZ(6))), SymSE(3, 4, ZZ(9))])
    assert word_in_ideal(w, IdealSpec(ZZ(3)))
    assert not word_in_ideal(w, IdealSpec(ZZ(2)))


def test_vaserstein_generator_on_standard_form():
    # se_31(2) and se_41(3) do not commute, so se_21 absorbs 2 * 3
    phi = psi(QQ, 2)
    v = (QQ(1), QQ(2), QQ(3))
    w = GeneratorWord(QQ, 4, [VasC("psi", v)], {"psi": phi})
    factors = [dense_se(QQ, 2, 2, 1, 1 + 6), dense_se(QQ, 2, 3, 1, 2), dense_se(QQ, 2, 4, 1, 3)]
    assert eval_word(w) == product(QQ, 4, factors)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_json_round_trip(ring):
    rng = random.Random(9)
    w = random_se_word(ring, 2, 6, rng)
    w = w + GeneratorWord(ring, 4, [Conj(w, SymSE(1, 2, ring.one()))])
    assert word_from_json(word_to_json(w)) == w
    lin = random_lin_word(ring, 3, 4, rng)
    assert word_from_json(word_to_json(lin)) == lin


def test_word_rejects_mismatched_form():
    with pytest.raises(ValueError):
        GeneratorWord(QQ, 4, [], {"f": Matrix.identity(QQ, 2)})


def test_generator_index_validation():
    with pytest.raises(ValueError):
        eval_word(GeneratorWord(QQ, 4, [SymSE(1, 1, QQ(1))]))
    with pytest.raises(ValueError):
        eval_word(GeneratorWord(QQ, 3, [LinE(1, 4, QQ(1))]))
