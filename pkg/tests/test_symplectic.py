import random
from itertools import product as iproduct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_psi, dense_se, product, sigma
from spfactor.errors import HypothesisError
from spfactor.forms import C_of, R_of, extract_form_data, psi
from spfactor.matrices import IdealSpec, is_congruent_identity, is_symplectic
from spfactor.rings import GFpX, QQ, ZZ, ZZ_half, PolynomialRing
from spfactor.sampling import random_se_word, random_vanishing_poly_word
from spfactor.symplectic import (
    border_to_vaserstein,
    check_identity,
    factor_sp,
    pair_correction,
    relabel,
    relativize_polynomial_word,
    rewrite_to_border,
    se,
    specialize,
    substitute_word,
    vaserstein_to_se,
)
from spfactor.words import Conj, GeneratorWord, SymSE, VasC, VasR, eval_word, word_in_ideal

F5X = GFpX(5)
RINGS = [ZZ, QQ, ZZ_half, F5X]
TWO_UNIT = [QQ, ZZ_half, F5X]


def _pairs(n):
    return [(i, j) for i in range(1, 2 * n + 1) for j in range(1, 2 * n + 1) if i != j]


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_se_matches_definition_and_is_symplectic(ring, n):
    rng = random.Random(n)
    for i, j in _pairs(n):
        a = ring.random(rng, 2)
        m = se(i, j, a, n)
        assert m == dense_se(ring, n, i, j, a)
        assert is_symplectic(m, dense_psi(ring, n))


def test_se_rejects_diagonal():
    with pytest.raises(ValueError):
        se(2, 2, QQ(1), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_se_splits_additively(n):
    rng = random.Random(0)
    for i, j in _pairs(n):
        a, b = QQ.random(rng), QQ.random(rng)
        assert se(i, j, a + b, n) == se(i, j, a, n) @ se(i, j, b, n)


def _identity_cases(n):
    dim = 2 * n
    idx = range(1, dim + 1)
    for i, j in iproduct(idx, idx):
        if i != j and i != sigma(j):
            yield "pair", i, j, 0
    for i, j, k in iproduct(idx, idx, idx):
        if i != j and i != sigma(j) and k not in (i, j, sigma(i), sigma(j)):
            yield "generic", i, j, k
    for i, k in iproduct(idx, idx):
        if k not in (i, sigma(i)):
            yield "double", i, 0, k


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_commutator_identities(ring):
    rng = random.Random(4)
    for n in (2, 3):
        for pattern, i, j, k in _identity_cases(n):
            a, b = ring.random(rng, 2), ring.random(rng, 2)
            assert check_identity(pattern, a, b, i, j, k, n), (pattern, i, j, k)


def test_commutator_identity_rejects_bad_indices():
    with pytest.raises(ValueError):
        check_identity("generic", QQ(1), QQ(1), 1, 3, 2, 2)
    with pytest.raises(ValueError):
        check_identity("pair", QQ(1), QQ(1), 1, 2, 0, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_relabel_is_same_matrix(n):
    for i, j in _pairs(n):
        g = SymSE(i, j, QQ(7))
        h = relabel(g)
        assert se(h.i, h.j, h.a, n) == se(i, j, QQ(7), n)


@pytest.mark.parametrize("ring", TWO_UNIT, ids=lambda r: r.name)
@pytest.mark.parametrize("n", [2, 3])
def test_rewrite_to_border(ring, n):
    rng = random.Random(n)
    for i, j in _pairs(n):
        a = ring.random(rng, 2)
        w = rewrite_to_border(SymSE(i, j, a), n)
        assert all(g.i == 1 or g.j == 1 for g in w.gens)
        assert eval_word(w) == dense_se(ring, n, i, j, a)


def test_rewrite_to_border_needs_two_invertible():
    with pytest.raises(HypothesisError) as info:
        rewrite_to_border(SymSE(3, 4, ZZ(1)), 2)
    assert info.value.stage == "border"


def test_border_word_to_vaserstein_and_back():
    rng = random.Random(8)
    n = 3
    w = GeneratorWord(QQ, 6, [SymSE(1, 4, QQ(3)), SymSE(5, 1, QQ(-2)), SymSE(2, 1, QQ(1))])
    v = border_to_vaserstein(w)
    assert all(isinstance(g, (VasC, VasR)) for g in v.gens)
    assert eval_word(v) == eval_word(w)
    assert eval_word(vaserstein_to_se(v)) == eval_word(w)
    del rng, n


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_corrected_vaserstein_product(ring, n):
    rng = random.Random(n)
    fd = extract_form_data(psi(ring, n))
    for _ in range(10):
        v = tuple(ring.random(rng, 2) for _ in range(2 * n - 1))
        k = pair_correction(v)
        cs = [dense_se(ring, n, 2, 1, v[0] + k)] + [dense_se(ring, n, i, 1, v[i - 2]) for i in range(3, 2 * n + 1)]
        rs = [dense_se(ring, n, 1, 2, v[0] - k)] + [dense_se(ring, n, 1, i, v[i - 2]) for i in range(3, 2 * n + 1)]
        assert C_of(fd, v) == product(ring, 2 * n, cs)
        assert R_of(fd, v) == product(ring, 2 * n, rs)
        w = GeneratorWord(ring, 2 * n, [VasC("psi", v), VasR("psi", v)], {"psi": psi(ring, n)})
        assert eval_word(vaserstein_to_se(w)) == eval_word(w)


def test_uncorrected_product_differs_on_dense_vector():
    n = 2
    fd = extract_form_data(psi(QQ, n))
    v = (QQ(1), QQ(2), QQ(3))
    plain = product(QQ, 4, [dense_se(QQ, n, i, 1, v[i - 2]) for i in range(2, 5)])
    assert C_of(fd, v) != plain


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_factor_sp_round_trip(ring, n):
    rng = random.Random(10 * n)
    for length in (0, 1, 5, 20):
        S = eval_word(random_se_word(ring, n, length, rng))
        w = factor_sp(S)
        assert all(isinstance(g, SymSE) for g in w.gens)
        assert eval_word(w) == S


def test_factor_sp_unit_diagonal():
    # a symplectic diagonal matrix with non-trivial unit entries
    S = psi(QQ, 2).map(lambda x: x, QQ)
    D = S.__class__(QQ, [[2, 0, 0, 0], [0, "1/2", 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    assert is_symplectic(D, psi(QQ, 2))
    assert eval_word(factor_sp(D)) == D


def test_factor_sp_rejects_non_symplectic():
    S = psi(QQ, 2).__class__(QQ, [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(HypothesisError):
        factor_sp(S)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_relativize_and_substitute(ring):
    rng = random.Random(12)
    P = PolynomialRing(ring)
    for n in (1, 2):
        for _ in range(5):
            w = random_vanishing_poly_word(ring, n, rng)
            rel = relativize_polynomial_word(w)
            assert all(isinstance(g, Conj) for g in rel.gens)
            assert eval_word(rel) == eval_word(w)
            assert word_in_ideal(rel, IdealSpec(P.gen()))
            a = ring.random(rng, 2)
            sub = substitute_word(rel, a)
            value = eval_word(sub)
            assert value == specialize(eval_word(w), a)
            assert word_in_ideal(sub, IdealSpec(a))
            assert is_congruent_identity(value, IdealSpec(a))


def test_relativize_single_generator():
    P = PolynomialRing(QQ)
    X = P.gen()
    w = GeneratorWord(P, 4, [SymSE(2, 1, X)])
    rel = relativize_polynomial_word(w)
    assert len(rel) == 1 and len(rel.gens[0].outer) == 0
    assert rel.gens[0].inner == SymSE(2, 1, X)


def test_relativize_rejects_word_not_trivial_at_zero():
    P = PolynomialRing(QQ)
    w = GeneratorWord(P, 4, [SymSE(2, 1, P.one() + P.gen())])
    with pytest.raises(HypothesisError) as info:
        relativize_polynomial_word(w)
    assert info.value.stage == "relativize"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(TWO_UNIT), st.integers(2, 3))
def test_border_rewriting_property(seed, ring, n):
    rng = random.Random(seed)
    i, j = rng.sample(range(1, 2 * n + 1), 2)
    a = ring.random(rng, 3)
    assert eval_word(rewrite_to_border(SymSE(i, j, a), n)) == se(i, j, a, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(RINGS))
def test_factor_sp_property(seed, ring):
    rng = random.Random(seed)
    S = eval_word(random_se_word(ring, 2, rng.randint(0, 15), rng))
    assert eval_word(factor_sp(S)) == S
