"""Seeded random instances: words, Pfaffian-1 forms, symplectic matrices.

All generators take an explicit ``random.Random`` so results are
reproducible from a seed.
"""

from __future__ import annotations

import random

from .forms import psi
from .matrices import Matrix, block_perp
from .rings import PolynomialRing, RingElement, RingSpec
from .words import GeneratorWord, LinE, SymSE, eval_word, invert_word

PRNG_NAME = "python-random-MT19937"


def nonzero(ring: RingSpec, rng: random.Random, size: int = 2) -> RingElement:
    while True:
        x = ring.random(rng, size)
        if x:
            return x


def random_se_word(ring: RingSpec, n: int, length: int, rng: random.Random, size: int = 2) -> GeneratorWord:
    dim = 2 * n
    gens = []
    for _ in range(length):
        i, j = rng.sample(range(1, dim + 1), 2)
        gens.append(SymSE(i, j, nonzero(ring, rng, size)))
    return GeneratorWord(ring, dim, gens)


def random_lin_word(ring: RingSpec, dim: int, length: int, rng: random.Random, size: int = 2) -> GeneratorWord:
    gens = []
    if dim < 2:
        # E_1(R) is trivial
        return GeneratorWord(ring, dim, gens)
    for _ in range(length):
        i, j = rng.sample(range(1, dim + 1), 2)
        gens.append(LinE(i, j, nonzero(ring, rng, size)))
    return GeneratorWord(ring, dim, gens)


def random_pf1_form(ring: RingSpec, n: int, rng: random.Random, length: int = 6, size: int = 2) -> Matrix:
    """``(1 + eps)^t psi_n (1 + eps)`` for a random elementary ``eps``."""
    eps = eval_word(random_lin_word(ring, 2 * n - 1, length, rng, size))
    E = block_perp(Matrix.identity(ring, 1), eps)
    return E.T @ psi(ring, n) @ E


def random_sp_phi(
    ring: RingSpec, n: int, rng: random.Random, length: int = 10, size: int = 2
) -> tuple[Matrix, Matrix]:
    """A Pfaffian-1 form ``phi`` and a random ``G`` preserving it."""
    eps_word = random_lin_word(ring, 2 * n - 1, 6, rng, size)
    E = block_perp(Matrix.identity(ring, 1), eval_word(eps_word))
    Einv = block_perp(Matrix.identity(ring, 1), eval_word(invert_word(eps_word)))
    phi = E.T @ psi(ring, n) @ E
    S = eval_word(random_se_word(ring, n, length, rng, size))
    return Einv @ S @ E, phi


def random_unimodular(ring: RingSpec, dim: int, rng: random.Random, length: int = 8, size: int = 2) -> list[RingElement]:
    """``e_1`` scrambled by a random elementary word (as a column vector)."""
    M = eval_word(random_lin_word(ring, dim, length, rng, size))
    return list(M.col(0))


def random_skew(ring: RingSpec, size: int, rng: random.Random, entry_size: int = 3) -> Matrix:
    z = ring.zero()
    rows = [[z] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            x = ring.random(rng, entry_size)
            rows[i][j] = x
            rows[j][i] = -x
    return Matrix._trusted(ring, rows)


def random_vanishing_poly_word(
    ring: RingSpec, n: int, rng: random.Random, length: int = 4, size: int = 2, degree: int = 2
) -> GeneratorWord:
    """A word over ``ring[X]`` whose value at ``X = 0`` is the identity.

    Constant parts form ``u * u^-1`` for a random word ``u``; each parameter
    then gets a random multiple of ``X`` added.
    """
    P = PolynomialRing(ring)
    base = random_se_word(ring, n, length, rng, size)
    consts = base.gens + invert_word(base).gens
    gens = []
    for g in consts:
        coeffs = [g.a.v] + [ring.random_raw(rng, size) for _ in range(rng.randint(0, degree))]
        gens.append(SymSE(g.i, g.j, RingElement(P, P._trim(coeffs))))
    # a few purely relative factors as well
    for _ in range(rng.randint(0, 2)):
        i, j = rng.sample(range(1, 2 * n + 1), 2)
        coeffs = [ring.raw_zero()] + [ring.random_raw(rng, size) for _ in range(rng.randint(1, degree))]
        gens.insert(rng.randrange(len(gens) + 1), SymSE(i, j, RingElement(P, P._trim(coeffs))))
    return GeneratorWord(P, 2 * n, gens)
