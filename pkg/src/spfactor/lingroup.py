"""Elementary linear group: unimodular vectors and row transvections."""

from __future__ import annotations

from typing import Sequence

from .errors import HypothesisError
from .rings import RingElement, RingSpec
from .words import GeneratorWord, LinE


class NotUnimodularError(HypothesisError):
    """The entries of a vector do not generate the unit ideal."""

    def __init__(self, message: str):
        super().__init__("um_to_e1", message)


def um_to_e1(a: Sequence[RingElement], ring: RingSpec | None = None) -> GeneratorWord:
    """Find an elementary word ``beta`` with ``a^t . eval(beta) = e_1^t``.

    Column operations ``entry_j += t * entry_i`` are recorded as
    ``LinE(i, j, t)`` (right multiplication).  Euclidean descent on the
    smallest-norm entry collapses the vector onto its gcd; a non-unit gcd
    means ``a`` was not unimodular.
    """
    if ring is None:
        if not a:
            raise ValueError("empty vector")
        ring = a[0].ring
    x = [ring(v) for v in a]
    n = len(x)
    if n < 2:
        raise ValueError("um_to_e1 needs a vector of length >= 2")
    if not ring.euclidean:
        raise ArithmeticError(f"{ring.name} is not a euclidean domain")
    gens: list[LinE] = []

    def op(i: int, j: int, t: RingElement) -> None:
        # entry j += t * entry i   (0-based here, 1-based in the generator)
        if t:
            x[j] = x[j] + t * x[i]
            gens.append(LinE(i + 1, j + 1, t))

    while True:
        nonzero = [k for k in range(n) if x[k]]
        if not nonzero:
            raise NotUnimodularError("zero vector is not unimodular")
        if len(nonzero) == 1:
            break
        piv = min(nonzero, key=lambda k: (x[k].norm(), k))
        for k in nonzero:
            if k != piv:
                q, _ = ring.div_rem(x[k].v, x[piv].v)
                op(piv, k, -RingElement(ring, q))

    k = nonzero[0]
    u = x[k]
    if not ring.is_unit(u.v):
        raise NotUnimodularError(f"gcd of entries is {u}, not a unit")
    uinv = RingElement(ring, ring.inverse(u.v))
    if k != 0:
        op(k, 0, uinv)
        op(0, k, -u)
    elif u != ring.one():
        op(0, 1, uinv)
        op(1, 0, ring.one() - u)
        op(0, 1, -ring.one())
    return GeneratorWord(ring, n, gens)


def row_transvection_word(i: int, t: Sequence[RingElement | None], n: int) -> GeneratorWord:
    """Word for ``I_n + sum_{j != i} t_j e_ij`` (1-based ``i``; ``t`` indexed 0..n-1).

    ``t[i-1]`` is ignored.  The factors commute, so their order is free.
    """
    if not 1 <= i <= n:
        raise IndexError(f"row index {i} out of range for size {n}")
    if len(t) != n:
        raise ValueError(f"expected {n} entries, got {len(t)}")
    ring = next((x.ring for x in t if x is not None), None)
    if ring is None:
        raise ValueError("cannot infer the ring from an all-None vector")
    gens = [LinE(i, j + 1, ring(x)) for j, x in enumerate(t) if j != i - 1 and x is not None and x]
    return GeneratorWord(ring, n, gens)
