"""Standard-form side: elementary symplectic generators and factorizations.

Everything here is relative to the standard form ``psi_n``.  Generator
indices are 1-based; the commutator convention is
``[x, y] = x y x^-1 y^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisError
from .forms import psi, se_matrix, se_sign, sigma
from .matrices import Matrix, is_symplectic
from .rings import PolynomialRing, RingElement, RingSpec, halve
from .words import (
    Conj,
    Generator,
    GeneratorWord,
    LinE,
    SymSE,
    VasC,
    VasR,
    eval_word,
    invert_generator,
    invert_word,
    map_params,
)

__all__ = [
    "IdentityCheck",
    "check_identity",
    "pair_correction",
    "factor_sp",
    "psi",
    "relabel",
    "relative_border_parts",
    "relativize_polynomial_word",
    "rewrite_to_border",
    "border_to_vaserstein",
    "se",
    "se_gen",
    "sigma",
    "specialize",
    "substitute_word",
    "vaserstein_se_factors",
    "vaserstein_to_se",
]


def se(i: int, j: int, a: RingElement, n: int) -> Matrix:
    """The elementary symplectic matrix se_ij(a) of size 2n."""
    return se_matrix(a.ring, n, i, j, a)


def se_gen(i: int, j: int, a: RingElement) -> SymSE:
    return SymSE(i, j, a)


def se_commutator(g: SymSE, h: SymSE, n: int) -> Matrix:
    """``[g, h]`` evaluated with ``se_ij(a)^-1 = se_ij(-a)``."""
    x, y = se(g.i, g.j, g.a, n), se(h.i, h.j, h.a, n)
    return x @ y @ se(g.i, g.j, -g.a, n) @ se(h.i, h.j, -h.a, n)


def _commutator_gens(g: Generator, h: Generator) -> list[Generator]:
    return [g, h, invert_generator(g), invert_generator(h)]


# -- commutator identities ----------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of :func:`check_identity`; truthy iff both sides agree."""

    pattern: str
    holds: bool
    lhs: Matrix
    rhs: Matrix

    def __bool__(self) -> bool:
        return self.holds


def check_identity(pattern: str, a: RingElement, b: RingElement, i: int, j: int, k: int, n: int) -> IdentityCheck:
    """Verify one of the three commutator identities as a matrix equation.

    ``"pair"``:    [se_{i s(i)}(a), se_{s(i) j}(b)] = se_ij(ab) se_{s(j) j}((-1)^{i+j} a b^2),
                   for i != j, s(j); ``k`` unused.
    ``"generic"``: [se_ik(a), se_kj(b)] = se_ij(ab), for i != j, s(j) and k not in {i, j, s(i), s(j)}.
    ``"double"``:  [se_ik(a), se_{k s(i)}(b)] = se_{i s(i)}(2ab), for k not in {i, s(i)}; ``j`` unused.
    """
    ring = a.ring
    b = ring(b)
    dim = 2 * n
    idx = [i] if pattern == "double" else [i, j]
    if pattern != "pair":
        idx.append(k)
    if any(not 1 <= t <= dim for t in idx):
        raise ValueError(f"indices {idx} out of range for n={n}")
    if pattern == "pair":
        if i == j or i == sigma(j):
            raise ValueError("pair identity needs i != j, sigma(j)")
        lhs = se_commutator(SymSE(i, sigma(i), a), SymSE(sigma(i), j, b), n)
        rhs = se(i, j, a * b, n) @ se(sigma(j), j, se_sign(i, j) * (a * b * b), n)
    elif pattern == "generic":
        if i == j or i == sigma(j):
            raise ValueError("generic identity needs i != j, sigma(j)")
        if k in (i, j, sigma(i), sigma(j)):
            raise ValueError("generic identity needs k not in {i, j, sigma(i), sigma(j)}")
        lhs = se_commutator(SymSE(i, k, a), SymSE(k, j, b), n)
        rhs = se(i, j, a * b, n)
    elif pattern == "double":
        if k in (i, sigma(i)):
            raise ValueError("double identity needs k not in {i, sigma(i)}")
        lhs = se_commutator(SymSE(i, k, a), SymSE(k, sigma(i), b), n)
        rhs = se(i, sigma(i), 2 * a * b, n)
    else:
        raise ValueError(f"unknown identity pattern {pattern!r}")
    return IdentityCheck(pattern, lhs == rhs, lhs, rhs)


# -- border rewriting -----------------------------------------------------------


def relabel(g: SymSE) -> SymSE:
    """Same matrix, other name: se_ij(a) = se_{s(j) s(i)}(-(-1)^{i+j} a) when i != s(j)."""
    if g.i == sigma(g.j):
        return g
    return SymSE(sigma(g.j), sigma(g.i), -g.a if se_sign(g.i, g.j) > 0 else g.a)


def _is_border(g: SymSE) -> bool:
    return g.i == 1 or g.j == 1


def relative_border_parts(g: SymSE, dim: int) -> list[Generator]:
    """Border expression of ``g`` that keeps ``g``'s parameter in relative position.

    Returns bare border generators and ``Conj`` wrappers whose conjugators
    are border words with unit parameters; every inner parameter is a
    multiple of ``g.a`` (half of it for the pair case).
    """
    if _is_border(g):
        return [g]
    if g.i == 2 or g.j == 2:
        return [relabel(g)]
    one = g.a.ring.one()
    if g.i != sigma(g.j):
        x, h = SymSE(g.i, 1, g.a), SymSE(1, g.j, one)
    else:
        x, h = SymSE(g.i, 1, halve(g.a)), SymSE(1, sigma(g.i), one)
    # [x, h] = x . (h x^-1 h^-1)
    return [x, Conj(GeneratorWord(g.a.ring, dim, [h]), invert_generator(x))]


def _border_gens(g: SymSE) -> list[SymSE]:
    if _is_border(g):
        return [g]
    if g.i == 2 or g.j == 2:
        return [relabel(g)]
    one = g.a.ring.one()
    if g.i != sigma(g.j):
        return _commutator_gens(SymSE(g.i, 1, g.a), SymSE(1, g.j, one))  # type: ignore[return-value]
    return _commutator_gens(SymSE(g.i, 1, halve(g.a)), SymSE(1, sigma(g.i), one))  # type: ignore[return-value]


def rewrite_to_border(g: SymSE, n: int) -> GeneratorWord:
    """Rewrite se_ij(a) as a word in se_1k / se_k1 only.

    Uses the generic identity with k = 1 for i, j not in {1, 2},
    the double identity (and halving) for i = sigma(j), and the
    index relabeling for generators touching index 2.
    """
    ring = g.a.ring
    if n < 2:
        raise HypothesisError("border", "border rewriting needs n >= 2")
    if not ring.two_is_unit():
        raise HypothesisError("border", f"2 is not a unit in {ring.name} (R = 2R fails)")
    if not g.a:
        return GeneratorWord(ring, 2 * n)
    word = GeneratorWord(ring, 2 * n, _border_gens(g))
    if eval_word(word) != se(g.i, g.j, g.a, n):
        raise AssertionError(f"border rewriting of {g} failed to re-evaluate")
    return word


def border_to_vaserstein(w: GeneratorWord, form: str = "psi") -> GeneratorWord:
    """Map se_k1(a) -> C(a e_{k-1}) and se_1k(a) -> R(a e_{k-1}) on the standard form."""
    ring, dim = w.ring, w.dim
    zero = ring.zero()

    def vec(k: int, a: RingElement) -> tuple[RingElement, ...]:
        v = [zero] * (dim - 1)
        v[k - 2] = a
        return tuple(v)

    def go(g: Generator) -> Generator:
        if isinstance(g, SymSE):
            if g.j == 1:
                return VasC(form, vec(g.i, g.a))
            if g.i == 1:
                return VasR(form, vec(g.j, g.a))
            raise ValueError(f"{g} is not a border generator")
        if isinstance(g, Conj):
            return Conj(border_to_vaserstein(g.outer, form), go(g.inner))
        if isinstance(g, (VasC, VasR)):
            return g
        raise TypeError(f"cannot map {g!r} to a bordered generator")

    forms = dict(w.forms)
    forms.setdefault(form, psi(ring, dim // 2))
    return GeneratorWord(ring, dim, [go(g) for g in w.gens], forms)


def pair_correction(v: Sequence[RingElement]) -> RingElement:
    """``sum_t a_{2t} a_{2t+1}`` for ``v = (a_1, ..., a_{2n-1})``."""
    k = v[0].ring.zero()
    for t in range(1, (len(v) + 1) // 2):
        k = k + v[2 * t - 1] * v[2 * t]
    return k


def vaserstein_se_factors(g: VasC | VasR) -> list[SymSE]:
    """se factors of a standard-form ``C_psi(v)`` or ``R_psi(v)``."""
    v = g.v
    k = pair_correction(v)
    if isinstance(g, VasC):
        head = [SymSE(2, 1, v[0] + k)]
        tail = [SymSE(i, 1, a) for i, a in enumerate(v[1:], start=3)]
    else:
        head = [SymSE(1, 2, v[0] - k)]
        tail = [SymSE(1, i, a) for i, a in enumerate(v[1:], start=3)]
    return [h for h in head + tail if h.a]


def vaserstein_to_se(w: GeneratorWord) -> GeneratorWord:
    """Expand standard-form bordered generators into se generators.

    With ``k = sum_{t=1}^{n-1} a_{2t} a_{2t+1}``:
    ``C_psi(v) = se_21(a_1 + k) prod_{i=3}^{2n} se_i1(a_{i-1})`` and
    ``R_psi(v) = se_12(a_1 - k) prod_{i=3}^{2n} se_1i(a_{i-1})``.
    The plain products without the ``k`` correction differ from
    ``C_psi(v)``, ``R_psi(v)`` as soon as some pair ``(a_{2t}, a_{2t+1})``
    is nonzero, because ``se_{2t+1,1}`` and ``se_{2t+2,1}`` do not commute.
    """
    ring, dim = w.ring, w.dim
    std = psi(ring, dim // 2)
    out: list[Generator] = []

    def expand(g: Generator) -> list[Generator]:
        if isinstance(g, (VasC, VasR)):
            if w.forms.get(g.form) != std:
                raise ValueError(f"form {g.form!r} is not the standard form")
            return vaserstein_se_factors(g)
        if isinstance(g, (SymSE, LinE)):
            return [g]
        if isinstance(g, Conj):
            outer = vaserstein_to_se(GeneratorWord(ring, dim, g.outer.gens, w.forms))
            outer = GeneratorWord(ring, dim, outer.gens)
            return [Conj(outer, h) for h in expand(g.inner)]
        raise TypeError(f"unknown generator {g!r}")

    for g in w.gens:
        out.extend(expand(g))
    return GeneratorWord(ring, dim, out)


# -- Sp_2n factorization ----------------------------------------------------------


def factor_sp(S: Matrix) -> GeneratorWord:
    """Factor a standard-symplectic matrix over a euclidean domain into se generators.

    Clears one hyperbolic pair at a time with left multiplications: euclidean
    descent inside each pair, then across pairs through the odd coordinates
    (whose side effects land on already-zero even coordinates), unit
    normalization of the pivot, then the companion column.  The recorded
    generators, each inverted, form the word.  The result is certified by
    re-multiplication.
    """
    ring = S.ring
    if not S.is_square() or S.nrows % 2:
        raise HypothesisError("factor_sp", "matrix must be square of even size")
    if not ring.euclidean:
        raise HypothesisError("factor_sp", f"{ring.name} is not a euclidean domain")
    dim = S.nrows
    n = dim // 2
    if not is_symplectic(S, psi(ring, n)):
        raise HypothesisError("factor_sp", "matrix is not symplectic for the standard form")

    rows = [list(r) for r in S.rows]
    applied: list[SymSE] = []

    def left(i: int, j: int, a: RingElement) -> None:
        # rows <- se_ij(a) * rows (1-based i, j)
        if not a:
            return
        ri, rj = rows[i - 1], rows[j - 1]
        rows[i - 1] = [x + a * y for x, y in zip(ri, rj)]
        if i != sigma(j):
            c = -a if se_sign(i, j) > 0 else a
            rs, rsi = rows[sigma(j) - 1], rows[sigma(i) - 1]
            rows[sigma(j) - 1] = [x + c * y for x, y in zip(rs, rsi)]
        applied.append(SymSE(i, j, a))

    def quo(x: RingElement, y: RingElement) -> RingElement:
        return RingElement(ring, ring.div_rem(x.v, y.v)[0])

    def euclid(p: int, q: int, col: int, up, down) -> None:
        # drive entry q of column col to zero; up(t): x_p += t x_q, down(t): x_q += t x_p
        while True:
            xp, xq = rows[p - 1][col], rows[q - 1][col]
            if not xq:
                return
            if not xp:
                up(ring.one())
                continue
            if xp.norm() <= xq.norm():
                down(-quo(xq, xp))
            else:
                up(-quo(xp, xq))

    for blk in range(n):
        p, q = 2 * blk + 1, 2 * blk + 2
        col = p - 1
        # 1. inside each remaining pair, gather onto the odd coordinate
        for r in range(p, dim + 1, 2):
            euclid(r, r + 1, col, lambda t, r=r: left(r, r + 1, t), lambda t, r=r: left(r + 1, r, t))
        # 2. across pairs through odd coordinates
        for r in range(p + 2, dim + 1, 2):
            euclid(p, r, col, lambda t, r=r: left(p, r, t), lambda t, r=r: left(r, p, t))
        u = rows[p - 1][col]
        if any(rows[k][col] for k in range(dim) if k != p - 1):
            raise AssertionError("column reduction left stray entries")
        if not ring.is_unit(u.v):
            raise HypothesisError("factor_sp", f"pivot {u} is not a unit; matrix is not invertible")
        # 3. normalize the unit pivot to 1
        one = ring.one()
        if u != one:
            left(q, p, RingElement(ring, ring.inverse(u.v)))
            left(p, q, one - u)
            left(q, p, -one)
        # 4. companion column: its q-entry is forced to 1 by the form
        ccol = q - 1
        if rows[q - 1][ccol] != one:
            raise AssertionError("symplectic companion entry is not 1")
        for m in range(q + 1, dim + 1):
            y = rows[m - 1][ccol]
            if y:
                left(m, q, -y)
        y = rows[p - 1][ccol]
        if y:
            left(p, q, -y)

    if not Matrix._trusted(ring, rows).is_identity():
        raise AssertionError("factor_sp did not reach the identity")
    word = GeneratorWord(ring, dim, [SymSE(g.i, g.j, -g.a) for g in applied])
    if eval_word(word) != S:
        raise AssertionError("factor_sp certificate failed")
    return word


# -- relative words over R[X] -------------------------------------------------------


def specialize(m: Matrix, a) -> Matrix:
    """Evaluate every polynomial entry of ``m`` at ``X = a``."""
    P = m.ring
    if not isinstance(P, PolynomialRing):
        raise TypeError("specialize needs a matrix over a polynomial ring")
    a = P.base(a)
    return m.map(lambda x: RingElement(P.base, P.evaluate(x.v, a.v)), P.base)


def substitute_word(w: GeneratorWord, a) -> GeneratorWord:
    """Evaluate every polynomial parameter (and form entry) at ``X = a``."""
    P = w.ring
    if not isinstance(P, PolynomialRing):
        raise TypeError("substitute_word needs a word over a polynomial ring")
    a = P.base(a)
    return map_params(w, lambda x: RingElement(P.base, P.evaluate(x.v, a.v)), P.base)


def relativize_polynomial_word(w: GeneratorWord) -> GeneratorWord:
    """Rewrite a word over R[X] that is the identity at X = 0 as a relative word.

    Each parameter splits as ``v_k = u_k + X w_k(X)`` (``u_k`` the constant
    term); the output is ``prod_k Conj(gamma_k, g_k(X w_k))`` with
    ``gamma_k = prod_{s <= k} g_s(u_s)``.
    """
    P = w.ring
    if not isinstance(P, PolynomialRing):
        raise TypeError("relativize needs a word over a polynomial ring")
    for g in w.gens:
        if not isinstance(g, (SymSE, LinE)):
            raise TypeError(f"relativize handles elementary generators only, got {g!r}")
    if not eval_word(substitute_word(w, P.base.zero())).is_identity():
        raise HypothesisError("relativize", "word does not evaluate to I at X = 0")
    out: list[Generator] = []
    prefix: list[Generator] = []
    for g in w.gens:
        u = P.constant(RingElement(P.base, P.constant_term(g.a.v)))
        if u:
            prefix.append(type(g)(g.i, g.j, u))
        rest = g.a - u
        if rest:
            out.append(Conj(GeneratorWord(P, w.dim, prefix), type(g)(g.i, g.j, rest)))
    return GeneratorWord(P, w.dim, out, w.forms)
