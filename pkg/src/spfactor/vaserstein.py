"""Arbitrary Pfaffian-1 forms: reduction to the standard form and the
decomposition pipelines into bordered generators ``C_phi`` / ``R_phi``.

Block convention throughout: ``phi = [[0, -c^t], [c, nu]]`` and
``phi^-1 = [[0, d^t], [-d, mu]]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError
from .forms import FormData, C_of, R_of, alpha_of, beta_of, extract_form_data, psi
from .lingroup import NotUnimodularError, row_transvection_word, um_to_e1
from .matrices import (
    IdealSpec,
    Matrix,
    block_perp,
    inverse_unit_det,
    is_congruent_identity,
    is_symplectic,
    pfaffian,
)
from .rings import PolynomialRing, RingElement, RingSpec
from .symplectic import (
    border_to_vaserstein,
    factor_sp,
    relative_border_parts,
    relativize_polynomial_word,
    rewrite_to_border,
    specialize,
    substitute_word,
    vaserstein_to_se,
)
from .words import (
    Conj,
    Generator,
    GeneratorWord,
    LinE,
    SymSE,
    VasC,
    VasR,
    eval_word,
    invert_word,
    map_params,
    word_from_json,
    word_in_ideal,
    word_to_json,
)

__all__ = [
    "FormData",
    "ReductionCertificate",
    "C_of",
    "R_of",
    "alpha_of",
    "beta_of",
    "conjugate_word",
    "decompose_relative",
    "decompose_sp_phi",
    "extract_form_data",
    "reduce_form",
    "transport_identities_hold",
]


@dataclass(frozen=True)
class ReductionCertificate:
    """``(1 + eps)^t psi_n (1 + eps) == phi`` with ``eps = eval(epsilon_word)``."""

    phi: Matrix
    epsilon_word: GeneratorWord

    @property
    def ring(self) -> RingSpec:
        return self.phi.ring

    @property
    def n(self) -> int:
        return self.phi.nrows // 2

    def epsilon(self) -> Matrix:
        return eval_word(self.epsilon_word)

    def epsilon_inv(self) -> Matrix:
        return eval_word(invert_word(self.epsilon_word))

    def border(self) -> Matrix:
        """The congruating matrix ``1 (+) eps``."""
        return block_perp(Matrix.identity(self.ring, 1), self.epsilon())

    def border_inv(self) -> Matrix:
        return block_perp(Matrix.identity(self.ring, 1), self.epsilon_inv())

    def verify(self) -> bool:
        E = self.border()
        return E.T @ psi(self.ring, self.n) @ E == self.phi

    def to_json(self) -> dict:
        return {"phi": self.phi.to_json(), "epsilon_word": word_to_json(self.epsilon_word)}

    @classmethod
    def from_json(cls, obj: dict) -> "ReductionCertificate":
        phi = Matrix.from_json(obj["phi"])
        return cls(phi, word_from_json(obj["epsilon_word"], ring=phi.ring))

    def lift(self, ring: PolynomialRing) -> "ReductionCertificate":
        """The same certificate with entries embedded as constants of ``ring``."""
        if ring.base != self.ring:
            raise ValueError(f"cannot lift a {self.ring.name} certificate to {ring.name}")
        return ReductionCertificate(
            self.phi.map(ring.constant, ring),
            map_params(self.epsilon_word, ring.constant, ring),
        )


# -- reduction of Pfaffian-1 forms --------------------------------------------


def _shift(word: GeneratorWord, by: int, dim: int) -> GeneratorWord:
    return GeneratorWord(word.ring, dim, [LinE(g.i + by, g.j + by, g.a) for g in word.gens])


def _transpose_transvection(word: GeneratorWord) -> GeneratorWord:
    # factors of a single-row transvection commute, so the transpose is factorwise
    return word.with_gens(LinE(g.j, g.i, g.a) for g in word.gens)


def _reduce(phi: Matrix) -> GeneratorWord:
    ring = phi.ring
    m = phi.nrows
    if m == 2:
        if phi != psi(ring, 1):
            raise HypothesisError("reduce_form", "2x2 block is not the standard form")
        return GeneratorWord(ring, 1)
    # first row of phi is (0, -c^t); send -c to e_1
    minus_c = [-x for x in phi.col(0)[1:]]
    try:
        beta = um_to_e1(minus_c, ring)
    except NotUnimodularError as exc:
        raise HypothesisError("reduce_form", f"first column is not unimodular: {exc}") from exc
    one = Matrix.identity(ring, 1)
    E1 = block_perp(one, eval_word(beta))
    phi1 = E1.T @ phi @ E1
    tail = list(range(2, m))
    d = Matrix._trusted(ring, [[phi1[1, k]] for k in tail])
    phi_star = phi1.submatrix(tail, tail)
    w = inverse_unit_det(phi_star) @ d
    # P = I + sum_k w_k e_{1,k+1}; the congruating block is P^t
    P = row_transvection_word(1, [None] + [w[k, 0] for k in range(m - 2)], m - 1)
    g = _transpose_transvection(P)
    Eg = block_perp(one, eval_word(g))
    phi2 = Eg.T @ phi1 @ Eg
    # the (1,1) correction d^t phi*^-1 d is x^t A x for skew A, hence 0
    if phi2 != block_perp(psi(ring, 1), phi_star):
        raise AssertionError("clearing block did not split off a hyperbolic pair")
    gamma = _reduce(phi_star)
    return _shift(gamma, 2, m - 1) + invert_word(g) + invert_word(beta)


def reduce_form(phi: Matrix) -> ReductionCertificate:
    """Find an elementary ``eps`` with ``phi = (1 + eps)^t psi_n (1 + eps)``."""
    ring = phi.ring
    if not phi.is_square() or phi.nrows % 2:
        raise HypothesisError("reduce_form", "form must be square of even size")
    if not phi.is_skew_symmetric():
        raise HypothesisError("reduce_form", "form is not skew-symmetric")
    if not ring.euclidean:
        raise HypothesisError("reduce_form", f"{ring.name} is not a euclidean domain")
    pf = pfaffian(phi)
    if pf != ring.one():
        raise HypothesisError("pfaffian", f"Pfaffian is {pf}, expected 1")
    cert = ReductionCertificate(phi, _reduce(phi))
    if not cert.verify():
        raise AssertionError("reduction certificate failed to verify")
    return cert


def transport_identities_hold(cert: ReductionCertificate) -> bool:
    """Check how the block data moves under the certificate congruence.

    ``c_phi = eps^t c_psi``, ``d_phi = eps^-1 d_psi``,
    ``nu_phi = eps^t nu_psi eps``, ``mu_phi = eps^-1 mu_psi eps^-t``.
    """
    fp = extract_form_data(psi(cert.ring, cert.n))
    ff = extract_form_data(cert.phi)
    e, ei = cert.epsilon(), cert.epsilon_inv()
    return (
        e.T @ fp.c_col() == ff.c_col()
        and ei @ fp.d_col() == ff.d_col()
        and e.T @ fp.nu @ e == ff.nu
        and ei @ fp.mu @ ei.T == ff.mu
    )


# -- conjugation between the two sides -------------------------------------------


def conjugate_word(
    w: GeneratorWord,
    cert: ReductionCertificate,
    direction: str = "psi_to_phi",
    target: str | None = None,
) -> GeneratorWord:
    """Conjugate a bordered-generator word between ``psi_n`` and ``phi``.

    ``psi_to_phi`` returns a word for ``(1+eps)^-1 eval(w) (1+eps)``:
    ``C_psi(v) -> C_phi(eps^-1 v)`` and ``R_psi(v) -> R_phi(eps^t v)``.
    ``phi_to_psi`` is the inverse map.  ``Conj`` generators are handled
    componentwise.
    """
    ring = w.ring
    if cert.ring != ring:
        if isinstance(ring, PolynomialRing) and ring.base == cert.ring:
            cert = cert.lift(ring)
        else:
            raise ValueError(f"certificate over {cert.ring.name}, word over {ring.name}")
    std = psi(ring, cert.n)
    e, ei = cert.epsilon(), cert.epsilon_inv()
    if direction == "psi_to_phi":
        source, target_form = std, cert.phi
        target = target or "phi"
        col_map, row_map = ei, e.T
    elif direction == "phi_to_psi":
        source, target_form = cert.phi, std
        target = target or "psi"
        col_map, row_map = e, ei.T
    else:
        raise ValueError(f"unknown direction {direction!r}")

    def vec(mat: Matrix, v) -> tuple[RingElement, ...]:
        col = mat @ Matrix._trusted(ring, [[x] for x in v])
        return col.col(0)

    def go(g: Generator, forms) -> Generator:
        if isinstance(g, (VasC, VasR)):
            if forms.get(g.form) != source:
                raise ValueError(f"form mismatch: generator form {g.form!r} is not the source form")
            if isinstance(g, VasC):
                return VasC(target, vec(col_map, g.v))
            return VasR(target, vec(row_map, g.v))
        if isinstance(g, Conj):
            outer_forms = {**forms, **g.outer.forms}
            outer = GeneratorWord(ring, w.dim, [go(h, outer_forms) for h in g.outer.gens])
            return Conj(outer, go(g.inner, forms))
        raise ValueError(f"conjugate_word needs bordered generators, got {g!r}")

    return GeneratorWord(ring, w.dim, [go(g, w.forms) for g in w.gens], {target: target_form})


# -- pipelines ------------------------------------------------------------------------


def decompose_sp_phi(G: Matrix, phi: Matrix) -> GeneratorWord:
    """Write ``G`` in ``Sp_phi(R)`` as a word in ``C_phi`` / ``R_phi``.

    Stages: reduce_form, conjugate to the standard side, factor_sp,
    border rewriting (needs 2 invertible), bordered generators on the
    standard form, conjugate back.  The result is certified.
    """
    ring = G.ring
    if phi.ring != ring:
        raise HypothesisError("input", "matrix and form live in different rings")
    if not G.is_square() or G.shape != phi.shape or G.nrows % 2:
        raise HypothesisError("input", "matrix and form must be square of the same even size")
    n = G.nrows // 2
    if n < 2:
        raise HypothesisError("input", "the decomposition needs n >= 2")
    cert = reduce_form(phi)
    if not is_symplectic(G, phi):
        raise HypothesisError("symplectic", "matrix does not preserve the form")
    H = cert.border() @ G @ cert.border_inv()
    se_word = factor_sp(H)
    if not ring.two_is_unit():
        raise HypothesisError(
            "border", f"2 is not a unit in {ring.name} (R = 2R fails)", partial=se_word
        )
    border = GeneratorWord(ring, 2 * n)
    for g in se_word.gens:
        border = border + rewrite_to_border(g, n)
    psi_word = border_to_vaserstein(border, "psi")
    out = conjugate_word(psi_word, cert, "psi_to_phi")
    if eval_word(out) != G:
        raise AssertionError("decomposition failed to re-evaluate")
    return out


def _side_of(w: GeneratorWord) -> str:
    kinds = set()
    for g in w.gens:
        while isinstance(g, Conj):
            g = g.inner
        kinds.add("phi" if isinstance(g, (VasC, VasR)) else "psi")
    if len(kinds) > 1:
        raise ValueError("word mixes elementary and bordered generators")
    return kinds.pop() if kinds else "psi"


def _relative_to_vaserstein(w: GeneratorWord) -> GeneratorWord:
    """Relative se word (Conj of se) -> relative word of standard-form bordered generators."""
    ring, dim = w.ring, w.dim
    n = dim // 2

    def border_word(word: GeneratorWord) -> GeneratorWord:
        out = GeneratorWord(ring, dim)
        for g in word.gens:
            out = out + rewrite_to_border(g, n)
        return border_to_vaserstein(out)

    gens: list[Generator] = []
    for g in w.gens:
        outer = GeneratorWord(ring, dim)
        inner = g
        if isinstance(g, Conj):
            outer, inner = g.outer, g.inner
        if not isinstance(inner, SymSE):
            raise TypeError(f"expected elementary symplectic generators, got {inner!r}")
        outer_v = border_word(outer)
        for part in relative_border_parts(inner, dim):
            if isinstance(part, Conj):
                conj = outer_v + border_to_vaserstein(part.outer)
                gens.append(Conj(GeneratorWord(ring, dim, conj.gens), _bordered(part.inner, dim)))
            else:
                gens.append(Conj(GeneratorWord(ring, dim, outer_v.gens), _bordered(part, dim)))
    return GeneratorWord(ring, dim, gens, {"psi": psi(ring, n)})


def _bordered(g: SymSE, dim: int) -> Generator:
    word = border_to_vaserstein(GeneratorWord(g.a.ring, dim, [g]))
    return word.gens[0]


def decompose_relative(
    cert_word: GeneratorWord,
    a,
    side: str | None = None,
    phi: Matrix | None = None,
) -> GeneratorWord:
    """Relative decomposition from a polynomial certificate.

    ``cert_word`` is a word over ``R[X]`` evaluating to ``I`` at ``X = 0``,
    either in elementary symplectic generators (standard side) or in
    bordered generators for a Pfaffian-1 form ``phi`` over ``R``.  Returns a
    word over ``R`` whose generators are conjugates with parameters in
    ``(a)``, on the requested ``side`` (defaults to the input's side).
    """
    P = cert_word.ring
    if not isinstance(P, PolynomialRing):
        raise HypothesisError("input", "certificate word must live over a polynomial ring")
    R = P.base
    a = R(a)
    in_side = _side_of(cert_word)
    side = side or in_side
    if side not in ("psi", "phi"):
        raise ValueError(f"unknown side {side!r}")
    dim = cert_word.dim
    cert = None
    if in_side == "phi" or side == "phi":
        if phi is None:
            forms = [m for m in cert_word.forms.values() if m != psi(P, dim // 2)]
            if len(forms) != 1:
                raise HypothesisError("input", "a single non-standard form is required for the phi side")
            phi = forms[0].map(lambda x: RingElement(R, P.constant_term(x.v)), R)
        cert = reduce_form(phi)

    psi_poly = cert_word
    if in_side == "phi":
        psi_poly = vaserstein_to_se(conjugate_word(cert_word, cert, "phi_to_psi"))
    rel_poly = relativize_polynomial_word(psi_poly)
    rel = substitute_word(rel_poly, a)

    if side == "phi":
        if not R.two_is_unit():
            raise HypothesisError("border", f"2 is not a unit in {R.name} (R = 2R fails)", partial=rel)
        out = conjugate_word(_relative_to_vaserstein(rel), cert, "psi_to_phi")
    else:
        out = GeneratorWord(R, dim, rel.gens)

    expected = specialize(eval_word(cert_word), a)
    if in_side != side:
        if side == "phi":
            expected = cert.border_inv() @ expected @ cert.border()
        else:
            expected = cert.border() @ expected @ cert.border_inv()
    value = eval_word(out)
    ideal = IdealSpec(a)
    if value != expected:
        raise AssertionError("relative decomposition failed to re-evaluate")
    if not word_in_ideal(out, ideal) or not is_congruent_identity(value, ideal):
        raise AssertionError("relative decomposition left the ideal")
    return out
