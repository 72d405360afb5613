"""Concrete matrices attached to skew-symmetric forms.

The standard form, the pairing permutation, elementary symplectic
matrices, and the bordered generators ``C_phi(v)``/``R_phi(v)`` built from
the block data of an invertible skew-symmetric ``phi``.  All indices that
name generators are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .matrices import Matrix, determinant, inverse_unit_det
from .rings import RingElement, RingSpec


def sigma(i: int) -> int:
    """Pairing permutation: 2k-1 <-> 2k."""
    return i + 1 if i % 2 else i - 1


def psi(ring: RingSpec, n: int) -> Matrix:
    """Standard skew form of size 2n: n hyperbolic blocks [[0, 1], [-1, 0]]."""
    if n < 1:
        raise ValueError("psi needs n >= 1")
    z, o = ring.zero(), ring.one()
    rows = [[z] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        rows[2 * k][2 * k + 1] = o
        rows[2 * k + 1][2 * k] = -o
    return Matrix._trusted(ring, rows)


def se_sign(i: int, j: int) -> int:
    return 1 if (i + j) % 2 == 0 else -1


def check_se_indices(i: int, j: int, dim: int) -> None:
    if dim % 2:
        raise ValueError(f"symplectic generators need even size, got {dim}")
    if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
        raise ValueError(f"bad elementary symplectic indices ({i}, {j}) for size {dim}")


def se_matrix(ring: RingSpec, n: int, i: int, j: int, a) -> Matrix:
    """Elementary symplectic matrix se_ij(a) of size 2n.

    ``I + a e_ij`` when ``i = sigma(j)``, otherwise
    ``I + a e_ij - (-1)**(i+j) a e_{sigma(j) sigma(i)}``.
    """
    dim = 2 * n
    check_se_indices(i, j, dim)
    a = ring(a)
    rows = [list(r) for r in Matrix.identity(ring, dim).rows]
    rows[i - 1][j - 1] = a
    if i != sigma(j):
        rows[sigma(j) - 1][sigma(i) - 1] = -a if se_sign(i, j) > 0 else a
    return Matrix._trusted(ring, rows)


def lin_e_matrix(ring: RingSpec, dim: int, i: int, j: int, a) -> Matrix:
    """Elementary linear matrix E_ij(a) = I + a e_ij."""
    if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
        raise ValueError(f"bad elementary indices ({i}, {j}) for size {dim}")
    rows = [list(r) for r in Matrix.identity(ring, dim).rows]
    rows[i - 1][j - 1] = ring(a)
    return Matrix._trusted(ring, rows)


@dataclass(frozen=True)
class FormData:
    """Block data of ``phi = [[0, -c^t], [c, nu]]`` and ``phi^-1 = [[0, d^t], [-d, mu]]``."""

    phi: Matrix
    c: tuple[RingElement, ...]
    d: tuple[RingElement, ...]
    nu: Matrix
    mu: Matrix
    phi_inv: Matrix

    @property
    def ring(self) -> RingSpec:
        return self.phi.ring

    @property
    def size(self) -> int:
        return self.phi.nrows

    def c_col(self) -> Matrix:
        return Matrix._trusted(self.ring, [[x] for x in self.c])

    def d_col(self) -> Matrix:
        return Matrix._trusted(self.ring, [[x] for x in self.d])


@lru_cache(maxsize=256)
def extract_form_data(phi: Matrix) -> FormData:
    if not phi.is_square() or phi.nrows < 2 or phi.nrows % 2:
        raise ValueError("form must be square of even size >= 2")
    if not phi.is_skew_symmetric():
        raise ValueError("form is not skew-symmetric")
    if not phi.ring.is_unit(determinant(phi).v):
        raise ValueError("form is not invertible")
    inv = inverse_unit_det(phi)
    m = phi.nrows
    tail = range(1, m)
    c = phi.col(0)[1:]
    d = tuple(-x for x in inv.col(0)[1:])
    return FormData(
        phi=phi,
        c=c,
        d=d,
        nu=phi.submatrix(tail, tail),
        mu=inv.submatrix(tail, tail),
        phi_inv=inv,
    )


def _vec(fd: FormData, v: Sequence) -> Matrix:
    if len(v) != fd.size - 1:
        raise ValueError(f"vector length {len(v)} != {fd.size - 1}")
    return Matrix._trusted(fd.ring, [[fd.ring(x)] for x in v])


def alpha_of(fd: FormData, v: Sequence) -> Matrix:
    """``I + d v^t nu``."""
    vc = _vec(fd, v)
    return Matrix.identity(fd.ring, fd.size - 1) + fd.d_col() @ (vc.T @ fd.nu)


def beta_of(fd: FormData, v: Sequence) -> Matrix:
    """``I + mu v c^t``."""
    vc = _vec(fd, v)
    return Matrix.identity(fd.ring, fd.size - 1) + (fd.mu @ vc) @ fd.c_col().T


def C_of(fd: FormData, v: Sequence) -> Matrix:
    """``[[1, 0], [v, alpha(v)]]``."""
    vc = _vec(fd, v)
    al = alpha_of(fd, v)
    ring = fd.ring
    rows = [[ring.one()] + [ring.zero()] * (fd.size - 1)]
    rows += [[vc[k, 0]] + list(al.rows[k]) for k in range(fd.size - 1)]
    return Matrix._trusted(ring, rows)


def R_of(fd: FormData, v: Sequence) -> Matrix:
    """``[[1, v^t], [0, beta(v)]]``."""
    vc = _vec(fd, v)
    be = beta_of(fd, v)
    ring = fd.ring
    rows = [[ring.one()] + list(vc.col(0))]
    rows += [[ring.zero()] + list(be.rows[k]) for k in range(fd.size - 1)]
    return Matrix._trusted(ring, rows)
