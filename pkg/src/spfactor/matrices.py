"""Dense exact matrices over a single :class:`~spfactor.rings.RingSpec`.

Indexing through ``m[i, j]`` is 0-based.  Constructors that mirror matrix
units of the algebra (``e_unit``) take 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .rings import (
    NotDivisibleError,
    RingElement,
    RingSpec,
    RingMismatchError,
    divides,
    ring_from_tag,
)


class Matrix:
    """Immutable dense matrix; entries are :class:`RingElement` values."""

    __slots__ = ("ring", "nrows", "ncols", "rows", "_hash")

    def __init__(self, ring: RingSpec, rows: Iterable[Iterable[Any]]):
        data = tuple(tuple(ring(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def _trusted(cls, ring: RingSpec, rows: Sequence[Sequence[RingElement]]) -> "Matrix":
        m = object.__new__(cls)
        data = tuple(tuple(r) for r in rows)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "nrows", len(data))
        object.__setattr__(m, "ncols", len(data[0]))
        object.__setattr__(m, "rows", data)
        object.__setattr__(m, "_hash", None)
        return m

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Matrix":
        z, o = ring.zero(), ring.one()
        return cls._trusted(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: RingSpec, r: int, c: int | None = None) -> "Matrix":
        z = ring.zero()
        return cls._trusted(ring, [[z] * (r if c is None else c) for _ in range(r)])

    @classmethod
    def e_unit(cls, ring: RingSpec, n: int, i: int, j: int) -> "Matrix":
        """The matrix unit e_ij of size n (1-based indices)."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"e_unit({i}, {j}) out of range for size {n}")
        z, o = ring.zero(), ring.one()
        return cls._trusted(
            ring, [[o if (r, c) == (i - 1, j - 1) else z for c in range(n)] for r in range(n)]
        )

    @classmethod
    def column(cls, ring: RingSpec, entries: Sequence[Any]) -> "Matrix":
        return cls(ring, [[x] for x in entries])

    # -- access ------------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.rows[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[RingElement, ...]:
        return tuple(r[j] for r in self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._trusted(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def tolist(self) -> list[list[RingElement]]:
        return [list(r) for r in self.rows]

    def map(self, f, ring: RingSpec | None = None) -> "Matrix":
        """Apply ``f`` entrywise; ``ring`` is the codomain (defaults to own ring)."""
        ring = self.ring if ring is None else ring
        return Matrix._trusted(ring, [[f(x) for x in r] for r in self.rows])

    # -- arithmetic --------------------------------------------------------
    def _check_ring(self, other: "Matrix") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_ring(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ring = self.ring
        add, mul, is_zero = ring.add, ring.mul, ring.is_zero
        cols = [[x.v for x in c] for c in zip(*other.rows)]
        zero = ring.raw_zero()
        out = []
        for r in self.rows:
            rv = [x.v for x in r]
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(rv, c):
                    if not is_zero(a) and not is_zero(b):
                        acc = add(acc, mul(a, b))
                row.append(RingElement(ring, acc))
            out.append(row)
        return Matrix._trusted(ring, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(
            self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c: RingElement | int) -> "Matrix":
        c = self.ring(c)
        return self.map(lambda x: c * x)

    @property
    def T(self) -> "Matrix":
        return Matrix._trusted(self.ring, list(zip(*self.rows)))

    def transpose(self) -> "Matrix":
        return self.T

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.rows)))
        return self._hash

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        one = self.ring.one()
        return all(
            (x == one) if i == j else not x
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.nrows
        return all(not self.rows[i][i] for i in range(n)) and all(
            self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.ring.name}]([{body}])"

    # -- serialization -----------------------------------------------------
    def to_json(self, with_ring: bool = True) -> dict:
        out: dict = {"rows": [[x.to_json() for x in r] for r in self.rows]}
        if with_ring:
            out = {"ring": self.ring.tag(), **out}
        return out

    @classmethod
    def from_json(cls, obj: dict, ring: RingSpec | None = None) -> "Matrix":
        if ring is None:
            ring = ring_from_tag(obj["ring"])
        return cls(ring, obj["rows"])


def identity(ring: RingSpec, n: int) -> Matrix:
    return Matrix.identity(ring, n)


def e_unit(ring: RingSpec, n: int, i: int, j: int) -> Matrix:
    return Matrix.e_unit(ring, n, i, j)


def transpose(m: Matrix) -> Matrix:
    return m.T


def mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def block_perp(a: Matrix, b: Matrix) -> Matrix:
    """Block diagonal ``diag(a, b)``."""
    a._check_ring(b)
    z = a.ring.zero()
    rows = [list(r) + [z] * b.ncols for r in a.rows]
    rows += [[z] * a.ncols + list(r) for r in b.rows]
    return Matrix._trusted(a.ring, rows)


# -- determinant ----------------------------------------------------------


def _det_cofactor(m: list[list[RingElement]], ring: RingSpec) -> RingElement:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ring.zero()
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det_cofactor(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m: list[list[RingElement]], ring: RingSpec) -> RingElement:
    a = [[x.v for x in row] for row in m]
    n = len(a)
    sub, mul, is_zero = ring.sub, ring.mul, ring.is_zero
    sign = 1
    prev = ring.raw_one()
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(a[i][j], piv), mul(a[i][k], a[k][j]))
                a[i][j] = ring.exact_div(num, prev)
        prev = piv
    det = RingElement(ring, a[n - 1][n - 1])
    return det if sign > 0 else -det


def determinant(m: Matrix) -> RingElement:
    """Exact determinant: cofactor expansion up to size 4, Bareiss above."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    if m.nrows <= 4:
        return _det_cofactor(rows, m.ring)
    return _det_bareiss(rows, m.ring)


def inverse_unit_det(m: Matrix) -> Matrix:
    """Inverse via the adjugate; the determinant must be a unit."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    ring = m.ring
    det = determinant(m)
    if not ring.is_unit(det.v):
        raise ValueError(f"determinant {det} is not a unit")
    dinv = RingElement(ring, ring.inverse(det.v))
    n = m.nrows
    if n == 1:
        return Matrix._trusted(ring, [[dinv]])
    rows = [list(r) for r in m.rows]
    adj = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            c = determinant(Matrix._trusted(ring, minor))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return Matrix._trusted(ring, [[dinv * x for x in r] for r in adj])


# -- Pfaffian -------------------------------------------------------------


def pfaffian(m: Matrix) -> RingElement:
    """Pfaffian by first-row expansion, memoized on index subsets.

    Normalized so that the 2x2 standard form ``[[0, 1], [-1, 0]]`` has
    Pfaffian 1.  A 0x0 matrix (here: no rows to expand) has Pfaffian 1.
    """
    if not m.is_square():
        raise ValueError("Pfaffian of a non-square matrix")
    if m.nrows % 2:
        raise ValueError("Pfaffian of an odd-size matrix")
    if not m.is_skew_symmetric():
        raise ValueError("Pfaffian of a non-skew-symmetric matrix")
    ring = m.ring
    a = m.rows
    memo: dict[tuple[int, ...], RingElement] = {}

    def pf(idx: tuple[int, ...]) -> RingElement:
        if not idx:
            return ring.one()
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = ring.zero()
        for pos, j in enumerate(rest):
            entry = a[first][j]
            if not entry:
                continue
            term = entry * pf(rest[:pos] + rest[pos + 1:])
            # 1-based column position pos+2 within idx: sign (-1)**(pos+2)
            total = total + term if pos % 2 == 0 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(m.nrows)))


# -- forms ----------------------------------------------------------------


def is_symplectic(m: Matrix, phi: Matrix) -> bool:
    """True iff ``m^t phi m == phi``."""
    if m.shape != phi.shape or not m.is_square():
        raise ValueError("size mismatch between matrix and form")
    return m.T @ phi @ m == phi


@dataclass(frozen=True)
class IdealSpec:
    """The principal ideal generated by ``generator``."""

    generator: RingElement

    @property
    def ring(self) -> RingSpec:
        return self.generator.ring

    def contains(self, x: RingElement) -> bool:
        return divides(self.generator, x)

    def __contains__(self, x: RingElement) -> bool:
        return self.contains(x)

    def residue(self, x: RingElement) -> RingElement:
        return RingElement(self.ring, self.ring.residue(x.v, self.generator.v))


def reduce_mod(m: Matrix, ideal: IdealSpec) -> Matrix:
    """Entrywise residue modulo the ideal."""
    if ideal.ring != m.ring:
        raise RingMismatchError(f"{ideal.ring} vs {m.ring}")
    return m.map(ideal.residue)


def is_congruent_identity(m: Matrix, ideal: IdealSpec) -> bool:
    """True iff ``m`` is congruent to the identity modulo the ideal."""
    if not m.is_square():
        return False
    if ideal.ring != m.ring:
        raise RingMismatchError(f"{ideal.ring} vs {m.ring}")
    one = m.ring.one()
    for i, r in enumerate(m.rows):
        for j, x in enumerate(r):
            if not ideal.contains(x - one if i == j else x):
                return False
    return True


__all__ = [
    "Matrix",
    "IdealSpec",
    "NotDivisibleError",
    "block_perp",
    "determinant",
    "e_unit",
    "identity",
    "inverse_unit_det",
    "is_congruent_identity",
    "is_symplectic",
    "mul",
    "pfaffian",
    "reduce_mod",
    "transpose",
]
