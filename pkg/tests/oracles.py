"""Independent reference computations used to check the library.

Nothing here calls the routines under test: determinants by the Leibniz
permutation sum, Pfaffians by summing over perfect matchings, and
elementary symplectic matrices assembled entry by entry from the case split.
"""

from itertools import permutations

from spfactor.matrices import Matrix


def perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(m: Matrix):
    ring = m.ring
    total = ring.zero()
    n = m.nrows
    for p in permutations(range(n)):
        term = ring.one()
        for i in range(n):
            term = term * m[i, p[i]]
            if not term:
                break
        if term:
            total = total + term if perm_sign(p) > 0 else total - term
    return total


def _matchings(idx):
    if not idx:
        yield []
        return
    first = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1:]
        for m in _matchings(rest):
            yield [(first, idx[k])] + m


def matching_pfaffian(m: Matrix):
    """Sum over perfect matchings; sign = sign of the permutation (i1 j1 i2 j2 ...)."""
    ring = m.ring
    total = ring.zero()
    for match in _matchings(list(range(m.nrows))):
        perm = [x for pair in match for x in pair]
        term = ring.one()
        for i, j in match:
            term = term * m[i, j]
        total = total + term if perm_sign(perm) > 0 else total - term
    return total


def sigma(i):
    return i + 1 if i % 2 == 1 else i - 1


def dense_se(ring, n, i, j, a):
    """se_ij(a) written straight from the two-case definition."""
    dim = 2 * n
    a = ring(a)
    rows = [[ring.one() if r == c else ring.zero() for c in range(dim)] for r in range(dim)]
    rows[i - 1][j - 1] = rows[i - 1][j - 1] + a
    if i != sigma(j):
        sign = 1 if (i + j) % 2 == 0 else -1
        r, c = sigma(j) - 1, sigma(i) - 1
        rows[r][c] = rows[r][c] - sign * a
    return Matrix(ring, rows)


def dense_psi(ring, n):
    rows = [[ring.zero()] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        rows[2 * k][2 * k + 1] = ring.one()
        rows[2 * k + 1][2 * k] = -ring.one()
    return Matrix(ring, rows)


def product(ring, dim, mats):
    acc = Matrix.identity(ring, dim)
    for m in mats:
        acc = acc @ m
    return acc
