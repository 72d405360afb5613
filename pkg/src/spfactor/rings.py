"""Exact arithmetic over the supported euclidean domains.

A ring is described by an immutable :class:`RingSpec`; elements are
:class:`RingElement` wrappers holding a canonical payload:

* ``Integers``          -- Python ``int``
* ``Rationals``         -- reduced ``Fraction``
* ``DyadicRationals``   -- ``Fraction`` whose denominator is a power of two
* ``PrimeField``        -- ``int`` in ``range(p)`` (coefficient field only)
* ``PolynomialRing``    -- tuple of base payloads, ascending degree, no
  trailing zeros.  Over a prime field this is the euclidean ring F_p[x];
  over any other base it is the certificate ring R[X] (not euclidean).

Every ring exposes ``div_rem`` against a norm ``N`` with ``r == 0`` or
``N(r) < N(b)``.  Norms: ``|a|`` on Z, degree on F_p[x], the absolute odd
part of the numerator on Z[1/2], and 0/1 on fields.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Iterable


class RingMismatchError(TypeError):
    """Raised when two operands live in different rings."""


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _odd_part(m: int) -> tuple[int, int]:
    """Split a nonzero integer as ``m = 2**k * odd``; returns ``(odd, k)``."""
    k = (m & -m).bit_length() - 1
    return m >> k, k


def _sym_divmod(a: int, b: int) -> tuple[int, int]:
    # remainder in (-|b|/2, |b|/2]; keeps euclidean descent short
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        if (r > 0) == (b > 0):
            q, r = q + 1, r - b
        else:
            q, r = q - 1, r + b
    return q, r


class RingSpec:
    """Base class for ring descriptors.  Subclasses operate on raw payloads."""

    kind: str = ""
    euclidean: bool = True
    is_field: bool = False

    # identity -----------------------------------------------------------
    def _key(self) -> tuple:
        return (self.kind,)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        return self.kind

    # construction -------------------------------------------------------
    def __call__(self, value: Any) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} element given where {self} expected")
            return value
        return RingElement(self, self.coerce(value))

    def coerce(self, value: Any):
        """Turn ints, strings or JSON payloads into a canonical raw value."""
        raise NotImplementedError

    def zero(self) -> "RingElement":
        return RingElement(self, self.raw_zero())

    def one(self) -> "RingElement":
        return RingElement(self, self.raw_one())

    def raw_zero(self):
        return self.from_int(0)

    def raw_one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    # raw arithmetic -----------------------------------------------------
    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_zero(self, x) -> bool:
        return not x

    def norm(self, x) -> int:
        raise NotImplementedError

    def div_rem(self, x, y):
        raise NotImplementedError

    def exact_div(self, x, y):
        q, r = self.div_rem(x, y)
        if not self.is_zero(r):
            raise NotDivisibleError(f"{self.fmt(y)} does not divide {self.fmt(x)}")
        return q

    def residue(self, x, g):
        """Remainder of ``x`` modulo the principal ideal ``(g)``."""
        if self.is_zero(g):
            return x
        return self.div_rem(x, g)[1]

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def two_is_unit(self) -> bool:
        return self.is_unit(self.from_int(2))

    # serialization ------------------------------------------------------
    def tag(self) -> Any:
        return self.kind

    def dump(self, x) -> Any:
        return str(x)

    def fmt(self, x) -> str:
        return str(x)

    def random_raw(self, rng: random.Random, size: int = 3):
        raise NotImplementedError

    def random(self, rng: random.Random, size: int = 3) -> "RingElement":
        return RingElement(self, self.random_raw(rng, size))


class Integers(RingSpec):
    kind = "Integers"

    @property
    def name(self) -> str:
        return "ZZ"

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, str):
            return int(value.strip())
        raise TypeError(f"cannot read {value!r} as an integer")

    def from_int(self, n):
        return n

    def norm(self, x):
        return abs(x)

    def div_rem(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        return _sym_divmod(x, y)

    def is_unit(self, x):
        return x in (1, -1)

    def inverse(self, x):
        if x not in (1, -1):
            raise ZeroDivisionError(f"{x} is not a unit in ZZ")
        return x

    def tag(self):
        return "ZZ"

    def random_raw(self, rng, size=3):
        return rng.randint(-size, size)


class Rationals(RingSpec):
    kind = "Rationals"
    is_field = True

    @property
    def name(self) -> str:
        return "QQ"

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value.strip())
        raise TypeError(f"cannot read {value!r} as a rational")

    def from_int(self, n):
        return Fraction(n)

    def norm(self, x):
        return 0 if x == 0 else 1

    def div_rem(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return x / y, Fraction(0)

    def is_unit(self, x):
        return x != 0

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError("0 is not a unit in QQ")
        return 1 / x

    def tag(self):
        return "QQ"

    def random_raw(self, rng, size=3):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))


class DyadicRationals(RingSpec):
    """Z[1/2]: fractions whose denominator is a power of two."""

    kind = "DyadicRationals"

    @property
    def name(self) -> str:
        return "ZZ_half"

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, (int, Fraction)):
            f = Fraction(value)
            den = f.denominator
            if den & (den - 1):
                raise ValueError(f"{value!r} is not a dyadic rational")
            return f
        raise TypeError(f"cannot read {value!r} as a dyadic rational")

    def from_int(self, n):
        return Fraction(n)

    @staticmethod
    def mantissa_exponent(x: Fraction) -> tuple[int, int]:
        """Return ``(m, k)`` with ``x = m * 2**k`` and ``m`` odd (or ``(0, 0)``)."""
        if x == 0:
            return 0, 0
        m, k = _odd_part(x.numerator)
        return m, k - (x.denominator.bit_length() - 1)

    def norm(self, x):
        return abs(self.mantissa_exponent(x)[0])

    def div_rem(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in ZZ_half")
        if x == 0:
            return Fraction(0), Fraction(0)
        m, k = self.mantissa_exponent(x)
        n, l = self.mantissa_exponent(y)
        q0, r0 = _sym_divmod(m, n)
        return Fraction(q0) * Fraction(2) ** (k - l), Fraction(r0) * Fraction(2) ** k

    def is_unit(self, x):
        return x != 0 and abs(self.mantissa_exponent(x)[0]) == 1

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in ZZ_half")
        return 1 / x

    def tag(self):
        return "ZZ_half"

    def random_raw(self, rng, size=3):
        return Fraction(rng.randint(-size, size), 2 ** rng.randint(0, 2))


class PrimeField(RingSpec):
    """F_p, used as the coefficient field of F_p[x]."""

    kind = "PrimeField"
    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def _key(self):
        return (self.kind, self.p)

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, str):
            value = int(value.strip())
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot read {value!r} as an element of GF({self.p})")

    def from_int(self, n):
        return n % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def norm(self, x):
        return 0 if x == 0 else 1

    def div_rem(self, x, y):
        if y == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return (x * pow(y, -1, self.p)) % self.p, 0

    def is_unit(self, x):
        return x != 0

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError(f"0 is not a unit in GF({self.p})")
        return pow(x, -1, self.p)

    def tag(self):
        return {"GFp": self.p}

    def dump(self, x):
        return x

    def random_raw(self, rng, size=3):
        return rng.randrange(self.p)


class PolynomialRing(RingSpec):
    """Univariate polynomials over ``base``; euclidean when ``base`` is a field."""

    def __init__(self, base: RingSpec):
        self.base = base
        self.euclidean = base.is_field
        self._p = base.p if isinstance(base, PrimeField) else None

    @property
    def kind(self) -> str:  # type: ignore[override]
        if self._p is not None:
            return "PolynomialOverPrimeField"
        return "Polynomial"

    @property
    def modulus(self) -> int | None:
        return self._p

    def _key(self):
        return ("Poly", self.base._key())

    @property
    def name(self) -> str:
        if self._p is not None:
            return f"GF({self._p})[x]"
        return f"{self.base.name}[X]"

    # helpers
    def _trim(self, coeffs: Iterable) -> tuple:
        c = list(coeffs)
        is_zero = self.base.is_zero
        while c and is_zero(c[-1]):
            c.pop()
        return tuple(c)

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, (list, tuple)):
            return self._trim(self.base.coerce(c) for c in value)
        if isinstance(value, (int, str)):
            return self._trim([self.base.coerce(value)])
        raise TypeError(f"cannot read {value!r} as a polynomial over {self.base}")

    def from_int(self, n):
        return self._trim([self.base.from_int(n)])

    def constant(self, c: "RingElement") -> "RingElement":
        """Embed a base-ring element as a constant polynomial."""
        return RingElement(self, self._trim([self.base(c).v]))

    def gen(self) -> "RingElement":
        """The indeterminate."""
        return RingElement(self, (self.base.raw_zero(), self.base.raw_one()))

    def degree(self, x) -> int:
        return len(x) - 1

    def is_zero(self, x):
        return not x

    def add(self, x, y):
        if len(x) < len(y):
            x, y = y, x
        if self._p is not None:
            p = self._p
            out = [(a + b) % p for a, b in zip(x, y)]
        else:
            badd = self.base.add
            out = [badd(a, b) for a, b in zip(x, y)]
        out.extend(x[len(y):])
        return self._trim(out)

    def neg(self, x):
        bneg = self.base.neg
        return tuple(bneg(a) for a in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if not x or not y:
            return ()
        if self._p is not None:
            p = self._p
            out = [0] * (len(x) + len(y) - 1)
            for i, a in enumerate(x):
                if a:
                    for j, b in enumerate(y):
                        out[i + j] += a * b
            return self._trim(c % p for c in out)
        base = self.base
        out = [base.raw_zero()] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if base.is_zero(a):
                continue
            for j, b in enumerate(y):
                out[i + j] = base.add(out[i + j], base.mul(a, b))
        return self._trim(out)

    def scale(self, c, x):
        return self._trim(self.base.mul(c, a) for a in x)

    def evaluate(self, x, point):
        """Horner evaluation at a base-ring raw value."""
        base = self.base
        acc = base.raw_zero()
        for a in reversed(x):
            acc = base.add(base.mul(acc, point), a)
        return acc

    def constant_term(self, x):
        return x[0] if x else self.base.raw_zero()

    def norm(self, x):
        return len(x) - 1

    def _long_div(self, x, y, exact: bool):
        base = self.base
        if not y:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        lead = y[-1]
        if base.is_field:
            lead_inv = base.inverse(lead)
            quot = lambda a: base.mul(a, lead_inv)  # noqa: E731
        elif base.is_unit(lead):
            lead_inv = base.inverse(lead)
            quot = lambda a: base.mul(a, lead_inv)  # noqa: E731
        elif exact:
            quot = lambda a: base.exact_div(a, lead)  # noqa: E731
        else:
            raise ArithmeticError(f"leading coefficient of {self.fmt(y)} is not a unit")
        r = list(x)
        q = [base.raw_zero()] * max(len(x) - len(y) + 1, 0)
        while len(r) >= len(y) and r:
            shift = len(r) - len(y)
            c = quot(r[-1])
            q[shift] = c
            for k, b in enumerate(y):
                r[shift + k] = base.sub(r[shift + k], base.mul(c, b))
            r = list(self._trim(r))
        return self._trim(q), tuple(r)

    def div_rem(self, x, y):
        if not self.euclidean:
            raise ArithmeticError(f"{self.name} is not a euclidean domain")
        return self._long_div(x, y, exact=False)

    def exact_div(self, x, y):
        q, r = self._long_div(x, y, exact=True)
        if r:
            raise NotDivisibleError(f"{self.fmt(y)} does not divide {self.fmt(x)}")
        return q

    def residue(self, x, g):
        if not g:
            return x
        return self._long_div(x, g, exact=False)[1]

    def is_unit(self, x):
        return len(x) == 1 and self.base.is_unit(x[0])

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{self.fmt(x)} is not a unit in {self.name}")
        return (self.base.inverse(x[0]),)

    def two_is_unit(self):
        return self.base.two_is_unit()

    def tag(self):
        if self._p is not None:
            return {"GFpX": self._p}
        return {"poly": self.base.tag()}

    def dump(self, x):
        return [self.base.dump(a) for a in x]

    def fmt(self, x):
        if not x:
            return "0"
        var = "x" if self._p is not None else "X"
        terms = []
        for k, a in enumerate(x):
            if self.base.is_zero(a):
                continue
            s = self.base.fmt(a)
            if k == 0:
                terms.append(s)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                terms.append(mon if s == "1" else f"({s})*{mon}")
        return " + ".join(terms)

    def random_raw(self, rng, size=3):
        deg = rng.randint(-1, max(size - 1, 0))
        return self._trim(self.base.random_raw(rng, size) for _ in range(deg + 1))


class RingElement:
    """An exact element of a :class:`RingSpec`.  Immutable."""

    __slots__ = ("ring", "v")

    def __init__(self, ring: RingSpec, v):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def _wrap(self, v):
        return RingElement(self.ring, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.add(self.v, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.sub(self.v, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.sub(o, self.v))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.mul(self.v, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.ring.neg(self.v))

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.v == other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return self.v == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.v))

    def __bool__(self):
        return not self.ring.is_zero(self.v)

    def __repr__(self):
        return f"{self.ring.name}({self.ring.fmt(self.v)})"

    def __str__(self):
        return self.ring.fmt(self.v)

    def norm(self) -> int:
        return self.ring.norm(self.v)

    def to_json(self):
        return self.ring.dump(self.v)


# -- module-level operations --------------------------------------------


def _same(a: RingElement, b: RingElement) -> RingSpec:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    return a.ring


def div_rem(a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
    """Euclidean division: ``a = q*b + r`` with ``r == 0`` or ``N(r) < N(b)``."""
    ring = _same(a, b)
    q, r = ring.div_rem(a.v, b.v)
    return RingElement(ring, q), RingElement(ring, r)


def gcd_ext(a: RingElement, b: RingElement) -> tuple[RingElement, RingElement, RingElement]:
    """Extended Euclid.  Returns ``(g, s, t)`` with ``g = s*a + t*b``."""
    ring = _same(a, b)
    if not a and not b:
        raise ValueError("gcd_ext(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = ring.one(), ring.zero()
    t0, t1 = ring.zero(), ring.one()
    while r1:
        q, r = div_rem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def is_unit(x: RingElement) -> bool:
    return x.ring.is_unit(x.v)


def invert_unit(x: RingElement) -> RingElement:
    if not is_unit(x):
        raise ZeroDivisionError(f"{x!r} is not a unit")
    return RingElement(x.ring, x.ring.inverse(x.v))


def two_is_unit(ring: RingSpec) -> bool:
    return ring.two_is_unit()


def halve(x: RingElement) -> RingElement:
    """The unique ``y`` with ``2*y == x``; needs 2 to be a unit."""
    ring = x.ring
    if not ring.two_is_unit():
        raise ArithmeticError(f"2 is not a unit in {ring.name} (R = 2R fails)")
    return x * RingElement(ring, ring.inverse(ring.from_int(2)))


def divides(g: RingElement, x: RingElement) -> bool:
    """True iff ``x`` lies in the principal ideal ``(g)``."""
    ring = _same(g, x)
    if not g:
        return not x
    return ring.is_zero(ring.residue(x.v, g.v))


# -- construction from JSON tags ----------------------------------------

ZZ = Integers()
QQ = Rationals()
ZZ_half = DyadicRationals()


def GFpX(p: int) -> PolynomialRing:
    """The euclidean ring F_p[x]."""
    return PolynomialRing(PrimeField(p))


def ring_from_tag(tag: Any) -> RingSpec:
    """Parse a JSON ring tag: ``"ZZ"``, ``"QQ"``, ``"ZZ_half"``, ``{"GFpX": p}``, ``{"poly": tag}``."""
    if isinstance(tag, str):
        t = tag.strip()
        if t == "ZZ":
            return ZZ
        if t == "QQ":
            return QQ
        if t == "ZZ_half":
            return ZZ_half
        if t.startswith("GF") and t.endswith("X") and t[2:-1].isdigit():
            return GFpX(int(t[2:-1]))
        raise ValueError(f"unknown ring tag {tag!r}")
    if isinstance(tag, dict) and len(tag) == 1:
        (key, val), = tag.items()
        if key == "GFpX":
            return GFpX(int(val))
        if key == "GFp":
            return PrimeField(int(val))
        if key == "poly":
            return PolynomialRing(ring_from_tag(val))
    raise ValueError(f"unknown ring tag {tag!r}")
