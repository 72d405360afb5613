"""Generator words: symbolic products of group generators.

A :class:`GeneratorWord` never pre-multiplies; :func:`eval_word` multiplies
on demand, left to right.  Four bare generator kinds and one conjugation
wrapper are supported:

``LinE(i, j, a)``        elementary linear matrix ``I + a e_ij``
``SymSE(i, j, a)``       elementary symplectic matrix ``se_ij(a)``
``VasC(form, v)``        bordered generator ``C_phi(v)`` for a named form
``VasR(form, v)``        bordered generator ``R_phi(v)``
``Conj(outer, inner)``   ``outer * inner * outer^-1``

Bordered generators refer to forms by id; the word carries the id -> form
table.  Outer words inside ``Conj`` share the table of the enclosing word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Union

from .forms import C_of, R_of, check_se_indices, extract_form_data, se_sign, sigma
from .matrices import IdealSpec, Matrix
from .rings import RingElement, RingMismatchError, RingSpec, ring_from_tag


@dataclass(frozen=True)
class LinE:
    i: int
    j: int
    a: RingElement


@dataclass(frozen=True)
class SymSE:
    i: int
    j: int
    a: RingElement


@dataclass(frozen=True)
class VasC:
    form: str
    v: tuple[RingElement, ...]


@dataclass(frozen=True)
class VasR:
    form: str
    v: tuple[RingElement, ...]


@dataclass(frozen=True)
class Conj:
    outer: "GeneratorWord"
    inner: "Generator"


Generator = Union[LinE, SymSE, VasC, VasR, Conj]


class GeneratorWord:
    """Ordered generator sequence over one ring, acting on ``dim``-space."""

    __slots__ = ("ring", "dim", "gens", "forms")

    def __init__(
        self,
        ring: RingSpec,
        dim: int,
        gens: Iterable[Generator] = (),
        forms: Mapping[str, Matrix] | None = None,
    ):
        self.ring = ring
        self.dim = dim
        self.gens = tuple(gens)
        self.forms = dict(forms or {})
        for key, phi in self.forms.items():
            if phi.ring != ring or phi.shape != (dim, dim):
                raise ValueError(f"form {key!r} does not match the word's ring/size")

    @property
    def n(self) -> int:
        """Half-size (meaningful for symplectic words)."""
        return self.dim // 2

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.dim == other.dim
            and self.gens == other.gens
            and self.forms == other.forms
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.gens))

    def __repr__(self) -> str:
        return f"GeneratorWord({self.ring.name}, dim={self.dim}, {list(self.gens)!r})"

    def with_gens(self, gens: Iterable[Generator]) -> "GeneratorWord":
        return GeneratorWord(self.ring, self.dim, gens, self.forms)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if other.ring != self.ring or other.dim != self.dim:
            raise ValueError("cannot concatenate words of different ring/size")
        forms = dict(self.forms)
        for key, phi in other.forms.items():
            if key in forms and forms[key] != phi:
                raise ValueError(f"conflicting definitions of form {key!r}")
            forms[key] = phi
        return GeneratorWord(self.ring, self.dim, self.gens + other.gens, forms)


# -- evaluation -------------------------------------------------------------


def _apply_right(rows: list[list], ring: RingSpec, g: Generator, word: GeneratorWord) -> list[list]:
    """Right-multiply the row-list matrix by one generator, in place when cheap."""
    if isinstance(g, LinE):
        if not (1 <= g.i <= word.dim and 1 <= g.j <= word.dim) or g.i == g.j:
            raise ValueError(f"bad elementary indices ({g.i}, {g.j}) for size {word.dim}")
        # column j += a * column i
        a = ring(g.a)
        for r in rows:
            if r[g.i - 1]:
                r[g.j - 1] = r[g.j - 1] + a * r[g.i - 1]
        return rows
    if isinstance(g, SymSE):
        check_se_indices(g.i, g.j, word.dim)
        a = ring(g.a)
        i, j = g.i - 1, g.j - 1
        if g.i == sigma(g.j):
            for r in rows:
                if r[i]:
                    r[j] = r[j] + a * r[i]
            return rows
        si, sj = sigma(g.i) - 1, sigma(g.j) - 1
        b = -a if se_sign(g.i, g.j) > 0 else a
        # column j += a col i ; column sigma(i) += b col sigma(j); columns read are untouched
        for r in rows:
            if r[i]:
                r[j] = r[j] + a * r[i]
            if r[sj]:
                r[si] = r[si] + b * r[sj]
        return rows
    m = Matrix._trusted(ring, rows) @ generator_matrix(g, word)
    return [list(r) for r in m.rows]


def generator_matrix(g: Generator, word: GeneratorWord) -> Matrix:
    """Matrix of a single generator in the context of ``word``."""
    ring = word.ring
    if isinstance(g, (LinE, SymSE)):
        rows = [list(r) for r in Matrix.identity(ring, word.dim).rows]
        return Matrix._trusted(ring, _apply_right(rows, ring, g, word))
    if isinstance(g, (VasC, VasR)):
        if g.form not in word.forms:
            raise KeyError(f"word has no form named {g.form!r}")
        fd = extract_form_data(word.forms[g.form])
        return C_of(fd, g.v) if isinstance(g, VasC) else R_of(fd, g.v)
    if isinstance(g, Conj):
        outer = _in_context(g.outer, word)
        return eval_word(outer) @ generator_matrix(g.inner, word) @ eval_word(invert_word(outer))
    raise TypeError(f"unknown generator {g!r}")


def _in_context(outer: GeneratorWord, word: GeneratorWord) -> GeneratorWord:
    if outer.ring != word.ring or outer.dim != word.dim:
        raise ValueError("conjugator does not match the enclosing word")
    if outer.forms == word.forms or not word.forms:
        return outer
    forms = dict(word.forms)
    forms.update(outer.forms)
    return GeneratorWord(outer.ring, outer.dim, outer.gens, forms)


def eval_word(w: GeneratorWord) -> Matrix:
    """Exact left-to-right product of the generators; the empty word gives I."""
    ring = w.ring
    rows = [list(r) for r in Matrix.identity(ring, w.dim).rows]
    for g in w.gens:
        _check_ring(g, ring)
        rows = _apply_right(rows, ring, g, w)
    return Matrix._trusted(ring, rows)


def _check_ring(g: Generator, ring: RingSpec) -> None:
    for a in params(g):
        if a.ring != ring:
            raise RingMismatchError(f"generator parameter in {a.ring}, word over {ring}")


# -- structural operations --------------------------------------------------


def params(g: Generator) -> tuple[RingElement, ...]:
    """Ring parameters of a bare generator (the inner ones for ``Conj``)."""
    if isinstance(g, (LinE, SymSE)):
        return (g.a,)
    if isinstance(g, (VasC, VasR)):
        return g.v
    if isinstance(g, Conj):
        return params(g.inner)
    raise TypeError(f"unknown generator {g!r}")


def invert_generator(g: Generator) -> Generator:
    if isinstance(g, LinE):
        return LinE(g.i, g.j, -g.a)
    if isinstance(g, SymSE):
        return SymSE(g.i, g.j, -g.a)
    # C(v)^-1 = C(-v) and R(v)^-1 = R(-v): nu d = 0 and c^t mu = 0 for any invertible form
    if isinstance(g, VasC):
        return VasC(g.form, tuple(-x for x in g.v))
    if isinstance(g, VasR):
        return VasR(g.form, tuple(-x for x in g.v))
    if isinstance(g, Conj):
        return Conj(g.outer, invert_generator(g.inner))
    raise TypeError(f"unknown generator {g!r}")


def invert_word(w: GeneratorWord) -> GeneratorWord:
    return w.with_gens(invert_generator(g) for g in reversed(w.gens))


def is_trivial(g: Generator) -> bool:
    return all(not a for a in params(g))


def _merge(g: Generator, h: Generator) -> Generator | None:
    if type(g) is type(h) and isinstance(g, (LinE, SymSE)) and (g.i, g.j) == (h.i, h.j):
        return type(g)(g.i, g.j, g.a + h.a)
    if isinstance(g, Conj) and isinstance(h, Conj) and g.outer == h.outer:
        inner = _merge(g.inner, h.inner)
        if inner is not None:
            return Conj(g.outer, inner)
    return None


def simplify(w: GeneratorWord) -> GeneratorWord:
    """Merge adjacent same-index generators and drop trivial ones."""
    out: list[Generator] = []
    for g in w.gens:
        if isinstance(g, Conj):
            g = Conj(simplify(g.outer), g.inner)
        if is_trivial(g):
            continue
        if out:
            merged = _merge(out[-1], g)
            if merged is not None:
                out.pop()
                if not is_trivial(merged):
                    out.append(merged)
                continue
        out.append(g)
    return w.with_gens(out)


def word_in_ideal(w: GeneratorWord, ideal: IdealSpec) -> bool:
    """True iff every generator (or every conjugated inner generator) has parameters in the ideal."""
    return all(ideal.contains(a) for g in w.gens for a in params(g))


def map_params(w: GeneratorWord, f, ring: RingSpec | None = None) -> GeneratorWord:
    """Apply ``f`` to every ring parameter and every form entry."""
    ring = w.ring if ring is None else ring
    forms = {k: phi.map(f, ring) for k, phi in w.forms.items()}

    def go(g: Generator) -> Generator:
        if isinstance(g, LinE):
            return LinE(g.i, g.j, f(g.a))
        if isinstance(g, SymSE):
            return SymSE(g.i, g.j, f(g.a))
        if isinstance(g, VasC):
            return VasC(g.form, tuple(f(x) for x in g.v))
        if isinstance(g, VasR):
            return VasR(g.form, tuple(f(x) for x in g.v))
        if isinstance(g, Conj):
            return Conj(map_params(g.outer, f, ring), go(g.inner))
        raise TypeError(f"unknown generator {g!r}")

    return GeneratorWord(ring, w.dim, [go(g) for g in w.gens], forms)


# -- JSON -------------------------------------------------------------------


def generator_to_json(g: Generator) -> dict:
    if isinstance(g, LinE):
        return {"t": "E", "i": g.i, "j": g.j, "a": g.a.to_json()}
    if isinstance(g, SymSE):
        return {"t": "se", "i": g.i, "j": g.j, "a": g.a.to_json()}
    if isinstance(g, VasC):
        return {"t": "C", "form": g.form, "v": [x.to_json() for x in g.v]}
    if isinstance(g, VasR):
        return {"t": "R", "form": g.form, "v": [x.to_json() for x in g.v]}
    if isinstance(g, Conj):
        return {"t": "conj", "outer": word_to_json(g.outer, forms=False), "inner": generator_to_json(g.inner)}
    raise TypeError(f"unknown generator {g!r}")


def word_to_json(w: GeneratorWord, forms: bool = True) -> dict:
    out: dict[str, Any] = {"ring": w.ring.tag()}
    if w.dim % 2 == 0:
        out["n"] = w.dim // 2
    else:
        out["dim"] = w.dim
    if forms and w.forms:
        out["forms"] = {k: phi.to_json(with_ring=False) for k, phi in sorted(w.forms.items())}
    out["gens"] = [generator_to_json(g) for g in w.gens]
    return out


def generator_from_json(obj: dict, ring: RingSpec, dim: int, forms: Mapping[str, Matrix]) -> Generator:
    t = obj["t"]
    if t in ("E", "se"):
        i, j = int(obj["i"]), int(obj["j"])
        if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
            raise ValueError(f"bad generator indices ({i}, {j}) for size {dim}")
        cls = LinE if t == "E" else SymSE
        return cls(i, j, ring(obj["a"]))
    if t in ("C", "R"):
        v = tuple(ring(x) for x in obj["v"])
        if len(v) != dim - 1:
            raise ValueError(f"bordered generator needs a vector of length {dim - 1}")
        cls = VasC if t == "C" else VasR
        return cls(str(obj["form"]), v)
    if t == "conj":
        outer = word_from_json(obj["outer"], ring=ring, forms=forms)
        return Conj(outer, generator_from_json(obj["inner"], ring, dim, forms))
    raise ValueError(f"unknown generator tag {t!r}")


def word_from_json(
    obj: dict, ring: RingSpec | None = None, forms: Mapping[str, Matrix] | None = None
) -> GeneratorWord:
    if ring is None or "ring" in obj:
        ring = ring_from_tag(obj["ring"])
    dim = int(obj["dim"]) if "dim" in obj else 2 * int(obj["n"])
    table = dict(forms or {})
    for key, m in (obj.get("forms") or {}).items():
        table[key] = Matrix.from_json(m, ring)
    gens = [generator_from_json(g, ring, dim, table) for g in obj.get("gens", [])]
    return GeneratorWord(ring, dim, gens, table)
