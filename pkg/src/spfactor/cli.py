"""Command-line interface: JSON in, JSON report out.

Exit codes: 0 success (including a failed ``verify``), 1 hypothesis
failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable

from .errors import HypothesisError
from .forms import psi
from .matrices import IdealSpec, Matrix, determinant, is_congruent_identity, is_symplectic, pfaffian
from .rings import PolynomialRing, RingSpec, ring_from_tag
from .sampling import (
    PRNG_NAME,
    random_pf1_form,
    random_se_word,
    random_skew,
    random_sp_phi,
    random_unimodular,
    random_vanishing_poly_word,
)
from .symplectic import factor_sp, relativize_polynomial_word, specialize, substitute_word
from .vaserstein import ReductionCertificate, decompose_relative, decompose_sp_phi, reduce_form
from .words import GeneratorWord, eval_word, invert_word, word_from_json, word_in_ideal, word_to_json


class MalformedInput(Exception):
    pass


def _load(arg: str | None) -> Any:
    if arg is None or arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    else:
        with open(arg) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _check_flags(args, ring: RingSpec, dim: int | None = None) -> None:
    if args.ring is not None and ring_from_tag(_tag_arg(args.ring)) != ring:
        raise MalformedInput(f"--ring {args.ring} does not match payload ring {ring.name}")
    if args.n is not None and dim is not None and 2 * args.n != dim:
        raise MalformedInput(f"--n {args.n} does not match payload size {dim}")


def _tag_arg(text: str) -> Any:
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    return text


def _matrix(obj: Any, args) -> Matrix:
    m = Matrix.from_json(obj)
    _check_flags(args, m.ring, m.nrows if m.is_square() else None)
    return m


def _word(obj: Any, args) -> GeneratorWord:
    w = word_from_json(obj)
    _check_flags(args, w.ring, w.dim if w.dim % 2 == 0 else None)
    return w


def _ideal_point(args, ring: RingSpec):
    if args.ideal is None:
        raise MalformedInput("--ideal is required")
    text = args.ideal.strip()
    value = json.loads(text) if text.startswith("[") else text
    return ring(value)


# -- commands ---------------------------------------------------------------


def cmd_pfaffian(args) -> dict:
    m = _matrix(_load(args.inp), args)

    def run():
        pf = pfaffian(m)
        return {"pfaffian": pf.to_json(), "certified": pf * pf == determinant(m)}

    return _guarded("pfaffian", run)


def cmd_is_symplectic(args) -> dict:
    obj = _load(args.inp)
    if "matrix" in obj:
        m = _matrix(obj["matrix"], args)
        phi = Matrix.from_json(obj["phi"], m.ring) if "phi" in obj else psi(m.ring, m.nrows // 2)
    else:
        m = _matrix(obj, args)
        phi = psi(m.ring, m.nrows // 2)

    def run():
        ok = is_symplectic(m, phi)
        # independent route: the form's Gram matrix on the image basis, entry by entry
        cols = [Matrix._trusted(m.ring, [[x] for x in m.col(j)]) for j in range(m.ncols)]
        gram = all((ci.T @ phi @ cj)[0, 0] == phi[i, j] for i, ci in enumerate(cols) for j, cj in enumerate(cols))
        return {"symplectic": ok, "certified": ok == gram}

    return _guarded("is_symplectic", run)


def cmd_reduce_form(args) -> dict:
    phi = _matrix(_load(args.inp), args)

    def run():
        cert = reduce_form(phi)
        return {"certificate": cert.to_json(), "certified": cert.verify()}

    return _guarded("reduce_form", run)


def cmd_factor(args) -> dict:
    S = _matrix(_load(args.inp), args)

    def run():
        w = factor_sp(S)
        return {"word": word_to_json(w), "length": len(w), "certified": eval_word(w) == S}

    return _guarded("factor_sp", run)


def cmd_decompose_phi(args) -> dict:
    obj = _load(args.inp)
    G = _matrix(obj["matrix"], args)
    phi = Matrix.from_json(obj["phi"], G.ring)

    def run():
        w = decompose_sp_phi(G, phi)
        return {"word": word_to_json(w), "length": len(w), "certified": eval_word(w) == G}

    return _guarded("decompose_sp_phi", run)


def cmd_eval_word(args) -> dict:
    w = _word(_load(args.inp), args)

    def run():
        m = eval_word(w)
        inv = eval_word(invert_word(w))
        return {"matrix": m.to_json(), "certified": (inv @ m).is_identity()}

    return _guarded("eval_word", run)


def cmd_verify(args) -> dict:
    obj = _load(args.inp)
    if "certificate" in obj or "epsilon_word" in obj:
        cert = ReductionCertificate.from_json(obj.get("certificate", obj))
        _check_flags(args, cert.ring, cert.phi.nrows)
        return {"kind": "certificate", "certified": cert.verify()}
    w = _word(obj["word"], args)
    m = Matrix.from_json(obj["matrix"], w.ring)

    def run():
        return {"kind": "word", "certified": m.shape == (w.dim, w.dim) and eval_word(w) == m}

    return _guarded("verify", run)


def cmd_relativize(args) -> dict:
    w = _word(_load(args.inp), args)

    def run():
        out = relativize_polynomial_word(w)
        P = w.ring
        ok = eval_word(out) == eval_word(w) and word_in_ideal(out, IdealSpec(P.gen()))
        return {"word": word_to_json(out), "certified": ok}

    return _guarded("relativize", run)


def cmd_substitute(args) -> dict:
    w = _word(_load(args.inp), args)
    if not isinstance(w.ring, PolynomialRing):
        raise MalformedInput("substitute needs a word over a polynomial ring")
    a = _ideal_point(args, w.ring.base)

    def run():
        out = substitute_word(w, a)
        return {"word": word_to_json(out), "certified": eval_word(out) == specialize(eval_word(w), a)}

    return _guarded("substitute", run)


def cmd_decompose_relative(args) -> dict:
    w = _word(_load(args.inp), args)
    if not isinstance(w.ring, PolynomialRing):
        raise MalformedInput("decompose-relative needs a word over a polynomial ring")
    a = _ideal_point(args, w.ring.base)

    def run():
        out = decompose_relative(w, a, side=args.side)
        value = eval_word(out)
        ideal = IdealSpec(a)
        ok = word_in_ideal(out, ideal) and is_congruent_identity(value, ideal)
        return {"word": word_to_json(out), "matrix": value.to_json(), "certified": ok}

    return _guarded("decompose_relative", run)


RANDOM_KINDS = ("se-word", "form", "sp-phi", "unimodular", "skew", "poly-word")


def cmd_random(args) -> dict:
    if args.ring is None or args.n is None:
        raise MalformedInput("random needs --ring and --n")
    ring = ring_from_tag(_tag_arg(args.ring))
    n = args.n
    if n < 1:
        raise MalformedInput("--n must be positive")
    rng = random.Random(args.seed)
    kind = args.kind
    if kind == "se-word":
        w = random_se_word(ring, n, args.length, rng)
        inst: Any = {"word": word_to_json(w), "matrix": eval_word(w).to_json()}
    elif kind == "form":
        inst = random_pf1_form(ring, n, rng).to_json()
    elif kind == "sp-phi":
        G, phi = random_sp_phi(ring, n, rng, length=args.length)
        inst = {"matrix": G.to_json(), "phi": phi.to_json()}
    elif kind == "unimodular":
        inst = [x.to_json() for x in random_unimodular(ring, 2 * n, rng)]
    elif kind == "skew":
        inst = random_skew(ring, 2 * n, rng).to_json()
    else:
        inst = word_to_json(random_vanishing_poly_word(ring, n, rng))
    return {"prng": PRNG_NAME, "seed": args.seed, "kind": kind, "instance": inst, "certified": True}


def _guarded(stage: str, fn: Callable[[], dict]) -> dict:
    try:
        return fn()
    except HypothesisError:
        raise
    except (ValueError, ArithmeticError) as exc:
        raise HypothesisError(stage, str(exc)) from exc


COMMANDS: dict[str, Callable] = {
    "pfaffian": cmd_pfaffian,
    "is-symplectic": cmd_is_symplectic,
    "reduce-form": cmd_reduce_form,
    "factor": cmd_factor,
    "decompose-phi": cmd_decompose_phi,
    "eval-word": cmd_eval_word,
    "verify": cmd_verify,
    "relativize": cmd_relativize,
    "substitute": cmd_substitute,
    "decompose-relative": cmd_decompose_relative,
    "random": cmd_random,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spfactor", description="Certified factorization of symplectic matrices over euclidean domains."
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--in", dest="inp", help="input JSON file, '-' for stdin, or inline JSON")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--ring", help='ring tag: ZZ, QQ, ZZ_half or {"GFpX": p}')
    parser.add_argument("--n", type=int, help="half-size of the symplectic space")
    parser.add_argument("--seed", type=int, default=0, help="64-bit seed for 'random'")
    parser.add_argument("--side", choices=("psi", "phi"), help="output side for decompose-relative")
    parser.add_argument("--ideal", help="ideal generator / substitution point (ring entry encoding)")
    parser.add_argument("--kind", choices=RANDOM_KINDS, default="sp-phi", help="instance kind for 'random'")
    parser.add_argument("--length", type=int, default=10, help="word length for 'random'")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = 0
    try:
        report = {"command": args.command, **COMMANDS[args.command](args)}
    except HypothesisError as exc:
        report = {"command": args.command, "error": str(exc), "stage": exc.stage, "certified": False}
        code = 1
    except (MalformedInput, KeyError, TypeError, ValueError, json.JSONDecodeError, OSError) as exc:
        report = {"command": args.command, "error": f"malformed input: {exc}", "certified": False}
        code = 2
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
