"""Certified generator words for symplectic groups over euclidean domains."""

from .errors import HypothesisError
from .forms import psi, sigma
from .lingroup import NotUnimodularError, row_transvection_word, um_to_e1
from .matrices import (
    IdealSpec,
    Matrix,
    block_perp,
    determinant,
    inverse_unit_det,
    is_congruent_identity,
    is_symplectic,
    pfaffian,
    reduce_mod,
)
from .rings import (
    GFpX,
    QQ,
    ZZ,
    ZZ_half,
    PolynomialRing,
    RingElement,
    RingSpec,
    div_rem,
    gcd_ext,
    halve,
    invert_unit,
    is_unit,
    ring_from_tag,
)
from .symplectic import (
    check_identity,
    factor_sp,
    relativize_polynomial_word,
    rewrite_to_border,
    se,
    substitute_word,
)
from .vaserstein import (
    ReductionCertificate,
    conjugate_word,
    decompose_relative,
    decompose_sp_phi,
    extract_form_data,
    reduce_form,
)
from .words import (
    Conj,
    GeneratorWord,
    LinE,
    SymSE,
    VasC,
    VasR,
    eval_word,
    invert_word,
    simplify,
    word_in_ideal,
)

__version__ = "0.1.0"
