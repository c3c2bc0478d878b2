"""Distinction of generic representations of GL_n over a quadratic extension,
decided on Zelevinsky multisegments."""

__version__ = "0.1.0"

from .core import (
    CuspidalLine,
    Cuspidal,
    LineTable,
    Multisegment,
    Segment,
    St,
    is_isomorphic,
    langlands_sort,
    segment_sign,
    sigma,
    validate_line_table,
)
from .cosets import build_w, check_modulus_identity, enumerate_S, standard_modulus_exponents
from .distinction import (
    brute_force_classify,
    check_conj_selfdual_necessary,
    classify_gl,
    classify_h,
    esq_gl_distinguished,
    esq_h_distinguished,
)
from .dsl import format_source, parse
from .galois import (
    bc_exists,
    condition_A,
    decompose,
    decompose_condition_A_witness,
    eta_trivial,
    is_conjugate_orthogonal,
    main_theorem_check,
    to_wd,
)
from .generic import is_generic
from .jacquet import jacquet

__all__ = [
    "Cuspidal",
    "CuspidalLine",
    "LineTable",
    "Multisegment",
    "Segment",
    "St",
    "bc_exists",
    "brute_force_classify",
    "build_w",
    "check_conj_selfdual_necessary",
    "check_modulus_identity",
    "classify_gl",
    "classify_h",
    "condition_A",
    "decompose",
    "decompose_condition_A_witness",
    "enumerate_S",
    "esq_gl_distinguished",
    "esq_h_distinguished",
    "eta_trivial",
    "format_source",
    "is_conjugate_orthogonal",
    "is_generic",
    "is_isomorphic",
    "jacquet",
    "langlands_sort",
    "main_theorem_check",
    "parse",
    "segment_sign",
    "sigma",
    "standard_modulus_exponents",
    "to_wd",
    "validate_line_table",
]
