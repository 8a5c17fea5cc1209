"""Generalized inverses, decompositions and transfer-theorem checks over finite rings."""

from .inverses import (
    CleanDecomposition,
    DrazinResult,
    PolarDecomposition,
    classify,
    decomposition_to_inverse,
    drazin,
    group_inverse,
    polar_decomposition,
    strongly_clean_decompositions,
)
from .ring import (
    Element,
    FiniteRing,
    arithmetic,
    build_corner,
    build_matrix_ring,
    build_product,
    build_upper_triangular,
    build_zmod,
    format_element,
    parse_element,
    validate_ring,
)
from .ringspec import build_ring
from .structure import structure
from .verifier import VerificationReport, consistency_suite, run_theorem, search_counterexample

__version__ = "0.1.0"
