"""Solutions of the Yang-Baxter-like matrix equation ``XAX = AXA`` for 2x2 matrices over GF(q)."""

from .field import FieldCtx, FieldError, FqElem, make_field, parse_field
from .harness import (VerdictReport, check_conjecture, nabla_sets, run_all, verify_companion_ideal,
                      verify_companion_isolated, verify_diagonal_class, verify_jordan_class,
                      verify_one_zero_ideal, verify_similarity_properties)
from .ideal import IdealGens, buchberger, ideal_intersect, ideals_equal, normal_form, ybme_ideal
from .matrix import Mat2, MatrixError, parse_matrix, rational_canonical_form
from .oracle import BACKEND
from .poly import MPoly, PolyRing, parse_poly
from .solver import SolutionSet, brute_force_solutions, predict_cardinality, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FieldCtx", "FieldError", "FqElem", "IdealGens", "MPoly", "Mat2", "MatrixError",
    "PolyRing", "SolutionSet", "VerdictReport", "brute_force_solutions", "buchberger",
    "check_conjecture", "ideal_intersect", "ideals_equal", "make_field", "nabla_sets", "normal_form",
    "parse_field", "parse_matrix", "parse_poly", "predict_cardinality", "rational_canonical_form",
    "run_all", "solve", "verify_companion_ideal", "verify_companion_isolated",
    "verify_diagonal_class", "verify_jordan_class", "verify_one_zero_ideal",
    "verify_similarity_properties", "ybme_ideal",
]
