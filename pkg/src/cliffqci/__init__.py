"""Exact computations with graded Clifford algebras and their quotients by central quadrics."""

from .classify import classify_all, classify_quotient, segre_symbol
from .clifford import CliffordAlgebra, SymMatrixSeq, family_seq, normalize_seq, superpotential
from .geometry import PointVariety, quotient_geometry
from .quadratic import QuadraticPresentation, build_SF, hilbert_truncated, is_regular_sequence, quadratic_dual

__all__ = [
    "CliffordAlgebra",
    "PointVariety",
    "QuadraticPresentation",
    "SymMatrixSeq",
    "build_SF",
    "classify_all",
    "classify_quotient",
    "family_seq",
    "hilbert_truncated",
    "is_regular_sequence",
    "normalize_seq",
    "quadratic_dual",
    "quotient_geometry",
    "segre_symbol",
    "superpotential",
]
