"""Graded Clifford algebras, their centers, and normalization of matrix sequences."""

from .element import (
    CliffordAlgebra,
    CliffordElement,
    center_constant,
    center_scale,
    clifford_mul,
    square_coefficients,
)
from .seq import DegenerateSequenceError, NormalizationWitness, SymMatrixSeq, family_seq, normalize_seq
from .superpotential import Superpotential, skew_presentation, superpotential
