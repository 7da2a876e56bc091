"""Exact polynomial algebra used throughout the package."""

from .linalg import SparseEchelon, inverse, nullspace, rank, rref, span_equal
from .matrix import PolyMatrix, resultant, uni_resultant
from .poly import NEG_INF, MultiPoly
from .scalars import QuadScalar, as_fraction, quad, sqrt_exact
from .smith import DegeneratePencilError, smith_normal_form
from .solve import PositiveDimensionalError, SolutionBranch, solve_affine, solve_projective
from .upoly import (
    UniPoly,
    coprime_basis,
    distinct_root_count,
    exact_roots,
    poly_gcd,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)
