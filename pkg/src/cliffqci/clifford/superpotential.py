"""Symmetric superpotentials of quadratic algebras in at most four variables."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from ..algebra import linalg
from ..quadratic import QuadraticPresentation, build_SF, quadratic_dual
from .seq import SymMatrixSeq

MAX_VARIABLES = 4


@dataclass
class Superpotential:
    """w in V^{(x) n} with the n-2 fold partial derivatives of w spanning R."""

    n: int
    terms: dict

    @property
    def calabi_yau(self):
        # twisted-Calabi-Yau parity: the symmetric potential is a genuine one for odd n
        return self.n % 2 == 1

    def derivative_span(self, depth):
        """Slices (psi (x) id)(w) for all words psi of the given length."""
        n = self.n
        rest = n - depth
        out = []
        for pre in product(range(n), repeat=depth):
            out.append([self.terms.get(pre + tail, Fraction(0)) for tail in product(range(n), repeat=rest)])
        return out

    def is_symmetric(self):
        return all(self.terms.get(tuple(sorted(w)), Fraction(0)) == c for w, c in self.terms.items())


def superpotential(P):
    """Return the symmetric superpotential of P, or None when none exists.

    P is a QuadraticPresentation or a SymMatrixSeq (then S^F is used).
    """
    if isinstance(P, SymMatrixSeq):
        P = build_SF(P)
    n = P.n
    if n > MAX_VARIABLES:
        raise ValueError(f"superpotentials are computed for at most {MAX_VARIABLES} variables")
    perp = [M for M in quadratic_dual(P).relations]
    multisets = list(combinations_with_replacement(range(n), n))
    col = {m: k for k, m in enumerate(multisets)}
    rows = []
    for i in range(n - 1):
        j = n - 2 - i
        for pre in product(range(n), repeat=i):
            for post in product(range(n), repeat=j):
                for rho in perp:
                    row = [Fraction(0)] * len(multisets)
                    for a in range(n):
                        for b in range(n):
                            if rho[a][b]:
                                row[col[tuple(sorted(pre + (a, b) + post))]] += rho[a][b]
                    rows.append(row)
    kernel = linalg.nullspace(rows, len(multisets)) if rows else linalg.identity(len(multisets))
    if not kernel:
        return None
    candidates = list(kernel)
    if len(kernel) > 1:
        candidates.append([sum(c) for c in zip(*kernel)])
    R = P.vectors()
    for v in candidates:
        terms = {}
        for word in product(range(n), repeat=n):
            c = v[col[tuple(sorted(word))]]
            if c:
                terms[word] = c
        w = Superpotential(n, terms)
        if linalg.span_equal(w.derivative_span(n - 2), R, n * n):
            return w
    return None


def skew_presentation(n, q):
    """Relations x_i x_j - q x_j x_i (i < j), a fixture whose relations are not symmetric."""
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            M = [[Fraction(0)] * n for _ in range(n)]
            M[i][j] = Fraction(1)
            M[j][i] = -Fraction(q)
            rels.append(M)
    return QuadraticPresentation(n, rels)
