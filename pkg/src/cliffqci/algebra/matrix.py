"""Matrices of polynomials: determinants, minors and resultants."""

from fractions import Fraction
from itertools import combinations, permutations

from .poly import MultiPoly
from .upoly import UniPoly

# Fraction-free elimination is used up to this size, cofactor expansion above.
BAREISS_MAX = 6


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        return a.divexact(b)
    if isinstance(a, UniPoly):
        q, r = divmod(a, b)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q
    return a / b


def bareiss_det(rows, zero, one):
    """Determinant over an integral domain using exact divisions only."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if M[i][k] != zero), None)
            if swap is None:
                return zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pk - M[i][k] * M[k][j]
                M[i][j] = _exact_div(num, prev) if prev != one else num
            M[i][k] = zero
        prev = pk
    return M[n - 1][n - 1] if sign > 0 else -M[n - 1][n - 1]


def cofactor_det(rows, zero, one):
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = zero
    for j in range(n):
        if rows[0][j] == zero:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def leibniz_det(rows, zero, one):
    """Permutation-sum determinant; slow, used as an independent check."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i, p in enumerate(perm):
            term = term * rows[i][p]
        total = total - term if inv % 2 else total + term
    return total


class PolyMatrix:
    """Rectangular matrix with MultiPoly entries over a common ring."""

    def __init__(self, rows, nvars=None):
        rows = [list(r) for r in rows]
        if nvars is None:
            nvars = next(e.nvars for r in rows for e in r if isinstance(e, MultiPoly))
        self.nvars = nvars
        self.rows = [[e if isinstance(e, MultiPoly) else MultiPoly.constant(nvars, e) for e in r] for r in rows]
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("ragged matrix")

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_symmetric(self):
        n, m = self.shape
        return n == m and all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def submatrix(self, rowset, colset):
        return PolyMatrix([[self.rows[i][j] for j in colset] for i in rowset], self.nvars)

    def det(self):
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        zero = MultiPoly.zero(self.nvars)
        one = MultiPoly.constant(self.nvars, 1)
        if n <= BAREISS_MAX:
            return bareiss_det(self.rows, zero, one)
        return cofactor_det(self.rows, zero, one)

    def minors(self, s):
        """All s x s minors, ordered lexicographically by (row set, column set)."""
        n, m = self.shape
        if not 1 <= s <= min(n, m):
            raise ValueError(f"minor size {s} out of range for a {n}x{m} matrix")
        return [self.submatrix(r, c).det() for r in combinations(range(n), s) for c in combinations(range(m), s)]

    def evaluate(self, point):
        return [[e.evaluate(point) for e in r] for r in self.rows]

    def substitute(self, images, nvars):
        return PolyMatrix([[e.substitute(images, nvars) for e in r] for r in self.rows], nvars)

    def format(self, names=None):
        return "[" + "; ".join(", ".join(e.format(names) for e in r) for r in self.rows) + "]"


def sylvester_matrix(p, q, var):
    """Sylvester matrix of p and q viewed as polynomials in variable ``var``."""
    cp, cq = p.coeffs_in(var), q.coeffs_in(var)
    m, n = max(cp), max(cq)
    zero = MultiPoly.zero(p.nvars)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in cp.items():
            row[i + m - k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in cq.items():
            row[i + n - k] = c
        rows.append(row)
    return PolyMatrix(rows, p.nvars)


def resultant(p, q, var):
    """Sylvester resultant of p and q with respect to variable ``var``."""
    if p.is_zero() or q.is_zero():
        return MultiPoly.zero(p.nvars)
    m, n = p.degree_in(var), q.degree_in(var)
    if m == 0 and n == 0:
        raise ValueError("resultant of two polynomials free of the eliminated variable")
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    return sylvester_matrix(p, q, var).det()


def uni_resultant(p, q):
    """Resultant of two univariate polynomials, as a Fraction."""
    r = resultant(p.to_multipoly(), q.to_multipoly(), 0)
    return r.constant_term() if r.is_constant() else Fraction(0)
