"""Exact linear algebra over Q or Q(sqrt d): row reduction, kernels, spans."""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    A = [list(r) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = ONE / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0}."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(rows, ncols=None):
    return rref(rows, ncols)[0]


def span_equal(rows1, rows2, ncols):
    return rref(rows1, ncols)[0] == rref(rows2, ncols)[0]


def in_span(vec, rows, ncols):
    return rank(list(rows) + [vec], ncols) == rank(rows, ncols)


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def mat_mul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), ZERO) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in A]


def inverse(A):
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(n))]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def det(A):
    """Determinant by elimination over a field."""
    A = [list(r) for r in A]
    n = len(A)
    sign = 1
    out = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        out = out * A[c][c]
        inv = ONE / A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return out * sign


class SparseEchelon:
    """Incremental echelon basis of sparse vectors ``{column: value}``.

    The pivot of each stored row is its largest column, so the normal form
    returned by :meth:`reduce` is unique: it is the representative of the
    coset supported on non-pivot columns.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        v = {k: a for k, a in vec.items() if a}
        rows = self.rows
        while True:
            hits = [c for c in v if c in rows]
            if not hits:
                return v
            c = max(hits)
            f = v[c]
            for k, a in rows[c].items():
                nv = v.get(k, ZERO) - f * a
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)

    def add(self, vec):
        """Insert vec; returns False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        c = max(v)
        inv = ONE / v[c]
        self.rows[c] = {k: a * inv for k, a in v.items()}
        return True

    def pivots(self):
        return set(self.rows)
