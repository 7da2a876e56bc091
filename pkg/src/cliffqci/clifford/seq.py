"""Sequences of symmetric matrices and their normal forms under mixing and congruence."""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import linalg
from ..algebra.matrix import PolyMatrix
from ..algebra.poly import MultiPoly
from ..algebra.scalars import as_fraction


class DegenerateSequenceError(ValueError):
    """The matrices of a sequence are linearly dependent."""


class SymMatrixSeq:
    """A sequence F = (F_1, ..., F_r) of symmetric n x n rational matrices."""

    def __init__(self, mats):
        mats = [[[as_fraction(x) for x in row] for row in M] for M in mats]
        if not mats:
            raise ValueError("empty matrix sequence")
        n = len(mats[0])
        for M in mats:
            if len(M) != n or any(len(row) != n for row in M):
                raise ValueError("all matrices must be square of the same size")
            if any(M[i][j] != M[j][i] for i in range(n) for j in range(i)):
                raise ValueError("matrices must be symmetric")
        self.mats = tuple(tuple(tuple(row) for row in M) for M in mats)
        self.n = n

    @property
    def r(self):
        return len(self.mats)

    def __len__(self):
        return len(self.mats)

    def __getitem__(self, m):
        return self.mats[m]

    def __iter__(self):
        return iter(self.mats)

    def __eq__(self, other):
        return isinstance(other, SymMatrixSeq) and self.mats == other.mats

    def __hash__(self):
        return hash(self.mats)

    def __repr__(self):
        return f"SymMatrixSeq({[[list(map(str, row)) for row in M] for M in self.mats]})"

    def flat(self):
        return [[x for row in M for x in row] for M in self.mats]

    def is_independent(self):
        return linalg.rank(self.flat(), self.n * self.n) == self.r

    def require_independent(self):
        if not self.is_independent():
            raise DegenerateSequenceError("the matrices F_1, ..., F_r are linearly dependent")

    def form(self):
        """The matrix sum_m F_m y_m with entries linear forms in y_1..y_r."""
        y = MultiPoly.gens(self.r)
        rows = [[sum((M[i][j] * y[m] for m, M in enumerate(self.mats)), MultiPoly.zero(self.r))
                 for j in range(self.n)] for i in range(self.n)]
        return PolyMatrix(rows, self.r)

    def diagonal_table(self):
        """Rows indexed by m: the diagonal of F_m."""
        return [[M[i][i] for i in range(self.n)] for M in self.mats]

    def is_normalized(self):
        if self.r != self.n:
            return False
        return all(M[j][j] == (2 if i == j else 0) for i, M in enumerate(self.mats) for j in range(self.n))

    def bar(self):
        """Same off-diagonal entries, diagonal entries (F_m)_ii = 2 if i == m else 0."""
        if self.r != self.n:
            raise ValueError("diagonal replacement needs as many matrices as variables")
        return SymMatrixSeq([[[Fraction(2 if i == j == m else 0) if i == j else M[i][j]
                               for j in range(self.n)] for i in range(self.n)]
                             for m, M in enumerate(self.mats)])

    def mix(self, A):
        """F'_j = sum_i A[i][j] F_i."""
        r, n = self.r, self.n
        return SymMatrixSeq([[[sum((A[i][j] * self.mats[i][a][b] for i in range(r)), Fraction(0))
                               for b in range(n)] for a in range(n)] for j in range(len(A[0]))])

    def congruence(self, P):
        """F'_j = P^T F_j P."""
        Pt = linalg.transpose(P)
        return SymMatrixSeq([linalg.mat_mul(linalg.mat_mul(Pt, [list(r) for r in M]), P) for M in self.mats])

    def to_json(self):
        return [[[str(x) for x in row] for row in M] for M in self.mats]


@dataclass
class NormalizationWitness:
    """F' = T^T (F . S) T: first mix with S (F''_j = sum_i S[i][j] F_i), then congruence by T."""

    S: list
    T: list

    def apply(self, F):
        return F.mix(self.S).congruence(self.T)

    def to_json(self):
        return {"s": [[str(x) for x in r] for r in self.S], "t": [[str(x) for x in r] for r in self.T]}


def _shear(n, entries):
    P = linalg.identity(n)
    for (i, j), v in entries.items():
        P[i][j] = Fraction(v)
    return P


def _swap(n, a, b):
    P = linalg.identity(n)
    P[a][a] = P[b][b] = Fraction(0)
    P[a][b] = P[b][a] = Fraction(1)
    return P


def normalize_seq(F):
    """Bring F into normalized form, where the diagonal of F_m is twice the m-th unit vector.

    Works over Q: the inductive pivot is scaled away by mixing instead of by a
    square root. Returns (F', witness) with witness.apply(F) == F'.
    """
    if F.r != F.n:
        raise ValueError("normalization needs a sequence of n matrices of size n")
    F.require_independent()
    n = F.n
    if F.is_normalized():
        return F, NormalizationWitness(linalg.identity(n), linalg.identity(n))
    G = F
    S = linalg.identity(n)
    T = linalg.identity(n)

    def mix(A):
        nonlocal G, S
        G = G.mix(A)
        S = linalg.mat_mul(S, A)

    def congr(P):
        nonlocal G, T
        G = G.congruence(P)
        T = linalg.mat_mul(T, P)

    for m in range(n):
        for i in range(m):
            c = G[m][i][i]
            if c:
                A = linalg.identity(n)
                A[i][m] = -c
                mix(A)
        M = G[m]
        if not any(M[i][j] for i in range(m, n) for j in range(m, n)):
            hit = next(((i, j) for i in range(m) for j in range(m, n) if M[i][j]), None)
            if hit is not None:
                congr(_shear(n, {hit: 1}))
            else:
                i, k = next((i, k) for i in range(m) for k in range(i + 1, m) if M[i][k])
                congr(_shear(n, {(i, m): 1, (k, m): 1}))
            M = G[m]
        diag = next((k for k in range(m, n) if M[k][k]), None)
        if diag is not None:
            if diag != m:
                congr(_swap(n, m, diag))
        else:
            k, l = next((k, l) for k in range(m, n) for l in range(k + 1, n) if M[k][l])
            if k != m:
                congr(_swap(n, m, k))
            congr(_shear(n, {(l, m): 1}))
        v = G[m][m][m]
        A = linalg.identity(n)
        A[m][m] = 1 / v
        mix(A)
    D = G.diagonal_table()
    mix(linalg.transpose([[2 * x for x in row] for row in linalg.inverse(D)]))
    return G, NormalizationWitness(S, T)


def family_seq(a, b, c):
    """Normalized F of the three-variable family with relations yz+zy+a x^2, zx+xz+b y^2, xy+yx+c z^2."""
    a, b, c = map(as_fraction, (a, b, c))
    z = Fraction(0)
    two = Fraction(2)
    return SymMatrixSeq([
        [[two, z, z], [z, z, -a], [z, -a, z]],
        [[z, z, -b], [z, two, z], [-b, z, z]],
        [[z, -c, z], [-c, z, z], [z, z, two]],
    ])
