"""Smith normal form of square matrices over Q[t]."""

from .upoly import UniPoly


class DegeneratePencilError(ValueError):
    """The matrix is singular over Q(t), so some invariant factor is zero."""


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... | d_n (monic) of a square UniPoly matrix.

    Raises DegeneratePencilError when the determinant vanishes identically.
    """
    A = [[e if isinstance(e, UniPoly) else UniPoly.const(e) for e in row] for row in matrix]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("smith_normal_form expects a square matrix")
    factors = []
    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if not A[i][j].is_zero() and (best is None or A[i][j].degree < A[best[0]][best[1]].degree):
                        best = (i, j)
            if best is None:
                raise DegeneratePencilError("matrix is singular over Q(t)")
            i, j = best
            A[k], A[i] = A[i], A[k]
            for row in A:
                row[k], row[j] = row[j], row[k]
            p = A[k][k]
            clean = True
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    q, r = divmod(A[i][k], p)
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
                    clean = clean and r.is_zero()
            for j in range(k + 1, n):
                if not A[k][j].is_zero():
                    q, r = divmod(A[k][j], p)
                    for row in A:
                        row[j] = row[j] - q * row[k]
                    clean = clean and r.is_zero()
            if not clean:
                continue
            bad = next(((i, j) for i in range(k + 1, n) for j in range(k + 1, n) if not p.divides(A[i][j])), None)
            if bad is None:
                break
            A[k] = [a + b for a, b in zip(A[k], A[bad[0]])]
        factors.append(A[k][k].monic())
    return factors
