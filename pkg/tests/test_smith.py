import random
from itertools import combinations

import pytest

from cliffqci.algebra.smith import DegeneratePencilError, smith_normal_form
from cliffqci.algebra.upoly import UniPoly, poly_gcd
from cliffqci.algebra.matrix import leibniz_det

t = UniPoly.x()
one, zero = UniPoly.const(1), UniPoly()


def determinantal_divisor_oracle(A):
    """Invariant factors as quotients D_k / D_(k-1) of gcds of k x k minors."""
    n = len(A)
    D = [one]
    for k in range(1, n + 1):
        g = zero
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                g = poly_gcd(g, leibniz_det([[A[i][j] for j in cols] for i in rows], zero, one))
        D.append(g.monic())
    return [D[k] // D[k - 1] for k in range(1, n + 1)]


def test_diagonal_is_fixed():
    assert smith_normal_form([[t, zero, zero], [zero, t, zero], [zero, zero, t]]) == [t, t, t]


def test_nilpotent_jordan_block():
    # t*I - J_3(0)
    A = [[t, -one, zero], [zero, t, -one], [zero, zero, t]]
    assert smith_normal_form(A) == [one, one, t ** 3]


def test_singular_matrix_raises():
    with pytest.raises(DegeneratePencilError):
        smith_normal_form([[t, t], [t, t]])


@pytest.mark.parametrize("seed", range(12))
def test_matches_determinantal_divisors(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    while True:
        A = [[UniPoly([rng.randint(-2, 2) for _ in range(rng.randint(0, 2))]) for _ in range(n)] for _ in range(n)]
        if not leibniz_det(A, zero, one).is_zero():
            break
    got = smith_normal_form(A)
    assert got == determinantal_divisor_oracle(A)
    for a, b in zip(got, got[1:]):
        assert a.divides(b)


def test_pencil_with_repeated_eigenvalue():
    # t*I - diag(J_2(1), 1): invariant factors 1, t-1, (t-1)^2
    A = [[t - 1, -one, zero], [zero, t - 1, zero], [zero, zero, t - 1]]
    assert smith_normal_form(A) == [one, t - 1, (t - 1) ** 2]
