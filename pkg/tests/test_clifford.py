import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffqci.algebra.poly import MultiPoly
from cliffqci.clifford import (
    CliffordAlgebra,
    DegenerateSequenceError,
    SymMatrixSeq,
    center_constant,
    center_scale,
    clifford_mul,
    family_seq,
    square_coefficients,
)

from conftest import random_normalized


def y(r, m):
    return MultiPoly.var(r, m)


def test_center_constants():
    assert center_constant(2) == -1
    assert center_constant(3) == Fraction(-9, 2)
    assert center_constant(4) == 36
    s = center_scale(3)
    assert s * s == 1 / center_constant(3)


def test_rewrite_rule_in_S_prime():
    alg = CliffordAlgebra(family_seq(1, 0, 0))
    prod = alg.mul(alg.x(2), alg.x(1))
    expected = -alg.mul(alg.x(1), alg.x(2)) - alg.y(0)
    assert prod == expected


def test_squares_of_generators_are_y():
    F = family_seq(1, 1, 0)
    alg = CliffordAlgebra(F)
    for m in range(3):
        assert alg.mul(alg.x(m), alg.x(m)) == alg.y(m)


def test_square_of_linear_form():
    F = family_seq(1, 1, 0)
    assert square_coefficients([1, 1, 1], F) == (0, 0, 1)
    alg = CliffordAlgebra(F)
    g = alg.linear([1, 1, 1])
    assert alg.mul(g, g) == alg.y(2)


def test_two_variable_center():
    F = SymMatrixSeq([[[2, 0], [0, 0]], [[0, 0], [0, 2]]])
    alg = CliffordAlgebra(F)
    g, c = alg.center_element()
    # x2 x1 = -x1 x2 here, so g = x1 x2 - x2 x1 = 2 x1 x2
    assert g == alg.mul(alg.x(0), alg.x(1)) * 2
    assert c == -1
    assert alg.mul(g, g) == alg.coerce(y(2, 0) * y(2, 1) * -4)
    assert len(alg.center_degree2()) == 2


@pytest.mark.parametrize("abc", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 2, 2), (-1, -1, -1)])
def test_center_identity_family(abc):
    F = family_seq(*abc)
    alg = CliffordAlgebra(F)
    g, c = alg.center_element()
    assert clifford_mul(g, g) == alg.coerce(F.form().det().scale(c))
    assert all(alg.commutator(g, alg.x(i)).is_zero() for i in range(3))


def test_center_identity_S_prime_value():
    # g^2 = -(9/2) * (-2)(y1^3 - 4 y1 y2 y3)
    F = family_seq(1, 0, 0)
    alg = CliffordAlgebra(F)
    g, _ = alg.center_element()
    Y = MultiPoly.gens(3)
    assert alg.mul(g, g) == alg.coerce((Y[0] ** 3 - 4 * Y[0] * Y[1] * Y[2]).scale(9))


@pytest.mark.parametrize("n", [2, 4])
def test_even_center_degree2_is_y_span(n):
    rng = random.Random(n)
    F = random_normalized(n, rng)
    assert not F.form().det().is_zero()
    assert len(CliffordAlgebra(F).center_degree2()) == n


def test_center_rejects_dependent_sequence():
    F = SymMatrixSeq([[[2, 0], [0, 0]], [[4, 0], [0, 0]]])
    with pytest.raises(DegenerateSequenceError):
        CliffordAlgebra(F).center_degree2()


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_associativity(seed):
    rng = random.Random(seed)
    F = random_normalized(3, rng)
    alg = CliffordAlgebra(F)
    a, b, c = (alg.linear([rng.randint(-2, 2) for _ in range(3)]) for _ in range(3))
    assert alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c))


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_anticommutator_matches_form(seed):
    rng = random.Random(seed)
    F = random_normalized(3, rng)
    alg = CliffordAlgebra(F)
    lam = [rng.randint(-3, 3) for _ in range(3)]
    g = alg.linear(lam)
    assert alg.mul(g, g).terms.get((), MultiPoly.zero(3)) == sum(
        (a * y(3, m) for m, a in enumerate(square_coefficients(lam, F))), MultiPoly.zero(3))
