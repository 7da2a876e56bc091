from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffqci.algebra.scalars import (
    QuadScalar,
    as_fraction,
    is_rational_square,
    quad,
    scalar_from_json,
    scalar_to_json,
    sqrt_exact,
    squarefree_split,
)

rationals = st.builds(Fraction, st.integers(-999, 999), st.integers(1, 50))
ds = st.sampled_from([-7, -3, -2, -1, 2, 3, 5, 6])


def test_as_fraction_accepts_strings_and_ints():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(" -2 ") == -2
    assert as_fraction(5) == Fraction(5)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


@pytest.mark.parametrize("n, expected", [(12, (2, 3)), (-8, (2, -2)), (49, (7, 1)), (30, (1, 30)), (1, (1, 1))])
def test_squarefree_split(n, expected):
    assert squarefree_split(n) == expected


def test_quad_collapses_to_fraction():
    assert isinstance(quad(3, 0, 2), Fraction)
    assert isinstance(quad(3, 1, 2), QuadScalar)


def test_sqrt_exact():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    r = sqrt_exact(Fraction(-2, 9))
    assert r * r == Fraction(-2, 9)
    assert sqrt_exact(8) == quad(0, 2, 2)
    assert sqrt_exact(0) == 0


def test_is_rational_square():
    assert is_rational_square(Fraction(4, 9))
    assert not is_rational_square(Fraction(2))
    assert not is_rational_square(-1)


def test_mixing_extensions_is_rejected():
    with pytest.raises(ValueError):
        quad(0, 1, 2) + quad(0, 1, 3)


@given(rationals, rationals, rationals, rationals, ds)
def test_field_axioms(a, b, c, e, d):
    x, y = quad(a, b, d), quad(c, e, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if x != 0:
        assert x * x.inverse() == 1 if isinstance(x, QuadScalar) else True
        assert (y / x) * x == y


@given(rationals, rationals, ds)
def test_norm_and_conjugate(a, b, d):
    x = QuadScalar(a, b, d)
    assert x * x.conjugate() == x.norm()


@given(rationals, rationals, ds)
def test_json_round_trip(a, b, d):
    x = quad(a, b, d)
    assert scalar_from_json(scalar_to_json(x)) == x
