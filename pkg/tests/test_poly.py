from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffqci.algebra.poly import NEG_INF, MultiPoly
from cliffqci.algebra.scalars import quad


def polys(nvars=3, max_terms=5, max_deg=3):
    exp = st.tuples(*[st.integers(0, max_deg)] * nvars)
    coeff = st.integers(-5, 5).map(Fraction)
    return st.dictionaries(exp, coeff, max_size=max_terms).map(lambda t: MultiPoly(nvars, t))


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero(3)


@given(polys(), polys())
def test_divexact_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


@given(polys(), polys(), st.tuples(*[st.integers(-3, 3)] * 3))
def test_evaluation_is_a_homomorphism(p, q, pt):
    pt = [Fraction(v) for v in pt]
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


def test_zero_degree_is_negative_infinity():
    assert MultiPoly.zero(2).degree() == NEG_INF


def test_divexact_rejects_inexact():
    x, y = MultiPoly.gens(2)
    with pytest.raises(ValueError):
        (x * x + y).divexact(x)


def test_substitute_and_partial():
    x, y, z = MultiPoly.gens(3)
    p = x * x * y - 3 * z
    s, t = MultiPoly.gens(2)
    assert p.substitute([s + t, s, t], 2) == (s + t) * (s + t) * s - 3 * t
    assert p.partial(0) == 2 * x * y
    assert p.partial(2) == MultiPoly.constant(3, -3)


def test_evaluate_over_extension():
    x, y = MultiPoly.gens(2)
    i = quad(0, 1, -1)
    assert (x * x + y * y).evaluate([1, i]) == 0


def test_proportionality():
    x, y = MultiPoly.gens(2)
    p = x * x - 2 * x * y
    assert p.scale(Fraction(-3, 2)).proportionality(p) == Fraction(-3, 2)
    assert not p.is_proportional(x * x + 2 * x * y)
    assert not p.is_proportional(MultiPoly.zero(2))


def test_homogeneity_and_format():
    x, y, z = MultiPoly.gens(3)
    p = x * y * z + x ** 3
    assert p.is_homogeneous()
    assert not (p + x).is_homogeneous()
    assert p.format(["x", "y", "z"]) == "x^3 + x*y*z"
