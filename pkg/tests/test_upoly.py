from fractions import Fraction

from hypothesis import given, strategies as st

from cliffqci.algebra.scalars import QuadScalar
from cliffqci.algebra.upoly import (
    UniPoly,
    coprime_basis,
    distinct_root_count,
    exact_roots,
    multiplicity,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)

t = UniPoly.x()
upolys = st.lists(st.integers(-6, 6), max_size=6).map(UniPoly)
small_roots = st.lists(st.builds(Fraction, st.integers(-20, 20), st.integers(1, 4)), min_size=1, max_size=5)


@given(upolys, upolys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(upolys, upolys)
def test_xgcd_bezout(a, b):
    g, s, u = poly_xgcd(a, b)
    assert s * a + u * b == g
    if not g.is_zero():
        assert g.divides(a) and g.divides(b)


@given(small_roots)
def test_rational_roots_recovered(roots):
    p = UniPoly.from_roots(roots)
    assert rational_roots(p) == sorted(set(roots))
    assert distinct_root_count(p) == len(set(roots))


@given(small_roots)
def test_yun_decomposition_oracle(roots):
    p = UniPoly.from_roots(roots)
    parts = squarefree_decomposition(p)
    prod = UniPoly.const(1)
    for k, f in parts.items():
        prod = prod * f ** k
    assert prod == p.monic()
    # multiplicities agree with a direct count
    for r in set(roots):
        assert multiplicity(UniPoly((-r, 1)), p) == roots.count(r)
        assert UniPoly((-r, 1)).divides(parts[roots.count(r)])


def test_squarefree_part():
    p = (t - 1) ** 3 * (t + 2)
    assert squarefree_part(p) == ((t - 1) * (t + 2))


def test_coprime_basis_refines():
    a = (t - 1) * (t - 2)
    b = (t - 2) * (t - 3)
    basis = coprime_basis([a, b])
    assert sorted(f.coeffs for f in basis) == sorted(f.coeffs for f in [t - 1, t - 2, t - 3])
    for f in basis:
        for g in basis:
            if f is not g:
                assert poly_gcd(f, g).degree == 0


def test_exact_roots_quadratic_extension():
    roots, rest = exact_roots((t * t - 2) * (t - 1))
    assert rest == UniPoly.const(1)
    assert Fraction(1) in roots
    irr = [r for r in roots if isinstance(r, QuadScalar)]
    assert len(irr) == 2 and all(r * r == 2 for r in irr)


def test_exact_roots_leaves_irreducible_cubic():
    roots, rest = exact_roots(t ** 3 - 2)
    assert roots == [] and rest.degree == 3
