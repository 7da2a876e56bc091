import pytest

from cliffqci.algebra import linalg
from cliffqci.clifford import SymMatrixSeq, skew_presentation, superpotential
from cliffqci.quadratic import build_SF

from conftest import AMBIENTS
from cliffqci.clifford import family_seq


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_family_superpotentials(name):
    P = build_SF(family_seq(*AMBIENTS[name]))
    w = superpotential(P)
    assert w is not None
    assert w.is_symmetric()
    assert w.calabi_yau
    assert linalg.span_equal(w.derivative_span(1), P.vectors(), 9)


def test_skew_fixture_has_none():
    assert superpotential(skew_presentation(3, 2)) is None


def test_commutative_ring_superpotential():
    # q = -1: x_i x_j + x_j x_i, symmetric relations
    w = superpotential(skew_presentation(3, -1))
    assert w is not None and w.is_symmetric()


def test_four_variables():
    F = SymMatrixSeq([[[2 if i == j == m else 0 for j in range(4)] for i in range(4)] for m in range(4)])
    w = superpotential(F)
    assert w is not None and len(w.terms) == 24 and not w.calabi_yau
