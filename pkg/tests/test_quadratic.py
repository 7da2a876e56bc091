import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cliffqci.algebra import linalg
from cliffqci.algebra.poly import MultiPoly
from cliffqci.clifford import SymMatrixSeq, family_seq
from cliffqci.quadratic import (
    CentralQuadric,
    QuadraticPresentation,
    bf_quadrics,
    build_BF,
    build_SF,
    dual_of_quotient,
    expected_regular_series,
    family_presentation,
    hilbert_truncated,
    is_central,
    is_regular_sequence,
    is_zero_in_degree2,
    iterated_dual,
    koszul_reciprocity_holds,
    quadratic_dual,
)

from conftest import AMBIENTS


def brute_hilbert(n, relations, D):
    """dim T(V)_d / I_d by spanning I_d with all u (x) r (x) v and taking ranks."""
    out = [1, n][:D + 1]
    for d in range(2, D + 1):
        words = {w: k for k, w in enumerate(product(range(n), repeat=d))}
        rows = []
        for pos in range(d - 1):
            for pre in product(range(n), repeat=pos):
                for post in product(range(n), repeat=d - 2 - pos):
                    for M in relations:
                        row = [Fraction(0)] * len(words)
                        for i in range(n):
                            for j in range(n):
                                if M[i][j]:
                                    row[words[pre + (i, j) + post]] += M[i][j]
                        rows.append(row)
        out.append(len(words) - (linalg.rank(rows, len(words)) if rows else 0))
    return out


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_hilbert_matches_brute_force_oracle(name):
    P = build_SF(family_seq(*AMBIENTS[name]))
    assert hilbert_truncated(P, 4) == brute_hilbert(3, P.relations, 4)


def test_hilbert_with_quotient_matches_oracle():
    F = family_seq(1, 0, 0)
    P = build_SF(F)
    f = CentralQuadric.from_squares([1, 1, 1]).coeffs
    assert hilbert_truncated(P, 4, [f]) == brute_hilbert(3, list(P.relations) + [f], 4)


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_hilbert_random_presentation_oracle(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    k = rng.randint(1, n * n - 1)
    rows = [[Fraction(rng.randint(-1, 1)) for _ in range(n * n)] for _ in range(k)]
    rows = linalg.row_space_basis(rows, n * n)
    if not rows:
        return
    P = QuadraticPresentation.from_vectors(n, rows)
    assert hilbert_truncated(P, 4) == brute_hilbert(n, P.relations, 4)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_dual_involution_and_dimension(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    rows = linalg.row_space_basis([[Fraction(rng.randint(-2, 2)) for _ in range(n * n)]
                                   for _ in range(rng.randint(1, n * n))], n * n)
    if not rows:
        return
    P = QuadraticPresentation.from_vectors(n, rows)
    Q = quadratic_dual(P)
    assert P.dim + Q.dim == n * n
    assert quadratic_dual(Q).same_span(P)


def test_dual_of_SF_is_BF(ambient):
    _, F = ambient
    assert quadratic_dual(build_SF(F)).same_span(build_BF(F))


def test_bf_quadrics_of_S_prime():
    F = family_seq(1, 0, 0)
    u = MultiPoly.gens(3)
    assert bf_quadrics(F) == [2 * u[0] * u[0] - 2 * u[1] * u[2], 2 * u[1] * u[1], 2 * u[2] * u[2]]


def test_family_relations_match_SF():
    assert build_SF(family_seq(1, 1, 0)).same_span(family_presentation(1, 1, 0))


def test_exterior_algebra_series():
    P = quadratic_dual(QuadraticPresentation.commutative_quotient(3))
    assert hilbert_truncated(P, 6) == [1, 3, 3, 1, 0, 0, 0]


def test_koszul_reciprocity(ambient):
    _, F = ambient
    assert koszul_reciprocity_holds(build_SF(F), 6)


def test_base_point_free_criterion():
    # B(F) has h_d = 0 beyond n exactly when F has no base point
    F = family_seq(1, 1, 0)
    assert hilbert_truncated(build_BF(F), 5) == [1, 3, 3, 1, 0, 0]
    bad = SymMatrixSeq([[[1, 0, 0], [0, 0, 0], [0, 0, 0]],
                        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
                        [[0, 0, 0], [0, 1, 0], [0, 0, 0]]])
    h = hilbert_truncated(build_BF(bad), 5)
    assert h[4] > 0 and h != [1, 3, 3, 1, 0, 0]


def test_centrality(ambient):
    _, F = ambient
    P = build_SF(F)
    for a in ([1, 0, 0], [0, 1, 0], [1, 2, 3]):
        assert is_central(P, CentralQuadric.from_squares(a))
    xy = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    assert not is_central(P, xy)


def test_zero_in_degree_two():
    P = QuadraticPresentation.commutative_quotient(2)
    assert is_zero_in_degree2(P, [[0, 1], [-1, 0]])
    assert not is_zero_in_degree2(P, [[1, 0], [0, 0]])


def test_regular_sequence_in_family(ambient):
    _, F = ambient
    P = build_SF(F)
    fs = [CentralQuadric.from_squares(a) for a in ([1, 0, 0], [0, 1, 0])]
    rep = is_regular_sequence(P, fs, 6)
    assert rep.regular
    assert rep.observed == expected_regular_series([1, 3, 6, 10, 15, 21, 28], 2, 6)
    assert is_regular_sequence(P, fs[::-1], 6).regular


def test_commutative_counterexample_fails():
    P = QuadraticPresentation.commutative_quotient(3)
    fs = [CentralQuadric([[1, 0, 0], [0, 0, 0], [0, 0, 0]]),
          CentralQuadric([[0, Fraction(1, 2), 0], [Fraction(1, 2), 0, 0], [0, 0, 0]])]
    rep = is_regular_sequence(P, fs, 6)
    assert all(rep.central)
    assert not rep.regular
    # u1^2, u1u2 share the factor u1; the first disagreement is in degree 3
    assert rep.first_mismatch == 3
    assert (rep.observed[3], rep.expected[3]) == (5, 4)


def test_order_sensitive_fixture():
    # yz - zy - x^2, zx - xz, xy - yx: y^2 is central only modulo x^2
    A = QuadraticPresentation(3, [[[-1, 0, 0], [0, 0, 1], [0, -1, 0]],
                                  [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
                                  [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]])
    x2 = CentralQuadric.from_squares([1, 0, 0])
    y2 = CentralQuadric.from_squares([0, 1, 0])
    assert is_central(A, x2)
    assert not is_central(A, y2)
    assert is_central(A.with_relations([x2.coeffs]), y2)
    rep = is_regular_sequence(A, [x2, y2], 6)
    assert rep.central == [True, False] and not rep.regular


def test_regularity_floor():
    P = build_SF(family_seq(0, 0, 0))
    fs = [CentralQuadric.from_squares(a) for a in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    with pytest.raises(ValueError):
        is_regular_sequence(P, fs, 6)
    assert is_regular_sequence(P, fs, 8).observed == [1, 3, 3, 1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("a", [[1, 0, 0], [1, 1, 1], [3, 3, 4]])
def test_dual_of_quotient_complement_independent(a):
    P = build_SF(family_seq(1, 1, 0))
    f = CentralQuadric.from_squares(a)
    Q1, d1 = dual_of_quotient(P, f, "lex")
    Q2, d2 = dual_of_quotient(P, f, "revlex")
    assert Q1.same_span(Q2)
    # f^! is determined up to scalar modulo the relations of (A/(f))^!
    n2 = 9
    v1 = [x for row in d1.coeffs for x in row]
    v2 = [x for row in d2.coeffs for x in row]
    assert linalg.rank(Q1.vectors() + [v1, v2], n2) == Q1.dim + 1
    assert is_central(Q1, d1)


def test_dual_of_quotient_rejects_zero():
    P = QuadraticPresentation.commutative_quotient(2)
    with pytest.raises(ValueError):
        dual_of_quotient(P, [[0, 1], [-1, 0]])


@pytest.mark.parametrize("squares", [[[1, 0, 0]], [[1, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
def test_iterated_dual_is_commutative(squares):
    P = build_SF(family_seq(0, 0, 0))
    Q = iterated_dual(P, [CentralQuadric.from_squares(a) for a in squares])
    assert Q.commutative
    assert len(Q.commutative_quadrics()) == 3 - len(squares)
