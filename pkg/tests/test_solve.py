from fractions import Fraction

import pytest

from cliffqci.algebra.poly import MultiPoly
from cliffqci.algebra.solve import PositiveDimensionalError, count_solutions, solve_affine, solve_projective

x, y = MultiPoly.gens(2)
X, Y, Z = MultiPoly.gens(3)


def all_points(branches):
    pts, unresolved = [], 0
    for b in branches:
        p, u = b.points()
        pts += p
        unresolved += u
    return pts, unresolved


def test_two_circles():
    # points (0, 1) and (0, -1) and nothing else
    branches = solve_affine([x * x + y * y - 1, (x - 1) * (x - 1) + y * y - 2])
    pts, un = all_points(branches)
    assert un == 0
    assert sorted(pts) == [(0, -1), (0, 1)]


def test_grid_of_known_roots():
    p = (x - 1) * (x - 2) * (x + 3)
    q = (y - Fraction(1, 2)) * (y + 1)
    branches = solve_affine([p, q])
    assert count_solutions(branches) == 6
    pts, _ = all_points(branches)
    assert set(pts) == {(a, b) for a in (1, 2, -3) for b in (Fraction(1, 2), -1)}


def test_irrational_points_are_counted_and_extracted():
    branches = solve_affine([x * x - 2, y - x])
    pts, un = all_points(branches)
    assert count_solutions(branches) == 2 and un == 0
    assert all(a * a == 2 and a == b for a, b in pts)


def test_multiplicities_are_ignored():
    branches = solve_affine([x * x, y * y * y])
    assert count_solutions(branches) == 1


def test_three_variables():
    u, v, w = MultiPoly.gens(3)
    branches = solve_affine([u * u - 1, v * v - 4, w - u - v])
    assert count_solutions(branches) == 4


def test_positive_dimension_is_detected():
    with pytest.raises(PositiveDimensionalError):
        solve_affine([x * y, x * y * (x + 1)])


def test_projective_points():
    # three lines' worth: xyz = 0 meets x + y + z = 0 in three points
    branches = solve_projective([X * Y * Z, X + Y + Z])
    assert count_solutions(branches) == 3


def test_projective_common_component():
    with pytest.raises(PositiveDimensionalError):
        solve_projective([X * Y, X * Z])


def test_overdetermined_system_with_shared_factors():
    # pairwise the equations share a line; all three only meet in the coordinate points
    branches = solve_projective([X * Y, X * Z, Y * Z])
    pts, un = all_points(branches)
    assert count_solutions(branches) == 3 and un == 0
    normal = set()
    for p in pts:
        lead = next(c for c in p if c)
        normal.add(tuple(c / lead for c in p))
    assert normal == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_overdetermined_affine():
    branches = solve_affine([x * (y - 1), (x - 2) * (y + 1), y * y - 1])
    pts, _ = all_points(branches)
    assert sorted(pts) == [(0, -1), (2, 1)]


def test_overdetermined_line_is_positive_dimensional():
    with pytest.raises(PositiveDimensionalError):
        solve_affine([x * (y - 1), (x - 2) * (y - 1), y * y - 1])
