"""Point varieties, the automorphism sigma, characteristic varieties and the double cover Phi.

Everything here is for three generators. The point variety of a quadratic
algebra with relations M(x) x is the curve E = V(det M(x)) in P^2; for a
point p of E with rank M(p) = 2, sigma(p) spans the kernel of M(p).
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math

from .algebra import linalg
from .algebra.matrix import PolyMatrix
from .algebra.poly import MultiPoly
from .algebra.solve import PositiveDimensionalError, solve_projective
from .algebra.upoly import UniPoly, distinct_root_count, exact_roots, poly_gcd
from .clifford.element import square_coefficients
from .clifford.seq import SymMatrixSeq
from .quadratic import build_SF

INF = math.inf


class NotAGraphError(ValueError):
    """M(p) has rank at most one, so sigma(p) is not a single point."""


class IndeterminateImageError(ValueError):
    """p * sigma(p) vanishes coordinatewise."""


class ProjPoint:
    """Point of projective space, scaled so that its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = list(coords)
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = Fraction(1) / lead
        self.coords = tuple(c * inv for c in coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def is_rational(self):
        return all(isinstance(c, Fraction) for c in self.coords)


def multilinearize(P):
    """3 x 3 matrix M(x) of linear forms with relations = M(x) (x_1, x_2, x_3)^T."""
    n = P.n
    x = MultiPoly.gens(n)
    rows = []
    for C in P.relations:
        rows.append([sum((C[i][j] * x[i] for i in range(n) if C[i][j]), MultiPoly.zero(n)) for j in range(n)])
    return PolyMatrix(rows, n)


class PointVariety:
    """E and sigma for a quadratic algebra on three generators with three relations."""

    def __init__(self, P):
        if isinstance(P, SymMatrixSeq):
            P = build_SF(P)
        if P.n != 3 or P.dim != 3:
            raise ValueError("point varieties are computed for 3 generators and 3 relations")
        self.presentation = P
        self.M = multilinearize(P)
        self.curve = self.M.det()

    def contains(self, p):
        return self.curve.evaluate(list(p)) == 0

    def relation_values(self, p, q):
        """(M(p) q)_k, the relations evaluated at the pair (p, q)."""
        Mp = self.M.evaluate(list(p))
        return linalg.mat_vec(Mp, list(q))

    def sigma(self, p):
        Mp = self.M.evaluate(list(p))
        ker = linalg.nullspace(Mp, 3)
        if not ker:
            raise ValueError(f"{p!r} is not on the point variety")
        if len(ker) > 1:
            raise NotAGraphError(f"M(p) has rank {3 - len(ker)} at {p!r}")
        return ProjPoint(ker[0])

    def phi(self, p):
        q = self.sigma(p)
        prod = [a * b for a, b in zip(ProjPoint(p), q)]
        if all(c == 0 for c in prod):
            raise IndeterminateImageError(f"p * sigma(p) vanishes at {p!r}")
        return ProjPoint(prod)


def char_minors(F, s):
    """The s x s minors of sum_m F_m y_m; X^(s)(F) is their common zero set."""
    return F.form().minors(s)


def char_cubic(F):
    return F.form().det()


def _kernel_basis(rows):
    return linalg.nullspace([list(map(Fraction, r)) for r in rows], 3)


def _restrict(poly, basis):
    """poly(s * b0 + t * b1) as a binary form in (s, t)."""
    s, t = MultiPoly.gens(2)
    images = [basis[0][i] * s + basis[1][i] * t for i in range(3)]
    return poly.substitute(images, 2)


@dataclass
class BinaryRoots:
    count: float
    points: list
    unresolved: int


def binary_roots(forms):
    """Common zeros in P^1 of binary forms (s, t), with explicit roots when available."""
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        return BinaryRoots(INF, [], 0)
    g = UniPoly()
    at_inf = True
    for f in forms:
        g = poly_gcd(g, UniPoly.from_multipoly(f.substitute([MultiPoly.var(1, 0), 1], 1), 0))
        d = f.degree()
        at_inf = at_inf and f.coefficient((d, 0)) == 0
    pts = []
    unresolved = 0
    count = 0
    if g.degree > 0:
        count += distinct_root_count(g)
        roots, rest = exact_roots(g)
        pts.extend((r, Fraction(1)) for r in roots)
        unresolved = max(rest.degree, 0)
    if at_inf:
        count += 1
        pts.append((Fraction(1), Fraction(0)))
    return BinaryRoots(count, pts, unresolved)


def _lift(pt, basis):
    s, t = pt
    return ProjPoint([s * basis[0][i] + t * basis[1][i] for i in range(3)])


@dataclass
class QuotientGeometry:
    """E_A, sigma_A and the characteristic varieties X^(s)_A for A = S^F/(g_1^2, ..., g_r^2)."""

    F: SymMatrixSeq
    linear_forms: list
    squares: list
    E_points: object                      # "line" or list of ProjPoint
    fixed: object                         # number of sigma-fixed points
    swapped: object                       # number of 2-cycles, INF for a line
    X3_count: float
    X2_count: float
    X3_points: list = field(default_factory=list)
    X2_points: list = field(default_factory=list)
    unresolved: int = 0

    @property
    def r(self):
        return len(self.linear_forms)

    @property
    def E_count(self):
        return INF if self.E_points == "line" else len(self.E_points)

    def count_identity_holds(self):
        if self.E_points == "line":
            return self.X3_count == INF
        return self.E_count == 2 * self.X3_count - self.X2_count


def _y_side(F, squares):
    """X^(3)_A and X^(2)_A: characteristic varieties cut by sum_m a_im y_m = 0."""
    cubic = char_cubic(F)
    quads = char_minors(F, 2)
    r = len(squares)
    rows = [list(a) for a in squares]
    ker = _kernel_basis(rows)
    if r == 1:
        c = binary_roots([_restrict(cubic, ker)])
        q = binary_roots([_restrict(m, ker) for m in quads])
        return (c.count, [_lift(p, ker) for p in c.points], q.count, [_lift(p, ker) for p in q.points],
                c.unresolved)
    if len(ker) == 1:
        y = ker[0]
        on3 = cubic.evaluate(y) == 0
        on2 = all(m.evaluate(y) == 0 for m in quads)
        pt = [ProjPoint(y)]
        return int(on3), pt if on3 else [], int(on2), pt if on2 else [], 0
    return 0, [], 0, [], 0


def quotient_geometry(F, linear_forms):
    """Geometry of S^F/(g_1^2, ..., g_r^2) for linear forms g_i = sum_j lam_ij x_j (n = 3).

    ``linear_forms`` are coefficient vectors; their entries may lie in one
    quadratic extension. F must be normalized, so that g^2 = sum_m a_m x_m^2.
    """
    if not F.is_normalized():
        raise ValueError("quotient geometry needs a normalized sequence")
    lams = [[c if not isinstance(c, (int, str)) else Fraction(c) for c in g] for g in linear_forms]
    if any(not isinstance(c, Fraction) for g in lams for c in g):
        raise ValueError("linear forms must have rational coefficients; pick a rational root of g^2 = f")
    squares = [square_coefficients(g, F) for g in lams]
    if any(not isinstance(x, Fraction) for a in squares for x in a):
        raise ValueError("squares of the linear forms must be rational")
    if linalg.rank([list(a) for a in squares], 3) != len(squares):
        raise ValueError("the quadrics g_i^2 are linearly dependent")
    pv = PointVariety(F)
    ker = linalg.nullspace(lams, 3)
    unresolved = 0
    if len(ker) == 2:
        cubic = _restrict(pv.curve, ker)
        if cubic.is_zero():
            fixed_forms = []
            s, t = MultiPoly.gens(2)
            images = [ker[0][i] * s + ker[1][i] * t for i in range(3)]
            Mst = pv.M.substitute(images, 2)
            for row in Mst.rows:
                fixed_forms.append(sum((e * images[j] for j, e in enumerate(row)), MultiPoly.zero(2)))
            fixed = binary_roots(fixed_forms).count
            X3c, X3p, X2c, X2p, _ = _y_side(F, squares)
            return QuotientGeometry(F, lams, squares, "line", fixed, INF, X3c, X2c, X3p, X2p)
        roots = binary_roots([cubic])
        base = [_lift(p, ker) for p in roots.points]
        unresolved = roots.unresolved
    elif len(ker) == 1:
        p = ProjPoint(ker[0])
        base = [p] if pv.contains(p) else []
    else:
        base = []
    E = []
    for p in base:
        for q in (p, pv.sigma(p)):
            if q not in E:
                E.append(q)
    fixed = sum(1 for p in E if pv.sigma(p) == p)
    swapped = (len(E) - fixed) // 2
    X3c, X3p, X2c, X2p, un2 = _y_side(F, squares)
    return QuotientGeometry(F, lams, squares, E, fixed, swapped, X3c, X2c, X3p, X2p, unresolved + un2)


@dataclass
class FiberReport:
    sigma_involution: bool
    image_in_X3: bool
    image_equals_X3: bool
    fibers_at_most_two: bool
    fixed_iff_X2: bool
    free_iff_X2_empty: bool
    count_identity: bool

    def all_hold(self):
        return all(vars(self).values())


def fiber_check(F, geom):
    """Check the double-cover statements on a finite E_A."""
    if geom.E_points == "line":
        raise ValueError("E_A is not finite")
    pv = PointVariety(F)
    cubic = char_cubic(F)
    quads = char_minors(F, 2)
    images = {}
    inv = True
    fixed_ok = True
    for p in geom.E_points:
        q = pv.sigma(p)
        inv = inv and pv.sigma(q) == p
        y = pv.phi(p)
        images.setdefault(y, set()).add(p)
        in_X2 = all(m.evaluate(list(y)) == 0 for m in quads)
        fixed_ok = fixed_ok and ((q == p) == in_X2)
    image_in = all(cubic.evaluate(list(y)) == 0 and
                   all(sum(a * c for a, c in zip(sq, y)) == 0 for sq in geom.squares) for y in images)
    if geom.X3_points or geom.X3_count == 0:
        image_eq = set(images) == set(geom.X3_points) and len(images) == geom.X3_count
    else:
        image_eq = len(images) == geom.X3_count
    fibers = all(len(v) <= 2 for v in images.values())
    free = (geom.fixed == 0) == (geom.X2_count == 0)
    return FiberReport(inv, image_in, image_eq, fibers, fixed_ok, free, geom.count_identity_holds())


@dataclass
class SingularLocusReport:
    """X^(2)(F) against Sing X^(3)(F), both solved from scratch; INF marks a curve."""

    X2_count: float
    sing_count: float
    X2_points: list
    sing_points: list
    unresolved: int

    @property
    def agree(self):
        if self.X2_count != self.sing_count:
            return False
        if self.X2_count == INF or self.unresolved:
            return True
        return set(self.X2_points) == set(self.sing_points)


def _projective_points(forms):
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        return INF, [], 0
    try:
        branches = solve_projective(forms)
    except PositiveDimensionalError:
        return INF, [], 0
    pts, unresolved = [], 0
    for b in branches:
        p, u = b.points()
        pts.extend(ProjPoint(q) for q in p)
        unresolved += u
    return sum(b.count for b in branches), pts, unresolved


def singular_locus_report(F):
    """Compare the rank-one locus of the form with the singular points of its determinant."""
    cubic = char_cubic(F)
    sing = [cubic] + [cubic.partial(i) for i in range(cubic.nvars)]
    c2, p2, u2 = _projective_points(char_minors(F, 2))
    cs, ps, us = _projective_points(sing)
    return SingularLocusReport(c2, cs, p2, ps, u2 + us)
