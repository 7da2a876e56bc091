"""Exact point counts for zero-dimensional polynomial systems in two or three variables.

Variables are eliminated by successive resultants after a random rational
change of coordinates. Candidate values of the first coordinate are then
lifted one variable at a time by taking gcds over Q[t]/(s), splitting s
whenever a leading coefficient turns out to be a zero divisor. Overdetermined
systems are first replaced by random combinations. Every branch is then cut
down to the common roots of the original equations and substituted back, so
extraneous resultant factors never reach the output.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import random

from . import linalg
from .matrix import resultant
from .poly import MultiPoly
from .upoly import UniPoly, exact_roots, poly_gcd, poly_xgcd, squarefree_part


class PositiveDimensionalError(ValueError):
    """The solution set contains a curve (or more)."""


class _NotGeneric(Exception):
    def __init__(self, reason, collapsed=False):
        super().__init__(reason)
        self.collapsed = collapsed


@dataclass
class SolutionBranch:
    """Solutions parametrised by the roots t of a squarefree polynomial s.

    ``coords[i]`` is a polynomial in t giving coordinate i, so the branch
    contributes ``s.degree`` distinct points.
    """

    s: UniPoly
    coords: list

    @property
    def count(self):
        return self.s.degree

    def points(self):
        """Explicit points for the roots of s lying in Q or one Q(sqrt d).

        Returns (points, unresolved_count).
        """
        roots, rest = exact_roots(self.s)
        pts = [tuple(c(r) for c in self.coords) for r in roots]
        return pts, max(rest.degree, 0)


def _mod(p, s):
    return p % s if s.degree > 0 else UniPoly()


def _strip(P, s):
    P = [_mod(c, s) for c in P]
    while P and P[-1].is_zero():
        P.pop()
    return P


def _monic_or_split(P, s):
    """Make P monic over Q[t]/(s) or report a nontrivial factor of s."""
    P = _strip(P, s)
    if not P:
        return P, None
    lead = P[-1]
    g = poly_gcd(lead, s)
    if g.degree > 0:
        return None, g
    _, inv, _ = poly_xgcd(lead, s)
    return [_mod(c * inv, s) for c in P], None


def _gcd_over(A, B, s):
    """gcd(A, B) over Q[t]/(s) as a list of (s_i, G_i) with prod s_i = s."""
    out = []
    stack = [(s, A, B)]
    while stack:
        s, A, B = stack.pop()
        if s.degree <= 0:
            continue
        A2, g = _monic_or_split(A, s)
        if g is None:
            B2, g = _monic_or_split(B, s)
        if g is not None:
            stack.append((g.monic(), A, B))
            stack.append(((s // g).monic(), A, B))
            continue
        A, B = A2, B2
        if not B:
            out.append((s, A))
            continue
        if not A:
            out.append((s, B))
            continue
        if len(A) < len(B):
            A, B = B, A
        R = list(A)
        while len(R) >= len(B):
            c = R[-1]
            shift = len(R) - len(B)
            for i, b in enumerate(B):
                R[shift + i] = _mod(R[shift + i] - c * b, s)
            R = _strip(R, s)
        stack.append((s, B, R))
    return out


def _quo_monic(A, B, s):
    """Quotient of A by a monic B over Q[t]/(s)."""
    R = list(A)
    Q = [UniPoly()] * max(len(A) - len(B) + 1, 0)
    while len(R) >= len(B):
        c = R[-1]
        shift = len(R) - len(B)
        Q[shift] = c
        for i, b in enumerate(B):
            R[shift + i] = _mod(R[shift + i] - c * b, s)
        R = _strip(R, s)
    return Q


def _radical_over(G, s):
    """Square-free part of a monic G over Q[t]/(s), splitting s as needed."""
    dG = [_mod(k * c, s) for k, c in enumerate(G)][1:]
    out = []
    for s_i, D in _gcd_over(G, dG, s):
        Gi = [_mod(c, s_i) for c in G]
        Di, g = _monic_or_split(D, s_i)
        if g is not None or not Di:
            raise _NotGeneric("unexpected zero divisor")
        out.append((s_i, _quo_monic(Gi, Di, s_i)))
    return out


def _specialise(p, values, var, s):
    """p(values..., X) as a list of coefficients in X over Q[t]/(s)."""
    out = {}
    for k, c in p.coeffs_in(var).items():
        point = list(values) + [Fraction(0)] * (p.nvars - len(values))
        v = c.evaluate(point)
        v = v if isinstance(v, UniPoly) else UniPoly.const(v)
        out[k] = _mod(v, s)
    if not out:
        return []
    return [out.get(k, UniPoly()) for k in range(max(out) + 1)]


def _transform(n, attempt):
    if attempt == 0:
        # Pascal matrix: dense, unimodular
        return [[Fraction(math.comb(i + j, i)) for j in range(n)] for i in range(n)]
    rng = random.Random(7919 * attempt + n)
    while True:
        T = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        if linalg.det(T) != 0:
            return T


def _apply(polys, T):
    n = len(T)
    v = MultiPoly.gens(n)
    images = [sum((T[i][j] * v[j] for j in range(n)), MultiPoly.zero(n)) for i in range(n)]
    return [p.substitute(images, n) for p in polys]


def _solve_generic(P, n):
    levels = {n: P}
    for k in range(n - 1, 0, -1):
        prev = levels[k + 1]
        try:
            levels[k] = [resultant(prev[0], q, k) for q in prev[1:]]
        except ValueError:
            raise _NotGeneric("equation free of the eliminated variable")
        if all(r.is_zero() for r in levels[k]):
            raise _NotGeneric("elimination collapsed", collapsed=True)
    h = levels[1][0]
    for r in levels[1][1:]:
        h = _uni_gcd_multi(h, r)
    if h.is_zero():
        raise _NotGeneric("eliminant vanishes identically", collapsed=True)
    hu = UniPoly.from_multipoly(h, 0)
    s = squarefree_part(hu)
    if s.degree <= 0:
        return []
    s = s.monic()
    branches = [(s, [UniPoly.x() % s])]
    for var in range(1, n):
        nxt = []
        for sb, vals in branches:
            polys = [_specialise(p, vals, var, sb) for p in levels[var + 1]]
            work = _gcd_over(polys[0], [], sb)
            for q in polys[1:]:
                work = [pair for s_i, G in work for pair in _gcd_over(G, q, s_i)]
            flat = []
            for s_i, G in work:
                if not G:
                    raise _NotGeneric("fibre is not finite", collapsed=True)
                if len(G) == 1:
                    continue
                flat.extend(_radical_over(G, s_i))
            for s_i, G in flat:
                if len(G) > 2:
                    raise _NotGeneric("first coordinate does not separate solutions")
                nxt.append((s_i, [_mod(v, s_i) for v in vals] + [_mod(-G[0], s_i)]))
        branches = nxt
    return branches


def _uni_gcd_multi(a, b):
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return poly_gcd(UniPoly.from_multipoly(a, 0), UniPoly.from_multipoly(b, 0)).to_multipoly(a.nvars, 0)


def _map_back(branches, T, extra=None):
    out = []
    n = len(T)
    for s, vals in branches:
        if extra is not None:
            vals = vals + [extra]
        coords = [_mod(sum((T[i][j] * vals[j] for j in range(n)), UniPoly()), s) for i in range(n)]
        out.append(SolutionBranch(s, coords))
    return out


def _square_up(polys, n, attempt):
    """n random combinations of an overdetermined system; their zeros contain the original ones."""
    if len(polys) <= n:
        return polys
    rng = random.Random(104729 * attempt + len(polys))
    return [sum((p.scale(rng.randint(1, 9)) for p in polys), MultiPoly.zero(polys[0].nvars)) for _ in range(n)]


def _restrict(branches, polys):
    """Cut each branch down to the roots of s where every original equation vanishes."""
    out = []
    for b in branches:
        s = b.s
        for p in polys:
            v = p.evaluate(b.coords)
            v = v if isinstance(v, UniPoly) else UniPoly.const(v)
            s = poly_gcd(s, _mod(v, s))
            if s.degree <= 0:
                break
        if s.degree > 0:
            s = s.monic()
            out.append(SolutionBranch(s, [_mod(c, s) for c in b.coords]))
    return out


def _check(polys, branches):
    for b in branches:
        for p in polys:
            v = p.evaluate(b.coords)
            v = v if isinstance(v, UniPoly) else UniPoly.const(v)
            if not _mod(v, b.s).is_zero():
                raise AssertionError("back-substitution failed")


def solve_affine(polys, attempts=12):
    """Solutions of a square system of affine equations (two or three variables).

    Returns a list of SolutionBranch; the number of distinct solutions over an
    algebraic closure is the sum of the branch counts.
    """
    n = polys[0].nvars
    if len(polys) < n:
        raise PositiveDimensionalError("fewer equations than unknowns")
    collapsed = 0
    for attempt in range(attempts):
        T = _transform(n, attempt)
        P = _square_up(_apply(polys, T), n, attempt)
        try:
            branches = _restrict(_map_back(_solve_generic(P, n), T), polys)
        except _NotGeneric as exc:
            collapsed += exc.collapsed
            continue
        _check(polys, branches)
        return branches
    if collapsed:
        raise PositiveDimensionalError("solution set is not finite")
    raise RuntimeError("no generic coordinates found")


def solve_projective(forms, attempts=12):
    """Common zeros in P^2 of homogeneous forms in three variables."""
    n = forms[0].nvars
    if n != 3:
        raise ValueError("projective solving is implemented for P^2")
    collapsed = 0
    for attempt in range(attempts):
        T = _transform(n, attempt + 1)
        P = _apply(forms, T)
        at_inf = [UniPoly.from_multipoly(p.substitute([MultiPoly.var(1, 0), 1, 0], 1), 0) for p in P]
        g = UniPoly()
        for b in at_inf:
            g = poly_gcd(g, b)
        lead_zero = all(p.coefficient((p.degree(), 0, 0)) == 0 for p in P)
        if g.is_zero() or g.degree > 0 or lead_zero:
            # a finite set misses a generic line, a curve never does
            collapsed += 1
            continue
        two = MultiPoly.gens(2)
        affine = [p.substitute([two[0], two[1], 1], 2) for p in P]
        try:
            raw = _solve_generic(_square_up(affine, 2, attempt), 2)
        except _NotGeneric as exc:
            collapsed += exc.collapsed
            continue
        branches = _restrict(_map_back(raw, T, extra=UniPoly.const(1)), forms)
        _check(forms, branches)
        return branches
    if collapsed:
        raise PositiveDimensionalError("the forms share a common component")
    raise RuntimeError("no generic coordinates found")


def count_solutions(branches):
    return sum(b.count for b in branches)
