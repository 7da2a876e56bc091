"""The graded Clifford algebra C(F) in its free-module normal form.

C(F) is generated by x_1..x_n in degree 1 and central y_1..y_r in degree 2
subject to x_i x_j + x_j x_i = sum_m (F_m)_ij y_m. Every element is written
uniquely as sum_S c_S(y) x_S over increasing index tuples S.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from ..algebra import linalg
from ..algebra.poly import MultiPoly
from ..algebra.scalars import QuadScalar, as_fraction, sqrt_exact
from .seq import SymMatrixSeq


def _acc(out, key, val):
    v = out.get(key)
    v = val if v is None else v + val
    if v.is_zero():
        out.pop(key, None)
    else:
        out[key] = v


class CliffordElement:
    """sum_S terms[S] * x_S with coefficients in Q[y_1..y_r]."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        for S, c in (terms or {}).items():
            if not isinstance(c, MultiPoly):
                c = MultiPoly.constant(alg.r, c)
            if not c.is_zero():
                self.terms[tuple(S)] = c

    @property
    def n(self):
        return self.alg.n

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for S, c in self.alg.coerce(other).terms.items():
            _acc(out, S, c)
        return CliffordElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.alg, {S: -c for S, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __rsub__(self, other):
        return self.alg.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return CliffordElement(self.alg, {S: c * other for S, c in self.terms.items()})
        return self.alg.mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self * other
        return NotImplemented

    def grades(self):
        """Set of degrees occurring, with deg x_i = 1 and deg y_m = 2."""
        return {len(S) + 2 * sum(e) for S, c in self.terms.items() for e in c.terms}

    def is_homogeneous(self):
        return len(self.grades()) <= 1

    def format(self):
        if not self.terms:
            return "0"
        ynames = [f"y{m + 1}" for m in range(self.alg.r)]
        parts = []
        for S in sorted(self.terms, key=lambda s: (len(s), s)):
            c = self.terms[S]
            mono = "*".join(f"x{i + 1}" for i in S)
            cs = c.format(ynames)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif c.is_constant():
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CliffordElement({self.format()})"


class CliffordAlgebra:
    """Multiplication in C(F) for a sequence F of symmetric matrices."""

    def __init__(self, F):
        if not isinstance(F, SymMatrixSeq):
            F = SymMatrixSeq(F)
        self.F = F
        self.n = F.n
        self.r = F.r
        self.form = F.form().rows

    def coerce(self, v):
        if isinstance(v, CliffordElement):
            return v
        return CliffordElement(self, {(): v})

    def one(self):
        return self.coerce(1)

    def x(self, i):
        return CliffordElement(self, {(i,): 1})

    def y(self, m):
        return CliffordElement(self, {(): MultiPoly.var(self.r, m)})

    def linear(self, lam):
        return CliffordElement(self, {(i,): as_fraction(c) for i, c in enumerate(lam)})

    def _mono_times_gen(self, S, j):
        """x_S * x_j in normal form."""
        if not S or S[-1] < j:
            return {S + (j,): MultiPoly.constant(self.r, 1)}
        last, rest = S[-1], S[:-1]
        if last == j:
            return {rest: self.form[j][j].scale(Fraction(1, 2))}
        out = {}
        for T, c in self._mono_times_gen(rest, j).items():
            for U, c2 in self._mono_times_gen(T, last).items():
                _acc(out, U, -(c * c2))
        if not self.form[last][j].is_zero():
            _acc(out, rest, self.form[last][j])
        return out

    def mono_product(self, S, T):
        cur = {S: MultiPoly.constant(self.r, 1)}
        for j in T:
            nxt = {}
            for U, c in cur.items():
                for V, c2 in self._mono_times_gen(U, j).items():
                    _acc(nxt, V, c * c2)
            cur = nxt
        return cur

    def mul(self, a, b):
        out = {}
        for S, ca in a.terms.items():
            for T, cb in b.terms.items():
                coeff = ca * cb
                for U, c in self.mono_product(S, T).items():
                    _acc(out, U, coeff * c)
        return CliffordElement(self, out)

    def commutator(self, a, b):
        return self.mul(a, b) - self.mul(b, a)

    def anticommutator(self, a, b):
        return self.mul(a, b) + self.mul(b, a)

    def center_degree2(self):
        """Basis of the degree-2 part of the center of C(F)."""
        self.F.require_independent()
        n, r = self.n, self.r
        pairs = list(combinations(range(n), 2))
        unknowns = [CliffordElement(self, {p: 1}) for p in pairs] + [self.y(m) for m in range(r)]
        coords = {}
        columns = []
        for z in unknowns:
            col = {}
            for k in range(n):
                for S, c in self.commutator(z, self.x(k)).terms.items():
                    for e, v in c.terms.items():
                        col[coords.setdefault((k, S, e), len(coords))] = v
            columns.append(col)
        rows = [[col.get(i, Fraction(0)) for col in columns] for i in range(len(coords))]
        basis = linalg.nullspace(rows, len(unknowns)) if rows else linalg.identity(len(unknowns))
        out = []
        for v in basis:
            z = self.coerce(0)
            for coef, u in zip(v, unknowns):
                if coef:
                    z = z + u * coef
            out.append(z)
        return out

    def center_element(self):
        """g = sum over permutations of sgn(s) x_s(1)...x_s(n), and c with g^2 = c det(form).

        g is central when n is odd.
        """
        n = self.n
        g = self.coerce(0)
        for perm in permutations(range(n)):
            sign = -1 if sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]) % 2 else 1
            word = self.one()
            for i in perm:
                word = self.mul(word, self.x(i))
            g = g + word * sign
        return g, center_constant(n)

    def square_of_linear(self, lam):
        """a_m with (sum lam_i x_i)^2 = sum_m a_m y_m."""
        return square_coefficients(lam, self.F)


def center_constant(n):
    """c = (-1)^(n(n-1)/2) (n!)^2 / 2^n."""
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return Fraction(sign * factorial(n) ** 2, 2 ** n)


def center_scale(n):
    """Scalar s with (s g)^2 = det(form); lies in Q or a quadratic extension."""
    return sqrt_exact(1 / center_constant(n))


def square_coefficients(lam, F):
    """a_m = lam^T F_m lam / 2; entries of lam may lie in a quadratic extension."""
    lam = [c if isinstance(c, QuadScalar) else as_fraction(c) for c in lam]
    return tuple(sum((lam[i] * M[i][j] * lam[j] for i in range(F.n) for j in range(F.n)), Fraction(0)) / 2
                 for M in F)


def clifford_mul(a, b, F=None):
    alg = a.alg if F is None else CliffordAlgebra(F)
    return alg.mul(a, b)
