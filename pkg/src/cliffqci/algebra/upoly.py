"""Univariate polynomials over Q: gcds, square-free parts, exact roots."""

from fractions import Fraction
import math

from .poly import NEG_INF, MultiPoly
from .scalars import as_fraction, sqrt_exact


class UniPoly:
    """Dense univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        out = cls((1,))
        for r in roots:
            out = out * cls((-as_fraction(r), 1))
        return out

    @classmethod
    def from_multipoly(cls, p, var=0):
        """Convert a MultiPoly that only involves variable ``var``."""
        cs = {}
        for e, c in p.terms.items():
            if any(k for i, k in enumerate(e) if i != var):
                raise ValueError("polynomial involves more than one variable")
            cs[e[var]] = c
        if not cs:
            return cls()
        return cls([cs.get(k, 0) for k in range(max(cs) + 1)])

    def to_multipoly(self, nvars=1, var=0):
        terms = {}
        for k, c in enumerate(self.coeffs):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return MultiPoly(nvars, terms)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UniPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lc
        od = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + od] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:od])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True if self divides other."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        return UniPoly([c / self.lc for c in self.coeffs])

    def compose(self, other):
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def format(self, var="t"):
        if not self.coeffs:
            return "0"
        return self.to_multipoly().format([var])

    def __repr__(self):
        return f"UniPoly({self.format()})"

    __str__ = format


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b == g and g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly((1,)), UniPoly()
    t0, t1 = UniPoly(), UniPoly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


def squarefree_part(p):
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def distinct_root_count(p):
    """Number of distinct roots over an algebraic closure; p must be nonzero."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    return max(squarefree_part(p).degree, 0)


def squarefree_decomposition(p):
    """Yun's algorithm: returns {k: s_k} with p = lc * prod s_k^k, s_k squarefree and coprime."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    out = {}
    f = p.monic()
    if f.degree == 0:
        return out
    a = poly_gcd(f, f.derivative())
    b = f // a
    c = f.derivative() // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out[k] = g
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def coprime_basis(polys):
    """Pairwise coprime monic squarefree factors refining the radicals of ``polys``."""
    basis = []
    for p in polys:
        if p.is_zero() or p.degree <= 0:
            continue
        f = squarefree_part(p)
        refined = []
        for b in basis:
            g = poly_gcd(f, b)
            if g.degree > 0:
                f = f // g
                refined.append(g)
                rest = (b // g).monic()
                if rest.degree > 0:
                    refined.append(rest)
            else:
                refined.append(b)
        if f.degree > 0:
            refined.append(f.monic())
        basis = refined
    return sorted(basis, key=lambda q: (q.degree, q.coeffs))


def multiplicity(root_factor, p):
    """Largest k with root_factor^k dividing p (root_factor squarefree, nonconstant)."""
    k = 0
    while root_factor.divides(p):
        p = p // root_factor
        k += 1
    return k


def _divisors(n, limit):
    n = abs(n)
    if n == 0:
        return [0]
    if n > limit:
        return None
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def _int_root(ints, a, b):
    """True if a/b is a root of sum ints[k] t^k (homogenized, integers only)."""
    n = len(ints) - 1
    total = 0
    apow, bpow = 1, b ** n
    for k, c in enumerate(ints):
        total += c * apow * bpow
        apow *= a
        if k < n:
            bpow //= b
    return total == 0


def rational_roots(p, limit=10 ** 12):
    """Distinct rational roots of p, via the rational root test.

    Returns None when the integer coefficients are too large to enumerate
    divisors of (bounded by ``limit``).
    """
    f = squarefree_part(p)
    roots = []
    if f.degree <= 0:
        return roots
    while f.coeffs and f.coeffs[0] == 0:
        roots.append(Fraction(0))
        f = UniPoly(f.coeffs[1:])
    if f.degree <= 0:
        return roots
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    ps = _divisors(ints[0], limit)
    qs = _divisors(ints[-1], limit)
    if ps is None or qs is None:
        return None
    # Cauchy bound on the absolute value of any root
    bound = 1 + max(Fraction(abs(c), abs(ints[-1])) for c in ints[:-1])
    for b in qs:
        for a in ps:
            if Fraction(a, b) > bound or math.gcd(a, b) != 1:
                continue
            for sa in (a, -a):
                if _int_root(ints, sa, b):
                    roots.append(Fraction(sa, b))
    return sorted(roots)


def exact_roots(p):
    """Distinct roots of p found in Q or in a single Q(sqrt d).

    Returns ``(roots, unresolved)`` where ``unresolved`` is the squarefree
    factor (monic) whose roots could not be written down exactly; it is the
    constant 1 when every root was found.
    """
    f = squarefree_part(p)
    found = rational_roots(f)
    if found is None:
        return [], f
    roots = list(found)
    for r in found:
        f = f // UniPoly((-r, 1))
    f = f.monic()
    if f.degree == 2:
        c0, c1 = f.coeffs[0], f.coeffs[1]
        disc = c1 * c1 - 4 * c0
        s = sqrt_exact(disc)
        roots.append((-c1 + s) / 2)
        roots.append((-c1 - s) / 2)
        f = UniPoly((1,))
    return roots, f


def root_in(value, p):
    """True if value (rational or QuadScalar) is a root of p."""
    return p(value) == 0
