"""Exact scalars: rationals and elements of one quadratic extension Q(sqrt d)."""

from fractions import Fraction
import math


def as_fraction(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def squarefree_split(n):
    """Write a nonzero integer n as m*m*k with k squarefree; returns (m, k)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    m, k = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        m *= p ** (e // 2)
        if e % 2:
            k *= p
        p += 1 if p == 2 else 2
    k *= n
    return m, sign * k


class QuadScalar:
    """a + b*sqrt(d) with rational a, b and a squarefree integer d != 1.

    Build values through :func:`quad`, which collapses b == 0 to a Fraction so
    that hashing and equality agree with plain rationals.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.d = int(d)

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return quad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return quad(self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        return quad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadScalar):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return quad(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = Fraction(1)
        base = self
        while e:
            if e & 1:
                out = base * out
            base = base * base
            e >>= 1
        return out

    def conjugate(self):
        return quad(self.a, -self.b, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"QuadScalar({self.a}, {self.b}, {self.d})"

    def __str__(self):
        root = f"sqrt({self.d})"
        if self.b == 1:
            tail = root
        elif self.b == -1:
            tail = "-" + root
        else:
            tail = f"{self.b}*{root}"
        if self.a == 0:
            return tail
        sep = "" if tail.startswith("-") else "+"
        return f"{self.a}{sep}{tail}"


def quad(a, b, d):
    """a + b*sqrt(d), returned as a Fraction whenever b == 0."""
    b = as_fraction(b)
    if b == 0:
        return as_fraction(a)
    return QuadScalar(a, b, d)


def sqrt_exact(q):
    """Exact square root of a rational, in Q or in Q(sqrt k) for squarefree k."""
    q = as_fraction(q)
    if q == 0:
        return Fraction(0)
    num = q.numerator * q.denominator
    m, k = squarefree_split(num)
    coeff = Fraction(m, q.denominator)
    if k == 1:
        return coeff
    return QuadScalar(0, coeff, k)


def is_rational_square(q):
    q = as_fraction(q)
    if q < 0:
        return False
    return math.isqrt(q.numerator) ** 2 == q.numerator and math.isqrt(q.denominator) ** 2 == q.denominator


def scalar_to_json(x):
    if isinstance(x, QuadScalar):
        return {"a": str(x.a), "b": str(x.b), "d": str(x.d)}
    return str(as_fraction(x))


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return quad(obj["a"], obj["b"], int(as_fraction(obj["d"])))
    return as_fraction(obj)
