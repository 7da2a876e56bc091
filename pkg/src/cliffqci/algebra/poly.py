"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction

from .scalars import QuadScalar, as_fraction

# Degree reported for the zero polynomial. It compares below every integer.
NEG_INF = float("-inf")

_SCALARS = (int, Fraction)


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    """Polynomial in ``nvars`` commuting variables.

    Terms are stored as ``{exponent tuple: Fraction}`` with zero coefficients
    dropped. Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                c = as_fraction(c)
                if c:
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def gens(cls, nvars):
        return [cls.var(nvars, i) for i in range(nvars)]

    @classmethod
    def linear_form(cls, coeffs):
        n = len(coeffs)
        return sum((as_fraction(c) * cls.var(n, i) for i, c in enumerate(coeffs)), cls.zero(n))

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, _SCALARS):
            return MultiPoly.constant(self.nvars, other)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = _add_exps(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(Fraction(1) / as_fraction(other))
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_component(self, d):
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    def variables(self):
        return sorted({i for e in self.terms for i, k in enumerate(e) if k})

    def coeffs_in(self, i):
        """Split as sum_k c_k * x_i^k; returns {k: c_k} with c_k free of x_i."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: MultiPoly._raw(self.nvars, t) for k, t in out.items()}

    def leading_term(self):
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def divexact(self, other):
        """Exact quotient self / other; raises ValueError if other does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            if any(a < b for a, b in zip(e, le)):
                raise ValueError("polynomial division is not exact")
            qe = tuple(a - b for a, b in zip(e, le))
            qc = rem[e] / lc
            quot[qe] = qc
            for oe, oc in other.terms.items():
                t = _add_exps(qe, oe)
                v = rem.get(t, 0) - qc * oc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(self.nvars, quot)

    def evaluate(self, point):
        """Evaluate at a point whose entries may be rationals or QuadScalars."""
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * (x ** k)
            total = total + term
        return total

    def substitute(self, images, nvars=None):
        """Replace variable i by images[i] (MultiPolys in a common ring)."""
        if nvars is None:
            nvars = next((p.nvars for p in images if isinstance(p, MultiPoly)), self.nvars)
        imgs = [p if isinstance(p, MultiPoly) else MultiPoly.constant(nvars, p) for p in images]
        powers = [{0: MultiPoly.constant(nvars, 1)} for _ in imgs]
        total = MultiPoly.zero(nvars)
        for e, c in self.terms.items():
            term = MultiPoly.constant(nvars, c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = imgs[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return MultiPoly._raw(self.nvars, out)

    def proportionality(self, other):
        """Return c with self == c * other, or None if no such nonzero c exists."""
        if self.is_zero() or other.is_zero():
            return None
        if set(self.terms) != set(other.terms):
            return None
        e = next(iter(self.terms))
        c = self.terms[e] / other.terms[e]
        if all(self.terms[k] == c * other.terms[k] for k in self.terms):
            return c
        return None

    def is_proportional(self, other):
        return self.proportionality(other) is not None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def format(self, names=None):
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
        return out

    def __repr__(self):
        return f"MultiPoly({self.format()})"

    __str__ = format


def is_scalar(x):
    return isinstance(x, (int, Fraction, QuadScalar))
