"""Quadratic algebras T(V)/(R): duals, truncated Hilbert series, central regular sequences.

A relation is an n x n rational matrix c, standing for sum_ij c[i][j] x_i x_j.
Quadratic duals use the pairing in which u_i u_j is dual to x_i x_j.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import linalg
from .algebra.poly import MultiPoly
from .algebra.scalars import as_fraction
from .algebra.solve import solve_affine
from .clifford.seq import SymMatrixSeq


def _vec(M):
    return [x for row in M for x in row]


def _mat(v, n):
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


def commutator_matrix(n, i, j):
    M = [[Fraction(0)] * n for _ in range(n)]
    M[i][j] = Fraction(1)
    M[j][i] = Fraction(-1)
    return M


def symmetric_matrix(p):
    """Symmetric tensor of a commutative quadratic form p (a MultiPoly)."""
    n = p.nvars
    M = [[Fraction(0)] * n for _ in range(n)]
    for e, c in p.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        if len(idx) != 2:
            raise ValueError("expected a quadratic form")
        i, j = idx
        if i == j:
            M[i][i] += c
        else:
            M[i][j] += c / 2
            M[j][i] += c / 2
    return M


def quadric_of(M):
    """Commutative quadratic form sum_ij M[i][j] u_i u_j."""
    n = len(M)
    u = MultiPoly.gens(n)
    return sum((M[i][j] * u[i] * u[j] for i in range(n) for j in range(n) if M[i][j]), MultiPoly.zero(n))


class QuadraticPresentation:
    """k<x_1..x_n>/(R) with R spanned by linearly independent relation matrices."""

    def __init__(self, n, relations, commutative=None):
        self.n = n
        rels = [tuple(tuple(as_fraction(x) for x in row) for row in M) for M in relations]
        for M in rels:
            if len(M) != n or any(len(row) != n for row in M):
                raise ValueError(f"relation is not an {n} x {n} matrix")
        if rels and linalg.rank([_vec(M) for M in rels], n * n) != len(rels):
            raise ValueError("relations are linearly dependent")
        self.relations = rels
        if commutative is None:
            commutative = self.contains_commutators()
        self.commutative = bool(commutative)

    @classmethod
    def from_vectors(cls, n, vectors, commutative=None):
        return cls(n, [_mat(v, n) for v in vectors], commutative)

    @classmethod
    def commutative_quotient(cls, n, quadrics=()):
        """k[u_1..u_n]/(quadrics) written as a quadratic presentation."""
        rels = [commutator_matrix(n, i, j) for i, j in combinations(range(n), 2)]
        rels += [symmetric_matrix(q) for q in quadrics]
        basis = linalg.row_space_basis([_vec(M) for M in rels], n * n)
        return cls.from_vectors(n, basis, commutative=True)

    def vectors(self):
        return [_vec(M) for M in self.relations]

    @property
    def dim(self):
        return len(self.relations)

    def contains_commutators(self):
        rows = self.vectors()
        return all(linalg.in_span(_vec(commutator_matrix(self.n, i, j)), rows, self.n * self.n)
                   for i, j in combinations(range(self.n), 2))

    def same_span(self, other):
        return self.n == other.n and linalg.span_equal(self.vectors(), other.vectors(), self.n * self.n)

    def with_relations(self, extra):
        rows = self.vectors() + [_vec(M) for M in extra]
        return QuadraticPresentation.from_vectors(self.n, linalg.row_space_basis(rows, self.n * self.n))

    def commutative_quadrics(self):
        """Basis of the images of the relations in Sym^2 (commutators vanish)."""
        n = self.n
        monos = [(i, j) for i in range(n) for j in range(i, n)]
        rows = []
        for M in self.relations:
            rows.append([M[i][i] if i == j else M[i][j] + M[j][i] for i, j in monos])
        basis = linalg.row_space_basis(rows, len(monos))
        u = MultiPoly.gens(n)
        return [sum((c * u[i] * u[j] for c, (i, j) in zip(v, monos) if c), MultiPoly.zero(n)) for v in basis]

    def format(self, names=None):
        n = self.n
        if names is None:
            names = [f"x{i + 1}" for i in range(n)]
        out = []
        for M in self.relations:
            terms = []
            for i in range(n):
                for j in range(n):
                    c = M[i][j]
                    if c:
                        mono = f"{names[i]}{names[j]}"
                        terms.append(mono if c == 1 else (f"-{mono}" if c == -1 else f"{c}*{mono}"))
            s = terms[0]
            for t in terms[1:]:
                s += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
            out.append(s)
        return out

    def __repr__(self):
        return f"QuadraticPresentation(n={self.n}, relations={self.format()})"


def quadratic_dual(P):
    """A^! = T(V*)/(R^perp)."""
    n = P.n
    rows = P.vectors()
    perp = linalg.nullspace(rows, n * n) if rows else linalg.identity(n * n)
    return QuadraticPresentation.from_vectors(n, perp)


def build_SF(F):
    """S^F: relations x_i x_j + x_j x_i - sum_m (F_m)_ij x_m^2 for i < j."""
    n = F.n
    if F.r != n:
        raise ValueError("S^F needs as many matrices as variables")
    rels = []
    for i, j in combinations(range(n), 2):
        M = [[Fraction(0)] * n for _ in range(n)]
        M[i][j] += 1
        M[j][i] += 1
        for m, Fm in enumerate(F):
            M[m][m] -= Fm[i][j]
        rels.append(M)
    return QuadraticPresentation(n, rels)


def build_BF(F):
    """B(F) = k[u]/(f_1..f_r) with f_m = sum_ij (F_m)_ij u_i u_j."""
    n = F.n
    rels = [commutator_matrix(n, i, j) for i, j in combinations(range(n), 2)]
    rels += [[list(row) for row in M] for M in F]
    return QuadraticPresentation(n, rels, commutative=True)


def bf_quadrics(F):
    return [quadric_of(M) for M in F]


class GradedQuotient:
    """Normal words and reduction tables for T(V)/(relations) up to a fixed degree.

    Degree d is built from degree d-1: modulo I_{d-1} (x) V the ambient space is
    A_{d-1} (x) V, and the remaining relations are u (x) r for normal words u of
    length d-2 and relations r. Exact sparse elimination then picks out the
    normal words of length d.
    """

    def __init__(self, n, relations, D, budget=2_000_000):
        self.n = n
        self.rels = [{(a, b): M[a][b] for a in range(n) for b in range(n) if M[a][b]} for M in relations]
        self.normal = {0: [()], 1: [(i,) for i in range(n)]}
        self.table = {1: {((), i): {(i,): Fraction(1)} for i in range(n)}}
        self._memo = {}
        for d in range(2, D + 1):
            if len(self.normal[d - 1]) * n > budget:
                raise MemoryError(f"degree {d} exceeds the configured size budget")
            self._extend(d)

    @property
    def top(self):
        return max(self.normal)

    def _extend(self, d):
        n = self.n
        cols = [(w, b) for w in self.normal[d - 1] for b in range(n)]
        index = {c: k for k, c in enumerate(cols)}
        ech = linalg.SparseEchelon()
        prev = self.table[d - 1]
        for u in self.normal[d - 2]:
            for rel in self.rels:
                vec = {}
                for (a, b), c in rel.items():
                    for w, cw in prev[(u, a)].items():
                        k = index[(w, b)]
                        vec[k] = vec.get(k, 0) + c * cw
                ech.add(vec)
        pivots = ech.pivots()
        words = {k: cols[k][0] + (cols[k][1],) for k in range(len(cols)) if k not in pivots}
        self.normal[d] = list(words.values())
        table = {}
        for k, c in enumerate(cols):
            if k in pivots:
                nf = ech.reduce({k: Fraction(1)})
                table[c] = {words[j]: v for j, v in nf.items()}
            else:
                table[c] = {words[k]: Fraction(1)}
        self.table[d] = table

    def hilbert(self):
        return [len(self.normal[d]) for d in range(self.top + 1)]

    def reduce_word(self, word):
        if word in self._memo:
            return self._memo[word]
        if not word:
            out = {(): Fraction(1)}
        else:
            out = {}
            for w, c in self.reduce_word(word[:-1]).items():
                for nw, c2 in self.table[len(word)][(w, word[-1])].items():
                    v = out.get(nw, 0) + c * c2
                    if v:
                        out[nw] = v
                    else:
                        out.pop(nw, None)
        self._memo[word] = out
        return out

    def normal_form(self, tensor):
        """Normal form of a homogeneous tensor {word: coefficient}."""
        out = {}
        for word, c in tensor.items():
            for nw, c2 in self.reduce_word(tuple(word)).items():
                v = out.get(nw, 0) + c * c2
                if v:
                    out[nw] = v
                else:
                    out.pop(nw, None)
        return out


def hilbert_truncated(P, D, quotient=()):
    """(dim A_0, ..., dim A_D) for A = T(V)/(R + span(quotient))."""
    if D < 0:
        raise ValueError("D must be non-negative")
    rels = list(P.relations) + [tuple(tuple(as_fraction(x) for x in row) for row in M) for M in quotient]
    if D < 2:
        return [1, P.n][:D + 1]
    return GradedQuotient(P.n, rels, D).hilbert()


def series_mul(a, b, D):
    return [sum(a[i] * b[d - i] for i in range(d + 1) if i < len(a) and d - i < len(b)) for d in range(D + 1)]


def expected_regular_series(h, r, D):
    """Coefficients of (1 - t^2)^r * H(t) through degree D."""
    factor = [1]
    for _ in range(r):
        factor = series_mul(factor, [1, 0, -1], D)
    return series_mul(factor, h, D)


def koszul_reciprocity_holds(P, D):
    """H_{A^!}(t) H_A(-t) == 1 through degree D."""
    h = hilbert_truncated(P, D)
    hd = hilbert_truncated(quadratic_dual(P), D)
    signed = [(-1) ** k * v for k, v in enumerate(h)]
    prod = series_mul(hd, signed, D)
    return prod == [1] + [0] * D


@dataclass
class CentralQuadric:
    """A degree-two element f = sum_ij coeffs[i][j] x_i x_j, certified central in its ambient."""

    coeffs: list

    @classmethod
    def from_squares(cls, a):
        """f = sum_m a_m x_m^2."""
        n = len(a)
        return cls([[as_fraction(a[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    def tensor(self):
        n = len(self.coeffs)
        return {(i, j): c for i in range(n) for j in range(n) if (c := self.coeffs[i][j])}


def _certificate_tensor(f, i):
    out = {}
    for (a, b), c in f.tensor().items():
        out[(a, b, i)] = out.get((a, b, i), 0) + c
        out[(i, a, b)] = out.get((i, a, b), 0) - c
    return out


def is_central(P, f, quotient=None):
    """f x_i - x_i f lies in the degree-3 part of the ideal, for every i."""
    if not isinstance(f, CentralQuadric):
        f = CentralQuadric(f)
    Q = quotient if quotient is not None else GradedQuotient(P.n, P.relations, 3)
    return all(not Q.normal_form(_certificate_tensor(f, i)) for i in range(P.n))


def is_zero_in_degree2(P, f):
    if not isinstance(f, CentralQuadric):
        f = CentralQuadric(f)
    return linalg.in_span(_vec(f.coeffs), P.vectors(), P.n * P.n)


@dataclass
class RegularityReport:
    regular: bool
    central: list
    observed: list
    expected: list
    first_mismatch: object = None


def is_regular_sequence(P, fs, D=6):
    """Hilbert-series test for a central regular sequence through degree D."""
    fs = [f if isinstance(f, CentralQuadric) else CentralQuadric(f) for f in fs]
    r = len(fs)
    if D < 2 * r + 2:
        raise ValueError(f"D = {D} is below the floor 2r + 2 = {2 * r + 2}")
    cube = GradedQuotient(P.n, P.relations, 3)
    central = [is_central(P, f, cube) for f in fs]
    base = hilbert_truncated(P, D)
    observed = hilbert_truncated(P, D, [f.coeffs for f in fs])
    expected = expected_regular_series(base, r, D)
    mismatch = next((d for d in range(D + 1) if observed[d] != expected[d]), None)
    return RegularityReport(all(central) and mismatch is None, central, observed, expected, mismatch)


def _greedy_complement(rows, N, order="lex"):
    basis = [list(r) for r in rows]
    current = linalg.rank(basis, N)
    idx = range(N) if order == "lex" else range(N - 1, -1, -1)
    out = []
    for k in idx:
        if current == N:
            break
        e = [Fraction(0)] * N
        e[k] = Fraction(1)
        if linalg.rank(basis + [e], N) > current:
            basis.append(e)
            out.append(e)
            current += 1
    return out


def dual_of_quotient(P, f, complement="lex"):
    """Presentation of (A/(f))^! and the class of f^! in it.

    With V (x) V = k w + R + W for a lift w of f, the line k w^! is (R + W)^perp,
    (A/(f))^! = T(V*)/((R + k w)^perp) and A^! = (A/(f))^!/(f^!).
    """
    if not isinstance(f, CentralQuadric):
        f = CentralQuadric(f)
    n = P.n
    N = n * n
    R = P.vectors()
    w = _vec(f.coeffs)
    if linalg.in_span(w, R, N):
        raise ValueError("f is zero in A_2")
    W = _greedy_complement(R + [w], N, complement)
    line = linalg.nullspace(R + W, N)
    assert len(line) == 1
    wd = line[0]
    Q = QuadraticPresentation.from_vectors(n, linalg.nullspace(R + [w], N))
    check = Q.vectors() + [wd]
    if not linalg.span_equal(check, quadratic_dual(P).vectors(), N):
        raise AssertionError("A^! != (A/(f))^!/(f^!)")
    return Q, CentralQuadric(_mat(wd, n))


def iterated_dual(P, fs):
    """Apply dual_of_quotient along f_1, ..., f_r; returns the final dual presentation."""
    A = P
    Q = None
    for f in fs:
        f = f if isinstance(f, CentralQuadric) else CentralQuadric(f)
        Q, _ = dual_of_quotient(A, f)
        A = A.with_relations([f.coeffs])
    return Q


@dataclass
class CliffordDeformation:
    """Equations sum_ij (F_m)_ij u_i u_j = 2 a_m whose zeros form the set K~_f."""

    F: SymMatrixSeq
    a: tuple
    equations: list
    degenerate: bool


def clifford_deformation(F, a):
    a = tuple(as_fraction(x) for x in a)
    if len(a) != F.r:
        raise ValueError("need one coefficient per matrix")
    eqs = [quadric_of(M) - 2 * am for M, am in zip(F, a)]
    return CliffordDeformation(F, a, eqs, degenerate=not any(a))


@dataclass
class KfResult:
    tilde_count: int
    count: int
    points: list
    unresolved: int
    branches: list


def solve_Kf(F, a):
    """Count K~_f (affine zeros) and K_f = K~_f / {+1, -1} for f = sum a_m x_m^2."""
    deform = clifford_deformation(F, a)
    if deform.degenerate:
        raise ValueError("f = 0 is not a regular element")
    branches = solve_affine(deform.equations)
    total = sum(b.count for b in branches)
    pts, unresolved = [], 0
    for b in branches:
        p, u = b.points()
        pts.extend(p)
        unresolved += u
    if total % 2:
        raise AssertionError("solutions of a homogeneous quadratic system must come in +/- pairs")
    return KfResult(total, total // 2, pts, unresolved, branches)


def family_presentation(a, b, c):
    """Relations yz+zy+a x^2, zx+xz+b y^2, xy+yx+c z^2 in that order."""
    a, b, c = map(as_fraction, (a, b, c))
    z = Fraction(0)
    return QuadraticPresentation(3, [
        [[a, z, z], [z, z, 1], [z, 1, z]],
        [[z, z, 1], [z, b, z], [1, z, z]],
        [[z, 1, z], [1, z, z], [z, z, c]],
    ])
