"""Classification of quotients of three-variable Clifford quantum polynomial algebras by central quadrics."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import json
from importlib import resources

from .algebra import linalg
from .algebra.matrix import PolyMatrix
from .algebra.poly import MultiPoly
from .algebra.smith import DegeneratePencilError, smith_normal_form
from .algebra.solve import PositiveDimensionalError, solve_projective
from .algebra.upoly import UniPoly, coprime_basis, multiplicity, squarefree_decomposition
from .clifford.seq import family_seq
from .geometry import INF, quotient_geometry
from .quadratic import CentralQuadric, build_SF, iterated_dual, solve_Kf, symmetric_matrix

# Segre symbol reported for a pencil whose members are all singular.
DEGENERATE_SEGRE = "[1,1;;1]"

AMBIENT_NAMES = {(0, 0, 0): "S", (1, 0, 0): "S'", (1, 1, 0): "NC"}


def _pencil_member(G1, G2, s, t):
    return [[s * a + t * b for a, b in zip(r1, r2)] for r1, r2 in zip(G1, G2)]


def pencil_is_degenerate(G1, G2):
    s, t = MultiPoly.gens(2)
    M = PolyMatrix([[a * s + b * t for a, b in zip(r1, r2)] for r1, r2 in zip(G1, G2)], 2)
    return M.det().is_zero()


def segre_symbol(G1, G2):
    """Segre symbol of the pencil spanned by two symmetric 3 x 3 matrices.

    Computed from the elementary divisors of lambda G - G' with G a
    nonsingular member, grouping divisors that belong to the same root.
    """
    G1 = [[Fraction(x) for x in r] for r in G1]
    G2 = [[Fraction(x) for x in r] for r in G2]
    if linalg.rank([sum(G1, []), sum(G2, [])], 9) < 2:
        raise ValueError("the two matrices are linearly dependent")
    if pencil_is_degenerate(G1, G2):
        return DEGENERATE_SEGRE
    G, Gp = None, None
    for c in range(0, 64):
        for cand, other in ((_pencil_member(G1, G2, 1, c), G2), (_pencil_member(G1, G2, c, 1), G1)):
            if linalg.det(cand) != 0:
                G, Gp = cand, other
                break
        if G is not None:
            break
    lam = UniPoly.x()
    pencil = [[lam * a - b for a, b in zip(r, rp)] for r, rp in zip(G, Gp)]
    try:
        factors = smith_normal_form(pencil)
    except DegeneratePencilError:
        return DEGENERATE_SEGRE
    pieces = []
    for d in factors:
        if d.degree > 0:
            pieces.extend(squarefree_decomposition(d).values())
    groups = []
    for b in coprime_basis(pieces):
        exps = sorted((multiplicity(b, d) for d in factors), reverse=True)
        exps = tuple(e for e in exps if e > 0)
        groups.extend([exps] * b.degree)
    groups.sort(key=lambda g: (g[0], len(g), g), reverse=True)
    return "[" + ",".join(str(g[0]) if len(g) == 1 else "(" + ",".join(map(str, g)) + ")" for g in groups) + "]"


def base_locus_conics(q1, q2):
    """Number of distinct points of V(q1, q2) in P^2, or INF if the conics share a component."""
    try:
        return sum(b.count for b in solve_projective([q1, q2]))
    except PositiveDimensionalError:
        return INF


def conic_type(q):
    rk = linalg.rank(symmetric_matrix(q), 3)
    return {1: "double line", 2: "2 lines", 3: "smooth conic"}[rk]


def _plural(k):
    return "1 point" if k == 1 else f"{k} points"


def _json_count(v):
    return "inf" if v == INF else int(v)


@dataclass
class ClassificationRecord:
    label: str
    ambient: str
    abc: tuple
    squares: list
    linear_forms: list
    E_A: object
    sigma_fixed: int
    sigma_swapped: object
    X3: float
    X2: float
    collinear_triples: object
    E_dual: str
    segre: object
    K_f: object
    smooth: object

    @property
    def r(self):
        return len(self.squares)

    @property
    def klass(self):
        return f"C3,{self.r}"

    def to_json(self):
        return {
            "label": self.label,
            "ambient": self.ambient,
            "abc": [str(x) for x in self.abc],
            "class": self.klass,
            "quadrics": [[str(x) for x in a] for a in self.squares],
            "E_A": self.E_A if self.E_A == "line" else int(self.E_A),
            "sigma_A": {"fixed": int(self.sigma_fixed), "swapped": _json_count(self.sigma_swapped)},
            "X_A": [_json_count(self.X3), _json_count(self.X2)],
            "collinear_triples": self.collinear_triples,
            "E_dual": self.E_dual,
            "segre": self.segre,
            "K_f": self.K_f,
            "smooth": self.smooth,
        }


def _pick_root(points):
    """Prefer a rational solution g of g^2 = f."""
    rational = [p for p in points if all(isinstance(c, Fraction) for c in p)]
    pool = rational or list(points)
    if not pool:
        return None

    def key(p):
        # smallest absolute values first, positive before negative
        return [(abs(c), -c) if isinstance(c, Fraction) else (1, 0) for c in p]

    return min(pool, key=key)


def square_roots(F, a):
    """A linear form g with g^2 = sum a_m x_m^2, together with the count of K_f."""
    res = solve_Kf(F, a)
    g = _pick_root(res.points)
    if g is None:
        raise ValueError(f"no exactly representable square root of {a}")
    return g, res


def classify_quotient(abc, squares, label=None):
    abc = tuple(Fraction(x) for x in abc)
    squares = [tuple(Fraction(x) for x in a) for a in squares]
    F = family_seq(*abc)
    r = len(squares)
    gs = []
    kf = None
    for a in squares:
        g, res = square_roots(F, a)
        gs.append(g)
        if r == 1:
            kf = res.count
    geom = quotient_geometry(F, gs)
    dual = iterated_dual(build_SF(F), [CentralQuadric.from_squares(a) for a in squares])
    quadrics = dual.commutative_quadrics()
    segre = None
    smooth = None
    if r == 1:
        q1, q2 = quadrics
        pts = base_locus_conics(q1, q2)
        E_dual = "curve" if pts == INF else _plural(pts)
        segre = segre_symbol(symmetric_matrix(q1), symmetric_matrix(q2))
        smooth = smoothness_check(geom, kf)
    elif r == 2:
        E_dual = conic_type(quadrics[0])
    else:
        E_dual = "P^2"
    return ClassificationRecord(
        label=label or default_label(abc, squares),
        ambient=AMBIENT_NAMES.get(tuple(int(x) for x in abc), "S^(%s,%s,%s)" % abc),
        abc=abc,
        squares=squares,
        linear_forms=gs,
        E_A="line" if geom.E_points == "line" else len(geom.E_points),
        sigma_fixed=geom.fixed,
        sigma_swapped=geom.swapped,
        X3=geom.X3_count,
        X2=geom.X2_count,
        collinear_triples=None if geom.E_points == "line" else collinear_triples(geom.E_points),
        E_dual=E_dual,
        segre=segre,
        K_f=kf,
        smooth=smooth,
    )


def collinear_triples(points):
    return sum(1 for trio in combinations(points, 3) if linalg.det([list(p) for p in trio]) == 0)


def smoothness_check(geom, kf):
    """Smoothness of Proj of the Clifford deformation by three independent criteria."""
    by_E = geom.E_points != "line" and len(geom.E_points) == 6
    by_X = (geom.X3_count, geom.X2_count) == (3, 0)
    by_K = kf == 4
    if not by_E == by_X == by_K:
        raise AssertionError(f"smoothness criteria disagree: E={by_E} X={by_X} K={by_K}")
    return by_E


def default_label(abc, squares):
    names = ["x", "y", "z"]
    parts = []
    for a in squares:
        terms = []
        for c, v in zip(a, names):
            if c:
                terms.append(f"{v}^2" if c == 1 else f"{c}{v}^2")
        parts.append("+".join(terms))
    head = "S^(%s,%s,%s)" % tuple(str(x) for x in abc)
    return f"{head}/({', '.join(parts)})"


def load_json(name):
    return json.loads(resources.files("cliffqci.data").joinpath(name).read_text())


def table_rows():
    return load_json("quotient_rows.json")


def classify_all(rows=None):
    rows = table_rows() if rows is None else rows
    return [classify_quotient(row["abc"], row["quadrics"], row.get("label")) for row in rows]


def golden_records():
    return load_json("quotient_golden.json")


def diff_against_golden(records, golden=None):
    """List of human-readable differences; empty when the records match exactly."""
    golden = golden_records() if golden is None else golden
    got = [r.to_json() if isinstance(r, ClassificationRecord) else r for r in records]
    diffs = []
    if len(got) != len(golden):
        diffs.append(f"row count {len(got)} != {len(golden)}")
    for k, (a, b) in enumerate(zip(got, golden)):
        for key in sorted(set(a) | set(b)):
            if a.get(key) != b.get(key):
                diffs.append(f"row {k + 1} ({b.get('label')}): {key}: got {a.get(key)!r}, expected {b.get(key)!r}")
    return diffs
