"""Command line interface.

Every subcommand reads one JSON document (from --input or stdin) and prints
either a readable table or JSON. Exit codes: 2 for malformed input, 3 when a
mathematical precondition fails, 4 when ``classify`` disagrees with the
shipped golden table.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import classify as cl
from .algebra.scalars import scalar_to_json
from .algebra.solve import PositiveDimensionalError
from .clifford import (
    CliffordAlgebra,
    center_scale,
    family_seq,
    normalize_seq,
    square_coefficients,
    superpotential,
)
from .geometry import (
    INF,
    IndeterminateImageError,
    PointVariety,
    ProjPoint,
    char_minors,
    fiber_check,
    quotient_geometry,
    singular_locus_report,
)
from .io import (
    SchemaError,
    matrix_to_json,
    parse_scalar,
    presentation_from_json,
    presentation_to_json,
    seq_from_json,
    validate,
    vector_to_json,
)
from .quadratic import (
    CentralQuadric,
    build_SF,
    hilbert_truncated,
    is_regular_sequence,
    iterated_dual,
    quadratic_dual,
    solve_Kf,
    symmetric_matrix,
)

EXIT_SCHEMA = 2
EXIT_MATH = 3
EXIT_GOLDEN = 4

YNAMES = ["y1", "y2", "y3", "y4", "y5", "y6"]


class MathError(Exception):
    pass


def _count(v):
    return "inf" if v == INF else int(v)


def _mode(doc):
    return doc.get("mode", "rational")


def _seq(doc, required=True):
    if "F" in doc:
        return seq_from_json(doc["F"], doc.get("n"))
    if "abc" in doc:
        return family_seq(*doc["abc"])
    if required:
        raise SchemaError("expected \"F\" or \"abc\"", "/")
    return None


def _presentation(doc):
    if "presentation" in doc:
        return presentation_from_json(doc["presentation"])
    return build_SF(_normalized(doc))


def _normalized(doc):
    F = _seq(doc)
    if not F.is_normalized():
        raise MathError("F is not normalized; run the normalize subcommand first")
    return F


def _squares(doc, F):
    out = []
    for k, item in enumerate(doc.get("quotient", [])):
        if "square" in item:
            out.append([parse_scalar(x, "rational", f"/quotient/{k}/square") for x in item["square"]])
        else:
            lam = [parse_scalar(x, _mode(doc), f"/quotient/{k}/linear") for x in item["linear"]]
            a = square_coefficients(lam, F)
            if not all(isinstance(x, Fraction) for x in a):
                raise MathError(f"the square of linear form {k + 1} is not rational")
            out.append(list(a))
    return out


def cmd_dual(doc):
    P = _presentation(doc)
    Q = quadratic_dual(P)
    return presentation_to_json(Q), "\n".join(["dual relations:"] + ["  " + r for r in Q.format(
        [f"u{i + 1}" for i in range(Q.n)])])


def cmd_normalize(doc):
    F = _seq(doc)
    G, w = normalize_seq(F)
    out = {"F": G.to_json(), "witness": w.to_json()}
    lines = [f"F'_{m + 1} = {[[str(x) for x in row] for row in M]}" for m, M in enumerate(G)]
    lines.append(f"mixing S = {out['witness']['s']}")
    lines.append(f"congruence T = {out['witness']['t']}")
    return out, "\n".join(lines)


def cmd_center(doc):
    F = _seq(doc)
    alg = CliffordAlgebra(F)
    basis = alg.center_degree2()
    g, c = alg.center_element()
    g2 = alg.mul(g, g)
    det = F.form().det()
    holds = g2 == alg.coerce(det.scale(c))
    out = {
        "center_degree2": [z.format() for z in basis],
        "g": g.format(),
        "c": str(c),
        "g_squared": g2.format(),
        "det": det.format(YNAMES[:F.r]),
        "identity_holds": holds,
        "g_central": all(alg.commutator(g, alg.x(i)).is_zero() for i in range(F.n)),
    }
    if _mode(doc) == "ext":
        out["scale"] = scalar_to_json(center_scale(F.n))
    lines = ["Z(C(F))_2 basis: " + ", ".join(out["center_degree2"]),
             f"g = {out['g']}", f"g^2 = {out['g_squared']}", f"c = {out['c']}, det = {out['det']}",
             f"g^2 == c*det: {holds}", f"g central: {out['g_central']}"]
    if "scale" in out:
        lines.append(f"(s g)^2 = det with s = {center_scale(F.n)}")
    return out, "\n".join(lines)


def cmd_hilbert(doc):
    P = _presentation(doc)
    D = doc.get("D", 6)
    extra = []
    if doc.get("quotient"):
        F = _normalized(doc)
        extra = [CentralQuadric.from_squares(a).coeffs for a in _squares(doc, F)]
    h = hilbert_truncated(P, D, extra)
    return {"hilbert": h}, " ".join(map(str, h))


def cmd_regular(doc):
    P = _presentation(doc)
    F = _normalized(doc)
    fs = [CentralQuadric.from_squares(a) for a in _squares(doc, F)]
    rep = is_regular_sequence(P, fs, doc.get("D", 6))
    out = {"regular": rep.regular, "central": rep.central, "observed": rep.observed,
           "expected": rep.expected, "first_mismatch": rep.first_mismatch}
    text = (f"regular: {rep.regular}\ncentral: {rep.central}\nobserved: {rep.observed}\n"
            f"expected: {rep.expected}")
    return out, text


def cmd_pointvariety(doc):
    P = _presentation(doc) if "presentation" in doc else build_SF(_seq(doc).bar())
    pv = PointVariety(P)
    out = {"M": [[e.format() for e in row] for row in pv.M.rows], "E": pv.curve.format()}
    lines = [f"M(x) = {pv.M.format()}", f"E = V({out['E']})"]
    evals = []
    for k, p in enumerate(doc.get("points", [])):
        p = [parse_scalar(x, _mode(doc), f"/points/{k}") for x in p]
        q = pv.sigma(p)
        try:
            phi = pv.phi(p)
        except IndeterminateImageError:
            phi = None
        evals.append({"p": vector_to_json(p), "sigma": vector_to_json(q),
                      "phi": None if phi is None else vector_to_json(phi)})
        lines.append(f"sigma{ProjPoint(p)} = {q}, Phi = {phi}")
    if evals:
        out["points"] = evals
    return out, "\n".join(lines)


def cmd_charvariety(doc):
    F = _seq(doc)
    s = doc.get("s", F.n)
    minors = char_minors(F, s)
    out = {"s": s, "minors": [m.format(YNAMES[:F.r]) for m in minors]}
    lines = [f"{s}x{s} minors:"] + ["  " + m for m in out["minors"]]
    if F.n == 3 and F.r == 3:
        rep = singular_locus_report(F)
        out["X2_vs_singular_X3"] = {"X2": _count(rep.X2_count), "singular": _count(rep.sing_count),
                                    "agree": rep.agree}
        lines.append(f"#X2 = {_count(rep.X2_count)}, #Sing X3 = {_count(rep.sing_count)}, agree: {rep.agree}")
    return out, "\n".join(lines)


def cmd_quotient(doc):
    F = _normalized(doc)
    lams = [[parse_scalar(x, _mode(doc), f"/quotient/{k}/linear") for x in item["linear"]]
            for k, item in enumerate(doc.get("quotient", [])) if "linear" in item]
    if not lams:
        raise SchemaError("quotient needs at least one {\"linear\": [...]} entry", "/quotient")
    geom = quotient_geometry(F, lams)
    out = {
        "squares": [[str(x) for x in a] for a in geom.squares],
        "E_A": "line" if geom.E_points == "line" else [vector_to_json(p) for p in geom.E_points],
        "sigma_A": {"fixed": int(geom.fixed), "swapped": _count(geom.swapped)},
        "X_A": [_count(geom.X3_count), _count(geom.X2_count)],
        "count_identity": geom.count_identity_holds(),
    }
    if geom.E_points != "line":
        out["fibers"] = vars(fiber_check(F, geom))
    E = "a line" if geom.E_points == "line" else f"{len(geom.E_points)} point(s): {geom.E_points}"
    text = (f"E_A: {E}\nsigma_A: fixes {geom.fixed}, swaps {out['sigma_A']['swapped']} pair(s)\n"
            f"(#X3_A, #X2_A) = ({out['X_A'][0]}, {out['X_A'][1]})")
    return out, text


def cmd_kf(doc):
    F = _normalized(doc)
    sq = _squares(doc, F)
    if len(sq) != 1:
        raise SchemaError("kf takes exactly one quotient entry", "/quotient")
    res = solve_Kf(F, sq[0])
    out = {"K_tilde": res.tilde_count, "K": res.count, "smooth": res.count == 2 ** (F.n - 1),
           "points": [vector_to_json(p) for p in res.points], "unresolved": res.unresolved}
    return out, f"#K~_f = {res.tilde_count}, #K_f = {res.count}, smooth: {out['smooth']}"


def cmd_segre(doc):
    if "pencil" in doc:
        G1, G2 = doc["pencil"]
    else:
        F = _normalized(doc)
        sq = _squares(doc, F)
        if len(sq) != 1:
            raise SchemaError("segre from a quotient needs exactly one quadric", "/quotient")
        q1, q2 = iterated_dual(build_SF(F), [CentralQuadric.from_squares(sq[0])]).commutative_quadrics()
        G1, G2 = symmetric_matrix(q1), symmetric_matrix(q2)
        G1 = matrix_to_json(G1)
        G2 = matrix_to_json(G2)
    sym = cl.segre_symbol([[Fraction(x) for x in r] for r in G1], [[Fraction(x) for x in r] for r in G2])
    return {"segre": sym, "pencil": [G1, G2]}, sym


def cmd_superpotential(doc):
    P = _presentation(doc)
    w = superpotential(P)
    if w is None:
        return {"superpotential": None}, "none"
    terms = {"".join(f"x{i + 1}" for i in word): str(c) for word, c in sorted(w.terms.items())}
    return {"superpotential": terms, "calabi_yau": w.calabi_yau}, " + ".join(
        f"{c}*{m}" if c != "1" else m for m, c in terms.items())


def cmd_classify(doc):
    rows = doc.get("rows")
    records = cl.classify_all(rows)
    got = [r.to_json() for r in records]
    header = f"{'A':34} {'E_A':>5} {'fix':>4} {'swap':>5} {'(X3,X2)':>9} {'E_A!':>13} {'Segre':>10} {'K_f':>4}"
    lines = [header]
    for r in got:
        lines.append(f"{r['label']:34} {str(r['E_A']):>5} {r['sigma_A']['fixed']:>4} {str(r['sigma_A']['swapped']):>5} "
                     f"{'(%s,%s)' % tuple(r['X_A']):>9} {r['E_dual']:>13} {str(r['segre'] or '-'):>10} "
                     f"{str(r['K_f'] if r['K_f'] is not None else '-'):>4}")
    diffs = cl.diff_against_golden(got) if rows is None else []
    if diffs:
        raise GoldenMismatch(diffs)
    return {"records": got}, "\n".join(lines)


class GoldenMismatch(Exception):
    def __init__(self, diffs):
        super().__init__("\n".join(diffs))
        self.diffs = diffs


COMMANDS = {
    "dual": (cmd_dual, "quadratic dual of a presentation (or of S^F)"),
    "normalize": (cmd_normalize, "normalize a matrix sequence, with witness"),
    "center": (cmd_center, "degree-2 center and the central element g of C(F)"),
    "hilbert": (cmd_hilbert, "truncated Hilbert series"),
    "regular": (cmd_regular, "test a central regular sequence of quadrics"),
    "pointvariety": (cmd_pointvariety, "point variety E and sigma"),
    "charvariety": (cmd_charvariety, "minors defining the characteristic varieties"),
    "quotient": (cmd_quotient, "E_A, sigma_A and X_A for a quotient by squares of linear forms"),
    "kf": (cmd_kf, "count the points of K_f"),
    "segre": (cmd_segre, "Segre symbol of a pencil of conics"),
    "superpotential": (cmd_superpotential, "symmetric superpotential, if any"),
    "classify": (cmd_classify, "classify the shipped quotients and compare with the golden table"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="cliffqci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", "-i", help="JSON input file (default: stdin; classify needs none)")
        p.add_argument("--format", choices=["table", "json"], default="table")
    return parser


def _read(args):
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    elif args.command == "classify" and sys.stdin.isatty():
        text = "{}"
    else:
        text = sys.stdin.read() or "{}"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        doc = validate(_read(args))
        out, text = func(doc)
    except SchemaError as exc:
        print(f"schema error at {exc}", file=stderr)
        return EXIT_SCHEMA
    except GoldenMismatch as exc:
        print("golden table mismatch:", file=stderr)
        for d in exc.diffs:
            print("  " + d, file=stderr)
        return EXIT_GOLDEN
    except (MathError, ValueError, PositiveDimensionalError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MATH
    if args.format == "json":
        print(json.dumps(out, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
