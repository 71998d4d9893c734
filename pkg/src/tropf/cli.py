"""Command line front end: ``tropf <command> --seed FILE ...``."""

import argparse
import hashlib
import json
import sys

from . import linalg as la
from .errors import TropfError
from .invariant import (
    check_seed_independence,
    f_invariant,
    is_log_canonical,
    poisson_bracket,
)
from .laurent import format_laurent
from .pointed import c_matrix, certificate_at, certify_good, g_matrix
from .seedfile import load, parse_expression, parse_vector, parse_word
from .seeds import format_word, vertices
from .tropical import (
    are_compatible,
    point_x,
    point_y,
    transport_x,
    transport_y,
    uplus,
    x_to_y,
    y_to_x,
)


class Output:
    """Collects printable lines together with the JSON document mirroring them."""

    def __init__(self):
        self.lines = []
        self.value = None
        self.audit = None

    def line(self, text=""):
        self.lines.append(text)

    def matrix(self, title, rows):
        self.line(f"{title}:")
        for r in rows:
            self.line("  [" + " ".join(str(x) for x in r) + "]")


def _matrix_json(rows):
    return [list(r) for r in rows]


def _word_arg(args, root, attr="word"):
    return parse_word(getattr(args, attr), root.n)


# --- commands --------------------------------------------------------------------


def cmd_mutate(args, root, out):
    word = _word_arg(args, root)
    seed = root.seed_at(word)
    cluster = [format_laurent(x, root.names) for x in seed.cluster]
    out.line(f"vertex: {format_word(word)}")
    out.matrix("B~", seed.btilde.rows)
    out.line("cluster:")
    for name, x in zip(root.names, cluster):
        out.line(f"  {name};t = {x}")
    value = {"word": format_word(word), "btilde": _matrix_json(seed.btilde.rows), "cluster": cluster}
    if root.pair is not None:
        lam = root.lambda_at(word)
        out.matrix("Lambda", lam)
        value["lambda"] = _matrix_json(lam)
    out.value = value


def cmd_invariant(args, root, out):
    u, v = parse_expression(args.u, root), parse_expression(args.v, root)
    at = _word_arg(args, root)
    value = f_invariant(u, v, root, at)
    out.line(f"(u || v)_F = {value}")
    out.value = value
    if args.audit:
        report = check_seed_independence(u, v, root, args.depth)
        out.line(f"audit to depth {args.depth}:")
        out.line("  vertex  <u,v>  <v,u>  (u||v)")
        rows = []
        for w in report.values:
            back = report.symmetrized[w] - report.values[w]
            out.line(f"  {format_word(w):6}  {report.values[w]:5}  {back:5}  {report.symmetrized[w]:6}")
            rows.append({"vertex": format_word(w), "pairing": report.values[w], "reverse": back, "invariant": report.symmetrized[w]})
        verdict = "PASS" if report.passed else "FAIL"
        out.line(verdict)
        out.audit = {"depth": args.depth, "rows": rows, "verdict": verdict}


def _unlabeled_key(seed, n):
    """Seed up to simultaneous permutation of unfrozen indices."""
    names = [format_laurent(x) for x in seed.cluster[:n]]
    order = sorted(range(n), key=lambda i: names[i])
    perm_rows = [order[i] for i in range(n)] + list(range(n, len(seed.cluster)))
    rows = tuple(tuple(seed.btilde.rows[r][c] for c in order) for r in perm_rows)
    return tuple(names[i] for i in order), rows


def cmd_explore(args, root, out):
    seen_vars, seen_seeds = {}, {}
    growth, hits, digests = [], [], {}
    n = root.n
    for w in vertices(n, args.depth):
        seed = root.seed_at(w)
        for x in seed.cluster[:n]:
            seen_vars.setdefault(format_laurent(x, root.names), w)
        if args.dedup == "labeled":
            key = (tuple(format_laurent(x) for x in seed.cluster), seed.btilde.rows)
        else:
            key = _unlabeled_key(seed, n)
        digests[format_word(w)] = hashlib.sha256(repr(key).encode()).hexdigest()[:16]
        if key in seen_seeds:
            hits.append((w, seen_seeds[key]))
        else:
            seen_seeds[key] = w
        if len(growth) < len(w) + 1:
            growth.append(0)
        growth[len(w)] = len(seen_vars)
    nverts = sum(1 for _ in vertices(n, args.depth))
    out.line(f"vertices: {nverts}")
    out.line(f"distinct unfrozen cluster variables: {len(seen_vars)}")
    out.line(f"frozen variables: {root.m - n}")
    out.line("cumulative variables by depth: " + " ".join(map(str, growth)))
    out.line(f"distinct seeds ({args.dedup}): {len(seen_seeds)}")
    out.line(f"periodicity hits: {len(hits)}")
    for w, first in hits[: args.show]:
        out.line(f"  [{format_word(w)}] repeats [{format_word(first)}]")
    out.value = {
        "vertices": nverts,
        "cluster_variables": len(seen_vars),
        "frozen": root.m - n,
        "growth": growth,
        "seeds": len(seen_seeds),
        "periodicity_hits": [[format_word(w), format_word(f)] for w, f in hits],
        "variables": sorted(seen_vars),
    }
    out.audit = {"digests": digests}


def _certificate(args, root):
    u = parse_expression(args.expr, root)
    return certificate_at(u, root, _word_arg(args, root))


def cmd_gvec(args, root, out):
    cert = _certificate(args, root)
    out.line(f"chart: {format_word(cert.chart)}")
    out.line("g = (" + ", ".join(map(str, cert.g)) + ")")
    out.value = {"chart": format_word(cert.chart), "g": list(cert.g)}


def cmd_fpoly(args, root, out):
    cert = _certificate(args, root)
    d = cert.describe()
    out.line(f"chart: {d['chart']}")
    out.line("g = (" + ", ".join(map(str, cert.g)) + ")")
    out.line(f"F = {d['F']}")
    out.line("f = (" + ", ".join(map(str, cert.fvec)) + ")")
    out.line(f"pointed: {d['pointed']}  bipointed: {d['bipointed']}  positive: {d['positive']}")
    out.value = d


def cmd_gmat(args, root, out):
    t, w = _word_arg(args, root), _word_arg(args, root, "chart")
    g = g_matrix(root, t, w)
    out.matrix(f"G~ of [{format_word(t)}] in chart [{format_word(w)}]", g)
    out.line(f"det = {la.det(g)}")
    out.value = {"matrix": _matrix_json(g), "det": la.det(g)}


def cmd_cmat(args, root, out):
    t, w = _word_arg(args, root), _word_arg(args, root, "chart")
    c = c_matrix(root, t, w)
    out.matrix(f"C of [{format_word(t)}] from [{format_word(w)}]", c)
    out.line(f"det = {la.det(c)}")
    out.value = {"matrix": _matrix_json(c), "det": la.det(c)}


def cmd_trop(args, root, out):
    anchor = parse_word(args.anchor, root.n)
    coord = parse_vector(args.coord, root.m)
    if args.mode == "transport-y":
        result = transport_y(point_y(anchor, coord, root), _word_arg(args, root), root)
    elif args.mode == "transport-x":
        result = transport_x(point_x(anchor, coord, root), _word_arg(args, root), root)
    elif args.mode == "y-to-x":
        result = y_to_x(point_y(anchor, coord, root), root).coord
    else:
        sq = json.loads(args.ext) if args.ext else None
        stilde = parse_vector(args.stilde, root.m) if args.stilde else None
        result = x_to_y(point_x(anchor, coord, root), root, sq, stilde).coord
    out.line("(" + ", ".join(map(str, result)) + ")")
    out.value = list(result)


def cmd_compat(args, root, out):
    p = point_y((), parse_vector(args.p, root.m), root)
    q = point_y((), parse_vector(args.q, root.m), root)
    verdict = are_compatible(p, q, args.depth, root)
    out.line(verdict.verdict)
    out.value = {"verdict": verdict.verdict, "compatible": verdict.compatible}
    if args.uplus:
        total = uplus(p, q, args.depth, root)
        out.line("sum = (" + ", ".join(map(str, total.coord)) + ")")
        out.value["sum"] = list(total.coord)


def cmd_poisson(args, root, out):
    f, g = parse_expression(args.f, root), parse_expression(args.g, root)
    text = format_laurent(poisson_bracket(f, g, root), root.names)
    out.line(f"{{f, g}} = {text}")
    out.value = text


def cmd_logcanon(args, root, out):
    f, g = parse_expression(args.f, root), parse_expression(args.g, root)
    verdict = is_log_canonical(f, g, root)
    out.line(verdict.verdict)
    out.value = {"log_canonical": verdict.log_canonical, "c": None if verdict.c is None else str(verdict.c)}


def cmd_goodcert(args, root, out):
    u = parse_expression(args.expr, root)
    cert = certify_good(u, root, args.depth)
    out.line(cert.verdict + ("  (bigood)" if cert.bigood else ""))
    rows = []
    for w, c in cert.certificates.items():
        d = c.describe()
        out.line(f"  [{d['chart']}] g = ({', '.join(map(str, c.g))})  F = {d['F']}")
        rows.append(d)
    out.value = {"verdict": cert.verdict, "bigood": cert.bigood}
    out.audit = {"charts": rows}


# --- wiring ------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="tropf", description="Exact cluster-pattern computations and F-invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--seed", required=True, help="JSON seed file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = command("mutate", cmd_mutate, "seed at the vertex reached by a word")
    p.add_argument("--word", default="")

    p = command("invariant", cmd_invariant, "F-invariant of two elements")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--word", default="", help="chart used for the value")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--audit", action="store_true", help="tabulate the pairing at every vertex within depth")

    p = command("explore", cmd_explore, "enumerate the exchange tree to a depth")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--dedup", choices=("labeled", "unlabeled"), default="labeled")
    p.add_argument("--show", type=int, default=10, help="periodicity hits to list")

    for name, func, text in (("gvec", cmd_gvec, "degree in a chart"), ("fpoly", cmd_fpoly, "F-polynomial and f-vector in a chart")):
        p = command(name, func, text)
        p.add_argument("expr")
        p.add_argument("--word", default="", help="chart")

    for name, func, text in (("gmat", cmd_gmat, "extended G-matrix"), ("cmat", cmd_cmat, "C-matrix")):
        p = command(name, func, text)
        p.add_argument("--word", default="", help="vertex t")
        p.add_argument("--chart", default="", help="reference vertex w")

    p = command("trop", cmd_trop, "tropical points: transports and the maps between them")
    p.add_argument("mode", choices=("transport-y", "transport-x", "y-to-x", "x-to-y"))
    p.add_argument("coord")
    p.add_argument("--anchor", default="")
    p.add_argument("--word", default="", help="path followed from the anchor")
    p.add_argument("--ext", help="square extension as a JSON matrix")
    p.add_argument("--stilde", help="skew-symmetrizer of the transposed extension")

    p = command("compat", cmd_compat, "sign-coherence of two Y-tropical points given at the root")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--uplus", action="store_true")

    for name, func, text in (("poisson", cmd_poisson, "Poisson bracket"), ("logcanon", cmd_logcanon, "log-canonicality test")):
        p = command(name, func, text)
        p.add_argument("f")
        p.add_argument("g")

    p = command("goodcert", cmd_goodcert, "certify an element good to a depth")
    p.add_argument("expr")
    p.add_argument("--depth", type=int, default=3)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = Output()
    errors = []
    code = 0
    try:
        root = load(args.seed)
        args.func(args, root, out)
    except TropfError as exc:
        errors.append({"name": exc.name, "message": str(exc)})
        code = exc.exit_code
    except OSError as exc:
        errors.append({"name": "ParseError", "message": f"cannot read seed file: {exc.strerror}"})
        code = 2
    if args.json:
        doc = {"value": out.value, "audit": out.audit, "errors": errors}
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2))
    else:
        if out.lines and not errors:
            print("\n".join(out.lines))
        for e in errors:
            print(f"error: {e['name']}: {e['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
