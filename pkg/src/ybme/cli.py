"""``ybme`` command line.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import harness
from .field import FieldError, parse_field
from .ideal import IdealGens, buchberger, ybme_ideal
from .matrix import Mat2, MatrixError, parse_matrix, rational_canonical_form
from .oracle import DEFAULT_MAX_Q, OracleBoundError
from .poly import format_poly, parse_poly
from .solver import is_solution, predict_cardinality, solve

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", help='field spec, "p^s" or a prime power')
    common.add_argument("--matrix", help='matrix literal "[[a,b],[c,d]]" of element encodings')
    for name in ("c1", "c2", "c", "a", "b"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q, help="oracle enumeration bound")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="ybme", description="Solve and verify XAX = AXA over GF(q).")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common], help="canonical similarity form")
    p = sub.add_parser("solve", parents=[common], help="all solutions X")
    p.add_argument("--check", metavar="FILE", help="re-verify a saved solve JSON ('-' for stdin)")
    sub.add_parser("count", parents=[common], help="number of solutions and the predicted count")
    p = sub.add_parser("verify", parents=[common], help="closed forms against the oracle")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3))
    p.add_argument("--all", action="store_true", help="run the full default grid")
    p.add_argument("--trials", type=int, default=100)
    sub.add_parser("conjecture", parents=[common], help="generic companion counts vs q + 3")
    sub.add_parser("nabla", parents=[common], help="split irreducible quadratics by disc = -b")
    p = sub.add_parser("groebner", parents=[common], help="Groebner bases and ideal identities")
    p.add_argument("--poly", action="append", help="generator; repeat for several")
    return parser


# -- argument helpers ---------------------------------------------------------------

def _ctx(args):
    if args.field is None:
        raise UsageError("--field is required")
    try:
        return parse_field(args.field)
    except FieldError as exc:
        raise UsageError(f"bad --field {args.field!r}: {exc}") from None


def _elem(ctx, name, v):
    if not 0 <= v < ctx.q:
        raise UsageError(f"--{name} {v} is not an element of GF({ctx.q})")
    return v


def _matrix(args, ctx) -> Mat2:
    if args.matrix is not None:
        try:
            return parse_matrix(args.matrix, ctx)
        except MatrixError as exc:
            raise UsageError(str(exc)) from None
    if args.c1 is not None or args.c2 is not None:
        if args.c1 is None or args.c2 is None:
            raise UsageError("--c1 and --c2 go together")
        return Mat2.diag(ctx, _elem(ctx, "c1", args.c1), _elem(ctx, "c2", args.c2))
    if args.c is not None:
        return Mat2.jordan(ctx, _elem(ctx, "c", args.c))
    if args.a is not None and args.b is not None:
        return Mat2.companion(ctx, _elem(ctx, "a", args.a), _elem(ctx, "b", args.b))
    raise UsageError("give --matrix or parameters (--c1/--c2, --c, or --a/--b)")


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _reports_out(reports, fmt) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=1)
    if fmt == "csv":
        return harness.reports_csv(reports).rstrip("\n")
    lines = [r.to_text() for r in reports]
    failed = [r.campaign for r in reports if not r.passed]
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} campaigns passed"
                 + (f"; failed: {', '.join(failed)}" if failed else ""))
    return "\n".join(lines)


def _status(reports) -> int:
    return OK if all(r.passed for r in reports) else FAILED


# -- verbs ------------------------------------------------------------------------------

def cmd_classify(args):
    B = _matrix(args, _ctx(args))
    cf = rational_canonical_form(B)
    if args.format == "json":
        return OK, json.dumps(cf.to_json(), sort_keys=True)
    params = ",".join(str(v) for v in cf.params)
    if args.format == "csv":
        return OK, _rows_csv(("matrix", "tag", "params", "canonical", "P"),
                             [(str(B), cf.tag, params, str(cf.matrix), str(cf.P))])
    return OK, f"{B} ~ {cf.matrix}  {cf.tag}({params})  P = {cf.P}"


def _check_saved(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        data = json.loads(text)
        ctx = parse_field(data["field"])
        A = Mat2(ctx, tuple(v for row in data["A"] for v in row))
        points = [Mat2(ctx, tuple(v for row in X for v in row)) for X in data["points"]]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read solution set from {path!r}: {exc}") from None
    bad = [X for X in points if not is_solution(A, X)]
    msg = f"{len(points) - len(bad)}/{len(points)} points satisfy XAX = AXA for A = {A}"
    if data.get("cardinality", len(points)) != len(points):
        bad.append(None)
        msg += f"; cardinality field says {data['cardinality']}"
    return (OK if not bad else FAILED), msg


def cmd_solve(args):
    if args.check:
        return _check_saved(args.check)
    ctx = _ctx(args)
    sol = solve(_matrix(args, ctx), max_q=args.max_q)
    if args.format == "json":
        return OK, sol.dumps()
    if args.format == "csv":
        rows = [(c.label, c.kind, str(X)) for c in sol.components for X in c.members]
        return OK, _rows_csv(("component", "kind", "X"), rows)
    lines = [f"A = {sol.matrixA} over GF({ctx.q}): {sol.cardinality} solutions ({sol.provenance})"]
    for c in sol.components:
        dim = "" if c.dimension is None else f", dim {c.dimension}"
        lines.append(f"  {c.label} [{c.kind}{dim}]: " + " ".join(str(X) for X in c.members))
    return OK, "\n".join(lines)


def cmd_count(args):
    ctx = _ctx(args)
    B = _matrix(args, ctx)
    n = solve(B, max_q=args.max_q).cardinality
    pred = predict_cardinality(B)
    status = OK if pred.value in (None, n) else FAILED
    if args.format == "json":
        return status, json.dumps({"count": n, "prediction": pred.to_json()}, sort_keys=True)
    if args.format == "csv":
        return status, _rows_csv(("count", "predicted", "source"), [(n, pred.value, pred.source)])
    return status, f"{n}\nsource: {pred.source} (predicted {pred.value})"


def cmd_verify(args):
    if args.all:
        reports = harness.run_all(trials=args.trials, seed=args.seed)
        return _status(reports), _reports_out(reports, args.format)
    if args.theorem is None:
        raise UsageError("verify needs --theorem {1,2,3} or --all")
    ctx = _ctx(args)
    run = {1: harness.verify_diagonal_class, 2: harness.verify_jordan_class,
           3: harness.verify_companion_isolated}[args.theorem]
    try:
        rep = run(ctx)
    except harness.CampaignError as exc:
        raise UsageError(str(exc)) from None
    return _status([rep]), _reports_out([rep], args.format)


def cmd_conjecture(args):
    try:
        rep = harness.check_conjecture(_ctx(args))
    except harness.CampaignError as exc:
        raise UsageError(str(exc)) from None
    return _status([rep]), _reports_out([rep], args.format)


def cmd_nabla(args):
    try:
        ns = harness.nabla_sets(_ctx(args))
    except harness.CampaignError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return OK, json.dumps(ns.to_json(), sort_keys=True)
    rows = [(ns.q, 0, a, b) for a, b in ns.nabla0] + [(ns.q, 1, a, b) for a, b in ns.nabla1]
    if args.format == "csv":
        return OK, _rows_csv(("q", "set", "a", "b"), rows)
    fmt = lambda s: " ".join(f"({a},{b})" for a, b in s) or "(empty)"
    return OK, (f"q = {ns.q}\n  disc = -b  [{len(ns.nabla0)}]: {fmt(ns.nabla0)}\n"
                f"  disc != -b [{len(ns.nabla1)}]: {fmt(ns.nabla1)}")


def cmd_groebner(args):
    ctx = _ctx(args)
    try:
        if args.poly:
            try:
                gens = IdealGens.of([parse_poly(t, ctx) for t in args.poly])
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        elif args.matrix is None and args.c1 is not None and args.c2 is None:
            rep = harness.verify_one_zero_ideal(ctx, _elem(ctx, "c1", args.c1))
            return _status([rep]), _reports_out([rep], args.format)
        elif args.matrix is None and args.a is not None and args.b is not None:
            rep = harness.verify_companion_ideal(ctx, _elem(ctx, "a", args.a), _elem(ctx, "b", args.b))
            return _status([rep]), _reports_out([rep], args.format)
        else:
            gens = ybme_ideal(_matrix(args, ctx))
    except harness.CampaignError as exc:
        raise UsageError(str(exc)) from None
    basis = [format_poly(g) for g in buchberger(gens)]
    if args.format == "json":
        return OK, json.dumps({"field": ctx.spec, "order": "lex", "basis": basis})
    if args.format == "csv":
        return OK, _rows_csv(("index", "polynomial"), list(enumerate(basis, 1)))
    return OK, "\n".join(basis)


VERBS = {"classify": cmd_classify, "solve": cmd_solve, "count": cmd_count, "verify": cmd_verify,
         "conjecture": cmd_conjecture, "nabla": cmd_nabla, "groebner": cmd_groebner}


def run(argv=None) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, rendered output)``.

    On a usage error the output is the diagnostic.
    """
    try:
        args = build_parser().parse_args(argv)
        status, text = VERBS[args.verb](args)
    except UsageError as exc:
        return USAGE, f"ybme: error: {exc}"
    except OracleBoundError as exc:
        return USAGE, f"ybme: error: {exc} (raise --max-q to allow it)"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return status, ""
    return status, text


def main(argv=None) -> int:
    status, text = run(argv)
    if text:
        print(text, file=sys.stderr if status == USAGE else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
