"""Command-line front end.

Subcommands:

* ``triangle`` -- emit a number triangle (or an order-r number slice) as
  JSON or CSV, symbolically or specialized at a rational λ.
* ``poly`` -- emit a polynomial family, optionally specialized at rational
  λ and/or x.
* ``verify`` -- run the identity suite; exit 0 when every selected check
  passes, 1 otherwise.
* ``eval`` -- evaluate a single table entry or family member given as a
  compact expression such as ``s2deg(4,2)`` or ``degbell(3)``.

JSON output is canonical: keys sorted, rationals as "num/den" strings with
the denominator omitted when 1, λ-polynomials as coefficient arrays ascending
in λ-power (constants collapse to a bare rational string), x-polynomials as
arrays of λ-coefficient arrays ascending in x-power.  Rationals are never
floats, so parsing and re-emitting a document reproduces it byte for byte.
CSV is the human-readable flattening; polynomial values appear in canonical
text form ("1 - λ" style).

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output goes
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import __version__
from .algebra import LambdaPoly, XPoly, specialize
from .families import FAMILY_KINDS, build_family
from .identities import (
    SuiteConfig,
    UnknownIdentityError,
    describe_identities,
    run_suite,
)
from .scalars import as_scalar, is_scalar, scalar_str
from .triangles import (
    SLICE_KINDS,
    TRIANGLE_KINDS,
    classical_triangles,
    deg_bernoulli,
    jstirling1,
    jstirling2,
    korobov,
    stirling1_deg,
    stirling2_deg,
    t_numbers,
)

MAX_ORDER = 24


class UsageError(Exception):
    pass


def render_value(value):
    """Canonical JSON form of a scalar / λ-polynomial / x-polynomial."""
    if is_scalar(value):
        return scalar_str(value)
    if isinstance(value, LambdaPoly):
        constant = value.constant_value()
        if constant is not None:
            return scalar_str(constant)
        return [scalar_str(c) for c in value.coeffs]
    if isinstance(value, XPoly):
        constant = value.constant_value()
        if constant is not None:
            return render_value(constant)
        return [[scalar_str(s) for s in c.coeffs] for c in value.coeffs]
    raise TypeError(f"cannot render {type(value).__name__}")


def render_text(value) -> str:
    """Flat text form for the CSV output."""
    if is_scalar(value):
        return scalar_str(value)
    return str(value)


def render_json(document) -> str:
    return json.dumps(
        document, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    ) + "\n"


def _document(kind: str, order: int, entries, parameters) -> dict:
    return {
        "kind": kind,
        "order": order,
        "entries": entries,
        "metadata": {"tool_version": __version__, "parameters": parameters},
    }


def _csv_lines(fieldnames, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fieldnames)
    writer.writerows(rows)
    return buffer.getvalue()


def _rational_arg(text: str):
    try:
        return as_scalar(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from exc


def _check_order(order: int) -> int:
    if order < 0:
        raise UsageError("order must be nonnegative")
    if order > MAX_ORDER:
        raise UsageError(f"order {order} exceeds the guard rail {MAX_ORDER}")
    return order


def _build_triangle(kind: str, order: int):
    if kind == "s2deg":
        return stirling2_deg(order)
    if kind == "s1deg":
        return stirling1_deg(order)
    if kind == "j2deg":
        return jstirling2(order)
    if kind == "j1deg":
        return jstirling1(order)
    if kind == "s2":
        return classical_triangles(order)[0]
    if kind == "s1":
        return classical_triangles(order)[1]
    if kind == "t":
        return t_numbers(order)
    raise UsageError(f"unknown triangle kind {kind!r}")


def _build_slice(kind: str, order: int, r: int):
    if r < 1:
        raise UsageError("slice order r must be >= 1")
    if kind == "korobov":
        return korobov(order, r)
    return deg_bernoulli(order, r)


def cmd_triangle(args) -> int:
    order = _check_order(args.order)
    lam = args.lam
    parameters = {
        "kind": args.kind,
        "order": order,
        "lambda": None if lam is None else scalar_str(lam),
    }
    if args.kind in SLICE_KINDS:
        r = 1 if args.r is None else args.r
        values = _build_slice(args.kind, order, r)
        parameters["r"] = r
        entries = []
        rows = []
        for n, value in enumerate(values):
            out = value if lam is None else value.eval(lam)
            entries.append({"n": n, "value": render_value(out)})
            rows.append((n, render_text(out)))
        fieldnames = ("n", "value")
    else:
        if args.r is not None:
            raise UsageError(f"--r only applies to kinds {'/'.join(SLICE_KINDS)}")
        triangle = _build_triangle(args.kind, order)
        entries = []
        rows = []
        for n in range(order + 1):
            for k in range(n + 1):
                value = triangle.entry(n, k)
                out = value if lam is None else value.eval(lam)
                entries.append({"n": n, "k": k, "value": render_value(out)})
                rows.append((n, k, render_text(out)))
        fieldnames = ("n", "k", "value")
    if args.format == "json":
        sys.stdout.write(render_json(_document(args.kind, order, entries, parameters)))
    else:
        sys.stdout.write(_csv_lines(fieldnames, rows))
    return 0


def cmd_poly(args) -> int:
    order = _check_order(args.order)
    family = build_family(args.family, order)
    lam, x = args.lam, args.x
    parameters = {
        "family": args.family,
        "order": order,
        "lambda": None if lam is None else scalar_str(lam),
        "x": None if x is None else scalar_str(x),
    }
    entries = []
    rows = []
    for n in range(order + 1):
        p = family.poly(n)
        if lam is not None:
            out = specialize(p, lam, x)  # scalar, or x-coefficients when x is None
        elif x is not None:
            out = p.eval_x(x)
        else:
            out = p
        entries.append({"n": n, "value": render_value(out)})
        rows.append((n, render_text(out)))
    if args.format == "json":
        sys.stdout.write(render_json(_document(args.family, order, entries, parameters)))
    else:
        sys.stdout.write(_csv_lines(("n", "value"), rows))
    return 0


def cmd_verify(args) -> int:
    if args.list:
        rows = describe_identities()
        if args.format == "json":
            entries = [
                {"id": i, "description": d, "stretch": s} for i, d, s in rows
            ]
            parameters = {"list": True}
            sys.stdout.write(render_json(_document("identities", 0, entries, parameters)))
        else:
            width = max(len(i) for i, _, _ in rows)
            for i, d, s in rows:
                flag = "  [stretch]" if s else ""
                sys.stdout.write(f"{i:<{width}s}  {d}{flag}\n")
        return 0
    if args.order < 1:
        raise UsageError("verification order must be >= 1")
    if args.order > MAX_ORDER:
        raise UsageError(f"order {args.order} exceeds the guard rail {MAX_ORDER}")
    lambda_list = tuple(args.lambda_list) if args.lambda_list else ()
    identity_filter = tuple(args.filter) if args.filter else None
    try:
        config = SuiteConfig(
            order=args.order,
            lambda_specializations=lambda_list,
            identity_filter=identity_filter,
            include_stretch=args.include_stretch,
        )
        results = run_suite(config)
    except UnknownIdentityError as exc:
        raise UsageError(str(exc)) from exc
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        entries = []
        for r in results:
            record = {"id": r.identity_id, "order": r.order, "status": r.status}
            if r.witness is not None:
                record["witness"] = r.witness
            entries.append(record)
        parameters = {
            "order": args.order,
            "lambda_list": [scalar_str(v) for v in lambda_list],
            "filter": list(identity_filter) if identity_filter else None,
            "include_stretch": args.include_stretch,
        }
        sys.stdout.write(render_json(_document("verify", args.order, entries, parameters)))
    else:
        width = max(len(r.identity_id) for r in results) if results else 0
        for r in results:
            line = f"{r.status:4s}  {r.identity_id:<{width}s}  order={r.order}"
            if r.witness:
                line += f"  {r.witness}"
            sys.stdout.write(line + "\n")
        sys.stdout.write(
            f"{len(results)} checks: {len(results) - len(failed)} passed, "
            f"{len(failed)} failed\n"
        )
    return 1 if failed else 0


_EVAL_RE = re.compile(r"^\s*([a-z0-9]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")


def _eval_expr(expr: str, lam, x):
    match = _EVAL_RE.match(expr)
    if not match:
        raise UsageError(
            f"cannot parse expression {expr!r}; expected name(n) or name(n,k)"
        )
    name, first, second = match.group(1), int(match.group(2)), match.group(3)
    if name in FAMILY_KINDS:
        if second is not None:
            raise UsageError(f"family {name} takes a single index, got {expr!r}")
        n = _check_order(first)
        p = build_family(name, n).poly(n)
        if lam is not None:
            return specialize(p, lam, x)
        if x is not None:
            return p.eval_x(x)
        return p
    if name not in SLICE_KINDS and name not in TRIANGLE_KINDS:
        raise UsageError(f"unknown table or family {name!r}")
    if x is not None:
        raise UsageError("--x only applies to polynomial families")
    if second is None:
        raise UsageError(f"{name} needs two indices, e.g. {name}({first},1)")
    if name in SLICE_KINDS:
        n, r = first, int(second)
        _check_order(n)
        value = _build_slice(name, n, r)[n]
    else:
        n, k = first, int(second)
        _check_order(n)
        value = _build_triangle(name, n).entry(n, k)
    return value if lam is None else value.eval(lam)


def cmd_eval(args) -> int:
    value = _eval_expr(args.expr, args.lam, args.x)
    parameters = {
        "expr": args.expr,
        "lambda": None if args.lam is None else scalar_str(args.lam),
        "x": None if args.x is None else scalar_str(args.x),
    }
    if args.format == "json":
        entries = [{"expr": args.expr, "value": render_value(value)}]
        sys.stdout.write(render_json(_document("eval", 0, entries, parameters)))
    else:
        sys.stdout.write(_csv_lines(("expr", "value"), [(args.expr, render_text(value))]))
    return 0


def _comma_list(text: str):
    return [part.strip() for part in text.split(",") if part.strip()]


def _lambda_list_arg(text: str):
    try:
        return [as_scalar(part) for part in _comma_list(text)]
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"malformed rational list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenpoly",
        description="Exact tables, polynomial families, and identity checks "
        "for degenerate Stirling-type numbers.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="emit a number triangle or slice")
    tri.add_argument("--kind", required=True, choices=TRIANGLE_KINDS + SLICE_KINDS)
    tri.add_argument("--order", required=True, type=int)
    tri.add_argument("--r", type=int, default=None,
                     help="slice order (korobov/degbernoulli only; default 1)")
    tri.add_argument("--lambda", dest="lam", type=_rational_arg, default=None,
                     metavar="P/Q", help="specialize λ at this rational")
    tri.add_argument("--format", choices=("json", "csv"), default="json")
    tri.set_defaults(handler=cmd_triangle)

    pol = sub.add_parser("poly", help="emit a polynomial family")
    pol.add_argument("--family", required=True, choices=FAMILY_KINDS)
    pol.add_argument("--order", required=True, type=int)
    pol.add_argument("--lambda", dest="lam", type=_rational_arg, default=None,
                     metavar="P/Q")
    pol.add_argument("--x", dest="x", type=_rational_arg, default=None, metavar="P/Q")
    pol.add_argument("--format", choices=("json", "csv"), default="json")
    pol.set_defaults(handler=cmd_poly)

    ver = sub.add_parser("verify", help="run the identity suite")
    ver.add_argument("--order", type=int, default=12)
    ver.add_argument("--lambda-list", dest="lambda_list", type=_lambda_list_arg,
                     default=None, metavar="P/Q,...",
                     help="additionally check at these rational λ values")
    ver.add_argument("--filter", type=_comma_list, default=None, metavar="ID,...",
                     help="run only these identity ids")
    ver.add_argument("--include-stretch", action="store_true",
                     help="include the off-by-default stretch checks")
    ver.add_argument("--list", action="store_true",
                     help="list the registered identity ids and exit")
    ver.add_argument("--format", choices=("table", "json"), default="table")
    ver.set_defaults(handler=cmd_verify)

    ev = sub.add_parser("eval", help="evaluate one table entry or family member")
    ev.add_argument("--expr", required=True,
                    help="e.g. s2deg(4,2), degbell(3), korobov(5,2)")
    ev.add_argument("--lambda", dest="lam", type=_rational_arg, default=None,
                    metavar="P/Q")
    ev.add_argument("--x", dest="x", type=_rational_arg, default=None, metavar="P/Q")
    ev.add_argument("--format", choices=("json", "csv"), default="json")
    ev.set_defaults(handler=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"degenpoly: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
