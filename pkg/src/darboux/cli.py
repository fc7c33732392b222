"""Command-line interface: darboux <subcommand> [flags]."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .arith import format_rational, parse_rational
from .branching import INF, branching_data, check_dramifico, genus_table
from .coverings import covering_keys, get_covering
from .curvefunc import CurveFunction, principal_divisor
from .elliptic import CURVES, Component, CurvePoint, QDivisor, on_curve, order_of
from .errors import DarbouxError
from .evaluations import (Catalog, derive_contiguous, load_catalog, verify, verify_all)
from .hypergeom import HpgParams, classify_schwartz, exponent_diffs

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(self.prog, message)


# --- formatting ----------------------------------------------------------------

def format_point(P) -> str:
    if isinstance(P, CurvePoint):
        if P.is_infinity:
            return "O"
        return f"({format_rational(P.x)},{format_rational(P.y)})"
    if isinstance(P, Component):
        return f"{{{P.p} = 0, xi = {P.q}}}"
    return repr(P)


def format_divisor(D: QDivisor) -> str:
    if D.is_zero():
        return "0"
    items = sorted(D.coeffs.items(), key=lambda kv: (not isinstance(kv[0], CurvePoint),
                                                     format_point(kv[0])))
    return " + ".join(f"{format_rational(a)}*{format_point(P)}" for P, a in items)


def divisor_json(D: QDivisor) -> list:
    return [{"point": format_point(P), "coefficient": format_rational(a)}
            for P, a in sorted(D.coeffs.items(), key=lambda kv: format_point(kv[0]))]


def _rationals(text: str, flag: str, n: int | None = None) -> list[Fraction]:
    try:
        vals = [parse_rational(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(flag, f"expected comma-separated rationals, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(flag, f"expected {n} values, got {len(vals)}")
    return vals


def _value(text: str, flag: str):
    if text in ("inf", "oo", "infinity"):
        return INF
    return _rationals(text, flag, 1)[0]


def _curve(name: str):
    if name not in CURVES:
        raise UsageError("--curve", f"unknown curve {name!r}; choose from {', '.join(CURVES)}")
    return CURVES[name]


def _catalog(args) -> Catalog:
    return load_catalog(args.catalog)


# --- subcommands ---------------------------------------------------------------

def cmd_verify(args, out):
    cat = _catalog(args)
    if args.id not in cat:
        raise UsageError("--id", f"no record {args.id!r} in the catalog")
    rep = verify(cat.get(args.id), args.order, args.branch)
    if args.json:
        out.append(rep.to_dict())
    else:
        out.append(_report_line(rep))
    return EXIT_OK if rep.ok else EXIT_FALSE


def _report_line(rep) -> str:
    if rep.ok:
        return f"{rep.id}: ok through order {rep.order}"
    if rep.error:
        return f"{rep.id}: FAILED ({rep.error})"
    return f"{rep.id}: FAILED at coefficient index {rep.mismatch_index} (order {rep.order})"


def cmd_verify_all(args, out):
    reps = verify_all(args.order, _catalog(args), args.workers)
    ok = all(r.ok for r in reps)
    if args.json:
        out.append({"order": args.order, "ok": ok, "reports": [r.to_dict() for r in reps]})
    else:
        out.extend(_report_line(r) for r in reps)
        out.append(f"{sum(r.ok for r in reps)}/{len(reps)} verified")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_classify(args, out):
    if (args.params is None) == (args.exps is None):
        raise UsageError("--params", "give exactly one of --params or --exps")
    if args.params is not None:
        try:
            p = HpgParams(*_rationals(args.params, "--params", 3))
        except DarbouxError as exc:
            raise UsageError("--params", str(exc)) from None
        e = exponent_diffs(p).as_tuple()
    else:
        e = tuple(_rationals(args.exps, "--exps", 3))
    st = classify_schwartz(e)
    if args.json:
        out.append({"exponent_differences": [format_rational(q) for q in e],
                    "type": st.label, "family": st.family,
                    "representative": None if st.representative is None
                    else [format_rational(q) for q in st.representative]})
    else:
        out.append(f"{st.label} ({st.family})")
    return EXIT_OK


def cmd_derive(args, out):
    cat = _catalog(args)
    if args.base not in cat:
        raise UsageError("--base", f"no record {args.base!r} in the catalog")
    try:
        target = HpgParams(*_rationals(args.target, "--target", 3))
    except DarbouxError as exc:
        raise UsageError("--target", str(exc)) from None
    rec = derive_contiguous(target, cat.get(args.base), args.id)
    if args.out:
        path = Path(args.out)
        if path.exists():
            existing = load_catalog(path)
            records = [r for r in existing if r.id != rec.id] + [rec]
        else:
            records = [rec]
        Catalog(records).save(path)
    if args.json:
        out.append({"record": rec.to_dict(), "saved_to": args.out})
    else:
        out.append(json.dumps(rec.to_dict(), indent=1))
        if args.out:
            out.append(f"saved to {args.out}")
    return EXIT_OK


def cmd_divisor(args, out):
    E = _curve(args.curve)
    try:
        f = CurveFunction.parse(E, args.function)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError("--function", str(exc)) from None
    if f.is_zero():
        raise UsageError("--function", "the zero function has no divisor")
    D = principal_divisor(f)
    if args.json:
        out.append({"curve": args.curve, "function": args.function, "divisor": divisor_json(D),
                    "degree": format_rational(D.degree())})
    else:
        out.append(format_divisor(D))
    return EXIT_OK


def cmd_torsion(args, out):
    E = _curve(args.curve)
    x, y = _rationals(args.point, "--point", 2)
    P = CurvePoint(x, y)
    if not on_curve(E, P):
        raise UsageError("--point", f"({args.point}) is not on {args.curve}")
    n = order_of(E, P, args.bound)
    if args.json:
        out.append({"curve": args.curve, "point": format_point(P), "bound": args.bound, "order": n})
    else:
        out.append("non-torsion within bound" if n is None else f"order {n}")
    return EXIT_OK


def cmd_genus_table(args, out):
    rows = genus_table()
    if args.json:
        out.append({"rows": [{"type": [format_rational(q) for q in r.representative],
                              "klein_degree": r.klein_degree,
                              "genera": list(r.genera)} for r in rows]})
    else:
        for r in rows:
            typ = "(" + ",".join(format_rational(q) for q in r.representative) + ")"
            out.append(f"{typ:<16} {r.klein_degree:>3}  " + "  ".join(f"{g:>2}" for g in r.genera))
    return EXIT_OK


def cmd_branching(args, out):
    if args.covering not in covering_keys():
        raise UsageError("--covering", f"unknown covering {args.covering!r}")
    c = get_covering(args.covering)
    if args.k is not None:
        value = None if args.value is None else _value(args.value, "--value")
        try:
            ok = check_dramifico(c, args.k, value)
        except ValueError as exc:
            raise UsageError("--k", str(exc)) from None
        if args.json:
            out.append({"covering": args.covering, "k": args.k, "ok": ok})
        else:
            out.append(f"{args.covering} k={args.k}: {'ok' if ok else 'FAILED'}")
        return EXIT_OK if ok else EXIT_FALSE
    values = [_value(v, "--value") for v in (args.value.split(";") if args.value else ["0", "1", "inf"])]
    data = [(v, branching_data(c, v)) for v in values]
    if args.json:
        out.append({"covering": args.covering,
                    "fibers": [{"value": v if v == INF else format_rational(v), "partition": p}
                               for v, p in data]})
    else:
        for v, p in data:
            out.append(f"{v if v == INF else format_rational(v)}: {p}")
    return EXIT_OK


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--catalog", help="catalog file (default: $DARBOUX_CATALOG or the bundled one)")

    p = _Parser(prog="darboux", description="Darboux evaluations of algebraic 2F1 functions")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="verify one record")
    s.add_argument("--id", required=True)
    s.add_argument("--order", type=int, default=25)
    s.add_argument("--branch", type=int, choices=(1, -1), default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("verify-all", parents=[common], help="verify every record")
    s.add_argument("--order", type=int, default=25)
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_verify_all)

    s = sub.add_parser("classify", parents=[common], help="Schwartz type of parameters")
    s.add_argument("--params", help="A,B,C")
    s.add_argument("--exps", help="exponent differences e0,e1,einf")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("derive", parents=[common], help="derive a contiguous evaluation")
    s.add_argument("--base", required=True)
    s.add_argument("--target", required=True, help="A,B,C")
    s.add_argument("--id", default=None)
    s.add_argument("--out", default=None, help="user catalog file to add the record to")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("divisor", parents=[common], help="principal divisor of a curve function")
    s.add_argument("--curve", required=True)
    s.add_argument("--function", required=True)
    s.set_defaults(func=cmd_divisor)

    s = sub.add_parser("torsion", parents=[common], help="order of a rational point")
    s.add_argument("--curve", required=True)
    s.add_argument("--point", required=True, help="x,y")
    s.add_argument("--bound", type=int, default=16)
    s.set_defaults(func=cmd_torsion)

    s = sub.add_parser("genus-table", parents=[common], help="genera of Darboux curves")
    s.set_defaults(func=cmd_genus_table)

    s = sub.add_parser("branching", parents=[common], help="branching of a covering")
    s.add_argument("--covering", required=True)
    s.add_argument("--value", default=None, help="values separated by ';' (default 0;1;inf)")
    s.add_argument("--k", type=int, default=None, help="check the ramification pattern for k")
    s.set_defaults(func=cmd_branching)
    return p


def _validate(args):
    for flag in ("order", "bound", "workers"):
        v = getattr(args, flag, None)
        if v is not None and v < 0:
            raise UsageError("--" + flag, "must be non-negative")
    if getattr(args, "k", None) is not None and args.k < 1:
        raise UsageError("--k", "must be positive")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        out: list = []
        code = args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except DarbouxError as exc:
        if "--json" in (argv or []):
            print(json.dumps({"ok": False, "error": str(exc)}), file=stdout)
        print(f"error: {exc}", file=stderr)
        return EXIT_FALSE
    if args.json:
        doc = out[0] if len(out) == 1 else out
        print(json.dumps(doc, indent=1), file=stdout)
    else:
        for line in out:
            print(line, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
