"""Command-line front end.

    diophmon --eq 4,5,7 apery --format json
    diophmon --eq 4,5,7 decompose --point 8,2
    diophmon --eq 4,5,7 verify --sweep-c 12

JSON documents always have the keys ``equation``, ``normalized``,
``command``, ``result`` and ``elapsed_ms``.  Domain errors exit with status 1
and ``result = {"error": {"code": ..., "message": ...}}``; malformed
arguments exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import apery, carry_monoid, class_groups, hilbert, monoid
from .decompose import decompose, elliott_decompose, elliott_scheme
from .errors import BadInput, DiophMonError
from .sweep import check_instance, sweep_two_dim

DEFAULT_GUARD = apery.DEFAULT_GUARD


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _global_flags() -> argparse.ArgumentParser:
    # attached to the root parser and every subparser so flags may appear on either side
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--eq", type=_int_list, default=argparse.SUPPRESS,
                   help="coefficients a1,...,ar of a1*x1+...+a(r-1)*x(r-1) = 0 (mod ar)")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--guard", type=_positive, default=argparse.SUPPRESS,
                   help=f"maximum Apéry box volume (default {DEFAULT_GUARD})")
    p.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                   help="report elapsed_ms as null, making output byte-reproducible")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(prog="diophmon", parents=[flags],
                                     description="Invariants of Diophantine monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apery", parents=[flags], help="Apéry set with respect to the rays")
    p.add_argument("--method", choices=("box", "closed", "both"), default="box")
    sub.add_parser("hilbert", parents=[flags], help="Hilbert basis")
    p = sub.add_parser("decompose", parents=[flags], help="Apéry part plus ray multiples")
    p.add_argument("--point", type=_int_list, required=True)
    p = sub.add_parser("elliott", parents=[flags], help="parametrized representation")
    p.add_argument("--point", type=_int_list)
    sub.add_parser("classgroup", parents=[flags], help="class group")
    sub.add_parser("innerclass", parents=[flags], help="inner class group")
    p = sub.add_parser("verify", parents=[flags], help="product identity and closed-form cross-checks")
    p.add_argument("--sweep-c", type=_positive, metavar="N",
                   help="also run every two-unknown equation with modulus up to N")
    p = sub.add_parser("lift", parents=[flags], help="solution of the linear equation")
    p.add_argument("--point", type=_int_list, required=True)
    p = sub.add_parser("carry", parents=[flags], help="carry-monoid model")
    p.add_argument("action", choices=("export", "check", "iso"))
    p.add_argument("--spec", type=argparse.FileType("r"),
                   help="JSON carry spec to check instead of the canonical one")
    p.add_argument("--depth-bound", type=_positive)
    p.add_argument("--coord-bound", type=_positive)
    return parser


def _pts(points) -> list[list[int]]:
    return [list(p) for p in sorted(points)]


def _group(g) -> dict:
    return {"invariant_factors": list(g.invariant_factors), "order": g.order, "name": str(g)}


def _cmd_apery(spec, args):
    if args.method == "box":
        table = apery.apery_box(spec, args.guard)
    elif args.method == "closed":
        table = apery.apery_closed_form(spec)
    else:
        table = apery.apery_box(spec, args.guard)
        closed = apery.apery_closed_form(spec)
        if closed.elements != table.elements:
            raise AssertionError(f"closed form {closed.elements} != box scan {table.elements}")
    return {"method": args.method, "size": len(table), "points": _pts(table.elements)}, 0


def _cmd_hilbert(spec, args):
    hb = hilbert.hilbert_basis(spec, args.guard)
    return {"rays": _pts(hb.rays), "extras": _pts(hb.extras), "basis": _pts(hb.generators)}, 0


def _cmd_decompose(spec, args):
    d = decompose(spec, args.point)
    return {"point": args.point, "apery_part": list(d.apery_part), "ray_mults": list(d.ray_mults)}, 0


def _cmd_elliott(spec, args):
    scheme = elliott_scheme(spec, args.guard)
    out = {
        "u": None if scheme.u is None else list(scheme.u),
        "v": None if scheme.v is None else list(scheme.v),
        "admissible": [list(p) for p in scheme.admissible],
    }
    if args.point is not None:
        rep = elliott_decompose(scheme, spec, args.point)
        out["point"] = args.point
        out["representation"] = {"ray_mults": list(rep.ray_mults), "m": rep.m, "n": rep.n}
    return out, 0


def _cmd_classgroup(spec, args):
    table = apery.apery_box(spec, args.guard)
    out = _group(class_groups.class_group(spec, table=table))
    out["lambda_denominators"] = monoid.lambda_denominators(spec, table)
    return out, 0


def _cmd_innerclass(spec, args):
    table = apery.apery_box(spec, args.guard)
    out = _group(class_groups.inner_class_group(spec, table=table))
    out["apery_size"] = len(table)
    return out, 0


def _cmd_verify(spec, args):
    result = check_instance(spec, args.guard)
    out = result.as_dict()
    ok = result.ok
    if args.sweep_c is not None:
        summary = sweep_two_dim(args.sweep_c, args.guard)
        out["sweep"] = summary.as_dict()
        ok = ok and summary.ok
    out["ok"] = ok
    return out, 0 if ok else 1


def _cmd_lift(spec, args):
    return {"point": args.point, "lifted": list(monoid.lift(spec, args.point))}, 0


def _cmd_carry(spec, args):
    if args.spec is not None:
        cspec = carry_monoid.from_json(args.spec.read())
    else:
        cspec = carry_monoid.canonical_spec(spec, args.guard)
    if args.action == "export":
        return json.loads(carry_monoid.to_json(cspec)), 0
    if args.action == "check":
        report = carry_monoid.check_axioms(cspec, args.depth_bound, args.coord_bound or 3)
        return {
            "passed": report.passed,
            "depth_bound": report.depth_bound,
            "coord_bound": report.coord_bound,
            "axioms": {str(k): v for k, v in sorted(report.failures.items())},
        }, 0 if report.passed else 1
    bound = args.coord_bound or 2
    holds = carry_monoid.verify_isomorphism(spec, cspec, bound)
    return {"holds": holds, "coord_bound": bound}, 0 if holds else 1


COMMANDS = {
    "apery": _cmd_apery,
    "hilbert": _cmd_hilbert,
    "decompose": _cmd_decompose,
    "elliott": _cmd_elliott,
    "classgroup": _cmd_classgroup,
    "innerclass": _cmd_innerclass,
    "verify": _cmd_verify,
    "lift": _cmd_lift,
    "carry": _cmd_carry,
}


def _normalized(spec):
    return {
        "coeffs": list(spec.coeffs),
        "modulus": spec.modulus,
        "gcds": list(spec.gcds),
        "widths": list(spec.widths),
    }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _render_text(doc, out):
    print(f"equation: {doc['equation']}", file=out)
    if doc["normalized"] is not None:
        n = doc["normalized"]
        print(f"normalized: coeffs={n['coeffs']} modulus={n['modulus']} widths={n['widths']}", file=out)
    for key, value in doc["result"].items():
        print(f"{key}: {value}", file=out)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "eq"):
        parser.print_usage(stderr)
        print("diophmon: error: --eq is required", file=stderr)
        return 2
    args.format = getattr(args, "format", "text")
    args.guard = getattr(args, "guard", DEFAULT_GUARD)
    timing = not getattr(args, "no_timing", False)

    start = time.perf_counter()
    doc = {"equation": args.eq, "normalized": None, "command": args.command}
    code = 0
    try:
        spec = monoid.normalize_equation(args.eq)
        doc["normalized"] = _normalized(spec)
        result, code = COMMANDS[args.command](spec, args)
    except DiophMonError as exc:
        result = {"error": {"code": exc.code, "message": str(exc)}}
        code = 2 if isinstance(exc, BadInput) else 1
    except AssertionError as exc:
        result = {"error": {"code": "MethodMismatch", "message": str(exc)}}
        code = 1
    doc["result"] = _jsonable(result)
    doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3) if timing else None

    if args.format == "json":
        print(json.dumps(doc, sort_keys=True), file=stdout)
    elif "error" in doc["result"]:
        err = doc["result"]["error"]
        print(f"diophmon: {err['code']}: {err['message']}", file=stderr)
    else:
        _render_text(doc, stdout)
    return code


def main():
    sys.exit(run())
