"""``hb``: check, convert, round-trip, evaluate and enumerate structures.

Exit status is 0 when every required clause passes, 1 when some clause or
round trip fails, and 2 on parse, I/O or type errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from hopfbrace.bracelab import (
    BraceTriple,
    HopfBrace,
    PostHopfAlgebra,
    check_brace_triple,
    check_hopf_brace,
    check_post_hopf,
)
from hopfbrace.exhibits import (
    BoundExceeded,
    brace_triple_from_skew_brace,
    builtin_groups,
    enumerate_skew_braces,
    opposite_skew_brace,
    trivial_skew_brace,
)
from hopfbrace.functors import InvalidInput, functor_F, functor_G, functor_P, functor_Q, roundtrip
from hopfbrace.hbcli import serialize
from hopfbrace.hbcli.dsl import ExprError, eval_expr
from hopfbrace.hopfcore import HopfAlgebra, check_hopf
from hopfbrace.report import Report
from hopfbrace.tensorcat import TensorCatError

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2, ensure_ascii=False))


def check_structure(S) -> Report:
    if isinstance(S, HopfBrace):
        return check_hopf_brace(S)
    if isinstance(S, BraceTriple):
        return check_brace_triple(S)
    if isinstance(S, PostHopfAlgebra):
        return check_post_hopf(S)
    if isinstance(S, HopfAlgebra):
        return check_hopf(S)
    raise TypeError(type(S).__name__)


def cmd_check(args) -> int:
    S = serialize.load_structure(args.file)
    r = check_structure(S)
    if args.json:
        _emit_json(r.to_dict())
    else:
        _emit(r.render())
    return EXIT_OK if r.ok else EXIT_FAIL


_VIA = {
    "F": (BraceTriple, functor_F),
    "G": (HopfBrace, functor_G),
    "P": (BraceTriple, functor_P),
    "Q": (PostHopfAlgebra, functor_Q),
}


def cmd_convert(args) -> int:
    S = serialize.load_structure(args.file)
    want, fn = _VIA[args.via]
    if not isinstance(S, want):
        raise UsageError(f"--via {args.via} expects a {serialize.kind_of_name(want)} file")
    try:
        out = fn(S)
    except InvalidInput as exc:
        sys.stderr.write(f"convert: {exc}\n")
        if exc.report is not None and not args.json:
            sys.stderr.write(exc.report.render() + "\n")
        return EXIT_FAIL
    text = serialize.dumps(serialize.from_structure(out))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    S = serialize.load_structure(args.file)
    if args.pair == "FG":
        if isinstance(S, BraceTriple):
            kind = "GF"
        elif isinstance(S, HopfBrace):
            kind = "FG"
        else:
            raise UsageError("--pair FG needs a brace_triple or hopf_brace file")
    else:
        if isinstance(S, BraceTriple):
            kind = "GQP"
        elif isinstance(S, PostHopfAlgebra):
            kind = "PGQ"
        else:
            raise UsageError("--pair QP needs a brace_triple or post_hopf file")
    try:
        rt = roundtrip(kind, S)
    except InvalidInput as exc:
        sys.stderr.write(f"roundtrip: {exc}\n")
        return EXIT_FAIL
    if args.json:
        _emit_json(rt.to_dict())
    else:
        _emit(rt.render())
    return EXIT_OK if rt.ok else EXIT_FAIL


def cmd_eval(args) -> int:
    S = serialize.load_structure(args.file)
    m = eval_expr(args.expr, S)
    if args.json:
        _emit_json({
            "expr": args.expr,
            "dom": str(m.dom),
            "cod": str(m.cod),
            "matrix": [[serialize.format_scalar(v) for v in row] for row in m.matrix],
        })
    else:
        _emit(f"{args.expr} : {m.dom} -> {m.cod}\n{m.pretty()}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    groups = [G for G in builtin_groups() if G.order == args.order]
    if args.group:
        groups = [G for G in groups if G.name == args.group]
    if not groups:
        raise UsageError(f"no built-in group of order {args.order}" + (f" named {args.group}" if args.group else ""))
    rows = []
    for G in groups:
        if args.family == "trivial":
            found = [trivial_skew_brace(G)]
        elif args.family == "opposite":
            found = [opposite_skew_brace(G)]
        else:
            found = enumerate_skew_braces(G, args.bound)
        for S in found:
            ok = S.is_valid()
            rows.append({"group": G.name, "label": S.label, "valid": ok, "circ": [list(r) for r in S.circ.table]})
            if args.output and ok:
                out = Path(args.output)
                out.mkdir(parents=True, exist_ok=True)
                name = S.label.replace("#", "_").replace("(", "_").replace(")", "")
                serialize.save_structure(brace_triple_from_skew_brace(S), out / f"{name}.json")
    if args.json:
        _emit_json(rows)
    else:
        for r in rows:
            _emit(f"{r['label']:<20} {'valid' if r['valid'] else 'INVALID'}  circ={r['circ']}")
        _emit(f"{len(rows)} skew brace(s)")
    return EXIT_OK if all(r["valid"] for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the axiom checker for a structure file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("convert", help="apply one of the functors F, G, P, Q")
    c.add_argument("file")
    c.add_argument("--via", choices=sorted(_VIA), required=True)
    c.add_argument("-o", "--output")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("roundtrip", help="verify a round trip is the identity")
    c.add_argument("file")
    c.add_argument("--pair", choices=["FG", "QP"], required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_roundtrip)

    c = sub.add_parser("eval", help="evaluate a morphism expression")
    c.add_argument("file")
    c.add_argument("expr")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_eval)

    c = sub.add_parser("enumerate", help="list skew braces on built-in groups")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--family", choices=["trivial", "opposite", "exhaustive"], default="exhaustive")
    c.add_argument("--group")
    c.add_argument("--bound", type=int, default=6)
    c.add_argument("-o", "--output", help="directory for brace_triple files")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (OSError, serialize.FormatError, ExprError, UsageError, BoundExceeded, TensorCatError, ValueError) as exc:
        sys.stderr.write(f"hb {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
