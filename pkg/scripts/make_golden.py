"""Regenerate the CLI golden files under tests/golden/.

Inputs are built from the example generators, then every case in CASES is
run through the CLI and its exit code and stdout are frozen.  Re-run only
when an output format changes on purpose, and review the diff.
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import sys
from pathlib import Path

from hopfbrace import exhibits
from hopfbrace.bracelab import BraceTriple
from hopfbrace.functors import functor_F, functor_P
from hopfbrace.hbcli import serialize
from hopfbrace.hbcli.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = [
    ("check_s3_brace", ["check", "s3_brace.json"]),
    ("check_s3_triple_json", ["check", "s3_triple.json", "--json"]),
    ("check_super_triple", ["check", "super_triple.json"]),
    ("check_s3_post", ["check", "s3_post.json"]),
    ("check_c2_hopf", ["check", "c2_hopf.json"]),
    ("check_perturbed", ["check", "perturbed_triple.json"]),
    ("check_missing_file", ["check", "no_such_file.json"]),
    ("check_malformed", ["check", "malformed.json"]),
    ("convert_triple_F", ["convert", "s3_triple.json", "--via", "F"]),
    ("convert_brace_G", ["convert", "s3_brace.json", "--via", "G"]),
    ("convert_triple_P", ["convert", "s3_triple.json", "--via", "P"]),
    ("convert_post_Q", ["convert", "s3_post.json", "--via", "Q"]),
    ("convert_perturbed_F", ["convert", "perturbed_triple.json", "--via", "F"]),
    ("convert_wrong_kind", ["convert", "s3_brace.json", "--via", "F"]),
    ("roundtrip_FG_triple", ["roundtrip", "s3_triple.json", "--pair", "FG"]),
    ("roundtrip_FG_brace", ["roundtrip", "s3_brace.json", "--pair", "FG"]),
    ("roundtrip_QP_triple", ["roundtrip", "s3_triple.json", "--pair", "QP"]),
    ("roundtrip_QP_post_json", ["roundtrip", "s3_post.json", "--pair", "QP", "--json"]),
    ("roundtrip_QP_noncocommutative", ["roundtrip", "ks3_triple.json", "--pair", "QP"]),
    ("roundtrip_FG_noncocommutative", ["roundtrip", "ks3_triple.json", "--pair", "FG"]),
    ("eval_antipode_c2", ["eval", "c2_hopf.json", "mu . (id[H] ox lambda) . delta"]),
    ("eval_gamma_unit", ["eval", "s3_triple.json", "gamma . (eta ox id[H])"]),
    ("eval_m_unit_json", ["eval", "s3_post.json", "m . (id[H] ox eta)", "--json"]),
    ("eval_braid_super", ["eval", "super_triple.json", "c[H,H] . c[H,H]"]),
    ("eval_syntax_error", ["eval", "s3_triple.json", "mu ."]),
    ("eval_type_error", ["eval", "s3_triple.json", "mu . mu"]),
    ("enumerate_order4", ["enumerate", "--order", "4", "--family", "exhaustive"]),
    ("enumerate_bound", ["enumerate", "--order", "8", "--family", "exhaustive", "--group", "Q8"]),
]


def build_inputs(root: Path) -> None:
    s3 = exhibits.builtin_group("S3")
    T = exhibits.brace_triple_from_skew_brace(exhibits.opposite_skew_brace(s3))
    files = {
        "s3_triple.json": T,
        "s3_brace.json": functor_F(T),
        "s3_post.json": functor_P(T),
        "super_triple.json": exhibits.trivial_triple(exhibits.super_line()),
        "c2_hopf.json": exhibits.group_algebra(exhibits.builtin_group("C2")),
        "ks3_triple.json": exhibits.trivial_triple(exhibits.function_algebra(s3)),
        "perturbed_triple.json": BraceTriple(T.hopf, T.gamma.with_entry(2, 7, 1), T.T),
    }
    for name, S in files.items():
        serialize.save_structure(S, root / name)
    (root / "malformed.json").write_text('{"format_version": 1, "kind": "hopf"}\n')


def run_case(args: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(args)
    return code, out.getvalue()


def main_() -> int:
    inputs = GOLDEN / "inputs"
    expected = GOLDEN / "expected"
    inputs.mkdir(parents=True, exist_ok=True)
    expected.mkdir(parents=True, exist_ok=True)
    build_inputs(inputs)
    table = []
    cwd = os.getcwd()
    os.chdir(inputs)
    try:
        for name, args in CASES:
            code, text = run_case(args)
            (expected / f"{name}.out").write_text(text)
            table.append({"name": name, "args": args, "exit": code})
            print(f"{name:<32} exit={code}", file=sys.stderr)
    finally:
        os.chdir(cwd)
    (GOLDEN / "cases.json").write_text(json.dumps(table, indent=1) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main_())
