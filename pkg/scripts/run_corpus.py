"""Run every checker, functor and round trip over the example corpus.

    python scripts/run_corpus.py --max-order 6 --json results.json
"""

from __future__ import annotations

import argparse
import json
import time

from hopfbrace.bracelab import (
    check_brace_triple,
    check_hopf_brace,
    check_lambda_hat,
    check_post_hopf,
    check_s_hopf_brace,
    check_star_condition,
)
from hopfbrace.config import CorpusConfig
from hopfbrace.functors import functor_F, functor_P, functor_Q, roundtrip


def run_entry(e) -> dict:
    t0 = time.perf_counter()
    T = e.triple
    cocomm = T.hopf.is_cocommutative()
    row = {
        "label": e.label,
        "dim": T.carrier.dim,
        "cocommutative": cocomm,
        "triple": check_brace_triple(T).ok,
        "brace": check_hopf_brace(e.brace).ok,
        "s_brace": check_s_hopf_brace(functor_F(T)).ok,
        "GF": roundtrip("GF", T).ok,
        "FG": roundtrip("FG", e.brace).ok,
    }
    P = functor_P(T)
    row["post"] = check_post_hopf(P).ok
    if cocomm:
        row["star"] = check_star_condition(P).ok
        row["lambda_hat"] = check_lambda_hat(P).ok
        row["Q"] = check_hopf_brace(functor_Q(P)).ok
        row["GQP"] = roundtrip("GQP", T).ok
        row["PGQ"] = roundtrip("PGQ", P).ok
    row["seconds"] = round(time.perf_counter() - t0, 3)
    return row


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--exhaustive-bound", type=int, default=6)
    ap.add_argument("--group", action="append", default=[])
    ap.add_argument("--json", help="write per-entry results here")
    args = ap.parse_args()
    cfg = CorpusConfig(args.max_order, args.exhaustive_bound, tuple(args.group))
    rows = [run_entry(e) for e in cfg.entries()]
    flags = [k for k in rows[0] if k not in ("label", "dim", "cocommutative", "seconds")]
    print(f"{'label':<18} dim coc " + " ".join(f"{f:>6}" for f in flags) + "   secs")
    for r in rows:
        cells = " ".join(f"{('ok' if r[f] else 'FAIL') if f in r else '-':>6}" for f in flags)
        print(f"{r['label']:<18} {r['dim']:>3} {'y' if r['cocommutative'] else 'n':>3} {cells} {r['seconds']:>6}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": cfg.to_dict(), "rows": rows}, fh, indent=1)
    failed = [r["label"] for r in rows if not all(v for k, v in r.items() if isinstance(v, bool) and k != "cocommutative")]
    print(f"{len(rows)} entries, {len(failed)} with failures" + (f": {failed}" if failed else ""))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
