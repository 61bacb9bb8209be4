"""Acceptance criteria 1-13, exact arithmetic, zero tolerance.

Each test records one PASS/FAIL line; the lines are printed in the terminal
summary (see conftest) and when this file is run directly.
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import random
from fractions import Fraction
from pathlib import Path

import pytest

import oracles
from hopfbrace import exhibits
from hopfbrace.bracelab import (
    BraceTriple,
    PostHopfAlgebra,
    beta_closed_form,
    check_brace_triple,
    check_hopf_brace,
    check_lambda_hat,
    check_post_hopf,
    check_s_hopf_brace,
    check_star_condition,
    lambda_hat,
)
from hopfbrace.functors import functor_F, functor_G, functor_P, functor_Q, roundtrip
from hopfbrace.hbcli.cli import main as cli_main
from hopfbrace.hopfcore import check_cocommutative, check_hopf, convolution_inverse
from hopfbrace.tensorcat import BraidingKind

RESULTS: dict[int, tuple[bool, str]] = {}
GOLDEN = Path(__file__).parent / "golden"
PERTURBATIONS = 50
SEED = 20240611


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    return exhibits.corpus(max_order=8)


@pytest.fixture(scope="module")
def posthopf(corpus):
    return {e.label: functor_P(e.triple) for e in corpus}


def _cocomm(corpus):
    return [e for e in corpus if e.triple.hopf.is_cocommutative()]


def test_criterion_01_axiom_suites():
    bad = []
    groups = exhibits.builtin_groups(8)
    for G in groups:
        H = exhibits.group_algebra(G)
        if not (check_hopf(H).ok and check_cocommutative(H).ok):
            bad.append(G.name)
    S = exhibits.super_line()
    if not (S.braid is BraidingKind.GRADED_FLIP and check_hopf(S).ok and check_cocommutative(S).ok):
        bad.append("super line")
    record(1, not bad, f"{len(groups)} group algebras + super line; failures: {bad or 'none'}")


def test_criterion_02_skew_brace_corpus():
    braces = exhibits.skew_brace_corpus(max_order=8, exhaustive_bound=6)
    bad = []
    for S in braces:
        if not (S.is_valid() and oracles.skew_compatible(S.dot.table, S.circ.table)):
            bad.append(f"{S.label}:compat")
            continue
        B = exhibits.hopf_brace_from_skew_brace(S)
        if not (check_hopf_brace(B).ok and check_s_hopf_brace(B).ok):
            bad.append(S.label)
    record(2, not bad, f"{len(braces)} skew braces; failures: {bad or 'none'}")


def test_criterion_03_functor_F(corpus):
    bad = []
    for e in corpus:
        B = functor_F(e.triple)
        if not (check_s_hopf_brace(B).ok and B.gamma == e.triple.gamma):
            bad.append(e.label)
    record(3, not bad, f"{len(corpus)} triples; failures: {bad or 'none'}")


def test_criterion_04_functor_G(corpus):
    bad = [e.label for e in corpus if not check_brace_triple(functor_G(e.brace)).ok]
    record(4, not bad, f"{len(corpus)} s-Hopf braces; failures: {bad or 'none'}")


def test_criterion_05_G_F_roundtrips(corpus):
    bad = []
    for e in corpus:
        if not roundtrip("G∘F", e.triple).ok:
            bad.append(f"GF:{e.label}")
        if not roundtrip("F∘G", e.brace).ok:
            bad.append(f"FG:{e.label}")
    record(5, not bad, f"{2 * len(corpus)} round trips; failures: {bad or 'none'}")


def test_criterion_06_beta_dual_route(corpus, posthopf):
    bad = []
    for e in corpus:
        P = posthopf[e.label]
        solved = convolution_inverse(P.endo, P.alpha)
        if not (solved == beta_closed_form(e.triple) == P.alpha @ e.triple.T.inverse()):
            bad.append(e.label)
    record(6, not bad, f"{len(corpus)} finite triples; failures: {bad or 'none'}")


DERIVED_POST = (
    "m.(H(x)eta)=eps(x)eta",
    "m.(eta(x)H)=id",
    "m.cinv=(b(x)H).(H(x)alpha)",
    "m=(b(x)H).(H(x)alpha).c",
)


def test_criterion_07_post_hopf_identities(corpus, posthopf):
    bad = []
    for e in corpus:
        r = check_post_hopf(posthopf[e.label])
        if not (r.ok and all(r[k].passed for k in DERIVED_POST)):
            bad.append(e.label)
    record(7, not bad, f"{len(corpus)} post-Hopf algebras; failures: {bad or 'none'}")


def test_criterion_08_star_and_lambda_hat(corpus, posthopf):
    bad = []
    cc = _cocomm(corpus)
    for e in cc:
        P = posthopf[e.label]
        star = check_star_condition(P)
        lh = check_lambda_hat(P)
        if not (star.ok and lh.ok and all(c.required for c in lh.clauses)):
            bad.append(e.label)
    record(8, not bad, f"{len(cc)} cocommutative P-images; failures: {bad or 'none'}")


def test_criterion_09_functor_Q(corpus, posthopf):
    bad = []
    cc = _cocomm(corpus)
    for e in cc:
        P = posthopf[e.label]
        B = functor_Q(P)
        if not (check_hopf_brace(B).ok and B.gamma == P.m):
            bad.append(e.label)
    record(9, not bad, f"{len(cc)} Q-images; failures: {bad or 'none'}")


def test_criterion_10_P_Q_roundtrips(corpus, posthopf):
    bad = []
    cc = _cocomm(corpus)
    for e in cc:
        P = posthopf[e.label]
        if not roundtrip("P'∘(G''∘Q)", P).ok:
            bad.append(f"PGQ:{e.label}")
        rt = roundtrip("(G''∘Q)∘P'", e.triple)
        if not (rt.ok and lambda_hat(P) == e.triple.T):
            bad.append(f"GQP:{e.label}")
    record(10, not bad, f"{2 * len(cc)} round trips; failures: {bad or 'none'}")


def _perturb(rng: random.Random, m):
    i = rng.randrange(m.shape[0])
    j = rng.randrange(m.shape[1])
    step = rng.choice([Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3)])
    return m.with_entry(i, j, m.entry(i, j) + step), (i, j, step)


def test_criterion_11_sensitivity(corpus):
    rng = random.Random(SEED)
    silent = []
    for k in range(PERTURBATIONS):
        e = rng.choice(corpus)
        T = e.triple
        which = rng.choice(["gamma", "T", "m"])
        if which == "gamma":
            g, where = _perturb(rng, T.gamma)
            r = check_brace_triple(BraceTriple(T.hopf, g, T.T))
        elif which == "T":
            t, where = _perturb(rng, T.T)
            r = check_brace_triple(BraceTriple(T.hopf, T.gamma, t))
        else:
            m, where = _perturb(rng, T.gamma)
            r = check_post_hopf(PostHopfAlgebra(T.hopf, m))
        if r.ok:
            silent.append(f"{k}:{e.label}:{which}{where}")
    record(11, not silent, f"{PERTURBATIONS} perturbations (seed {SEED}); silently accepted: {silent or 'none'}")


def test_criterion_12_oracle_agreement():
    bad = []
    groups = exhibits.builtin_groups(4)
    for G in groups:
        if {S.key() for S in exhibits.enumerate_skew_braces(G)} != exhibits.brute_force_skew_braces(G):
            bad.append(G.name)
    record(12, not bad, f"{len(groups)} groups of order <= 4; disagreements: {bad or 'none'}")


def test_criterion_13_cli_golden():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    bad = []
    cwd = os.getcwd()
    os.chdir(GOLDEN / "inputs")
    try:
        for case in cases:
            out = io.StringIO()
            with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
                code = cli_main(case["args"])
            want = (GOLDEN / "expected" / f"{case['name']}.out").read_text()
            if code != case["exit"] or out.getvalue() != want:
                bad.append(case["name"])
    finally:
        os.chdir(cwd)
    record(13, not bad, f"{len(cases)} golden cases; mismatches: {bad or 'none'}")


if __name__ == "__main__":
    import sys

    raise SystemExit(pytest.main([__file__, "-q", "-s", *sys.argv[1:]]) or 0)
