import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hopfbrace import exhibits, functors
from hopfbrace.bracelab import (
    BraceTriple,
    HopfBrace,
    PostHopfAlgebra,
    check_brace_triple,
    check_hopf_brace,
    check_post_hopf,
    check_s_hopf_brace,
    check_star_condition,
)
from hopfbrace.functors import (
    InvalidInput,
    StarConditionFailed,
    functor_F,
    functor_G,
    functor_P,
    functor_Q,
    roundtrip,
)
from hopfbrace.hopfcore import convolution_inverse
from hopfbrace.report import Report
from hopfbrace.tensorcat import Mor

CORPUS = exhibits.corpus(max_order=6)
entries = st.sampled_from(CORPUS)


def test_trivial_triple_images():
    H = exhibits.group_algebra(exhibits.builtin_group("C3"))
    T = exhibits.trivial_triple(H)
    B = functor_F(T)
    assert B.first.mu == B.second.mu
    P = functor_P(T)
    assert P.m == H.eps & H.I
    Q = functor_Q(P)
    assert Q.second.mu == H.mu and Q.second.lam == H.lam
    back = functor_G(B)
    assert back.gamma == T.gamma and back.T == T.T


def test_s3_pipeline(s3, s3_triple):
    opp = oracles.linearize_binary(6, lambda g, h: s3.table[h][g])
    B = functor_F(s3_triple)
    assert B.second.mu.matrix == opp
    T = functor_G(B)
    assert T.T == s3_triple.T
    conj = oracles.linearize_binary(6, lambda g, h: s3.table[s3.table[s3.inverse[g]][h]][g])
    assert T.gamma.matrix == conj
    P = functor_P(s3_triple)
    assert P.m.matrix == conj
    Q = functor_Q(P)
    assert Q.second.mu.matrix == opp and Q.gamma == P.m


@settings(max_examples=15)
@given(entries)
def test_F_output_is_s_hopf_with_same_gamma(e):
    B = functor_F(e.triple)
    assert check_s_hopf_brace(B).ok
    assert B.gamma == e.triple.gamma


@settings(max_examples=15)
@given(entries)
def test_G_output_is_triple(e):
    assert check_brace_triple(functor_G(e.brace)).ok


@settings(max_examples=15)
@given(entries)
def test_G_F_and_F_G_roundtrips(e):
    assert roundtrip("G∘F", e.triple).ok
    assert roundtrip("F∘G", e.brace).ok


@settings(max_examples=15)
@given(entries)
def test_P_caches_closed_form_beta(e):
    P = functor_P(e.triple)
    assert check_post_hopf(P).ok
    assert convolution_inverse(P.endo, P.alpha) == P.beta


@settings(max_examples=15)
@given(entries.filter(lambda e: e.triple.hopf.is_cocommutative()))
def test_Q_and_its_roundtrips(e):
    P = functor_P(e.triple)
    assert check_star_condition(P).ok
    Q = functor_Q(P)
    assert check_hopf_brace(Q).ok and Q.gamma == P.m
    rt = roundtrip("(G''∘Q)∘P'", e.triple)
    assert rt.ok and rt.fields[-1].key == "lambda^=T"
    assert roundtrip("P'∘(G''∘Q)", P).ok


def test_roundtrip_reports_differences(s3_triple):
    # a triple whose T is wrong fails validation before the round trip
    with pytest.raises(InvalidInput):
        roundtrip("GF", BraceTriple(s3_triple.hopf, s3_triple.gamma, s3_triple.hopf.I))


def test_invalid_inputs_refused(s3_triple):
    H = s3_triple.hopf
    bad_triple = BraceTriple(H, H.mu, H.lam)
    for fn in (functor_F, functor_P):
        with pytest.raises(InvalidInput) as info:
            fn(bad_triple)
        assert not info.value.report.ok
    bad_brace = HopfBrace(H, H.with_product(H.eta, H.mu @ H.c(), H.I))
    with pytest.raises(InvalidInput):
        functor_G(bad_brace)
    F = exhibits.function_algebra(exhibits.builtin_group("S3"))
    with pytest.raises(InvalidInput, match="cocommutative"):
        functor_Q(functor_P(exhibits.trivial_triple(F)))


def test_star_gate(monkeypatch, s3_triple):
    P = functor_P(s3_triple)

    def failing(_P, report=None):
        r = Report("star condition")
        r.flag("star", False)
        return r

    monkeypatch.setattr(functors, "check_star_condition", failing)
    with pytest.raises(StarConditionFailed):
        functor_Q(P)


def test_unknown_direction():
    with pytest.raises(ValueError):
        roundtrip("QQ", None)


def test_functoriality_on_transported_structures(s3):
    for S in exhibits.enumerate_skew_braces(s3)[:3]:
        for sigma in s3.automorphisms[1:3]:
            S2 = exhibits.transport(S, sigma)
            A = exhibits.brace_triple_from_skew_brace(S)
            B = exhibits.brace_triple_from_skew_brace(S2)
            f = Mor(A.carrier, B.carrier, perm=list(sigma))
            r = functors.check_functor_on_morphism(f, A, B)
            assert r.ok, r.render()
            assert f @ A.T == B.T @ f


def test_functors_on_super_line():
    T = exhibits.trivial_triple(exhibits.super_line())
    assert roundtrip("GF", T).ok
    assert roundtrip("GQP", T).ok


def test_post_hopf_roundtrip_without_cached_beta(s3_triple):
    P = PostHopfAlgebra(s3_triple.hopf, s3_triple.gamma)
    assert roundtrip("PGQ", P).ok
