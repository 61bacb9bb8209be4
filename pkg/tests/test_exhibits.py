import itertools

import pytest

import oracles
from hopfbrace import exhibits
from hopfbrace.bracelab import check_hopf_brace, check_hopf_brace_morphism, check_s_hopf_brace
from hopfbrace.hopfcore import check_cocommutative, check_hopf
from hopfbrace.tensorcat import Mor

# skew brace counts (table level, not up to isomorphism) produced by the
# lambda-map enumerator; orders <= 4 are confirmed by the Latin-square oracle
FROZEN_COUNTS = {"C1": 1, "C2": 1, "C3": 1, "C4": 2, "C2xC2": 4, "C5": 1, "C6": 2, "S3": 8}


@pytest.mark.parametrize("name", exhibits.BUILTIN_GROUP_NAMES)
def test_builtin_tables_are_groups(name):
    G = exhibits.builtin_group(name)
    t, n = G.table, G.order
    e = G.identity
    assert all(t[e][g] == g == t[g][e] for g in range(n))
    assert all(t[g][G.inverse[g]] == e for g in range(n))
    assert all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in itertools.product(range(n), repeat=3))


def test_orders_and_abelian_flags():
    expect = {"S3": (6, False), "D4": (8, False), "Q8": (8, False), "C2xC4": (8, True), "C8": (8, True)}
    for name, (n, ab) in expect.items():
        G = exhibits.builtin_group(name)
        assert (G.order, G.is_abelian()) == (n, ab)
    assert exhibits.builtin_group("D4").table != exhibits.builtin_group("Q8").table


@pytest.mark.parametrize("name", ["C4", "C5", "C6", "C2xC2", "S3"])
def test_automorphisms_match_brute_force(name):
    G = exhibits.builtin_group(name)
    n, t = G.order, G.table
    brute = {
        p for p in itertools.permutations(range(n))
        if all(p[t[a][b]] == t[p[a]][p[b]] for a in range(n) for b in range(n))
    }
    assert set(G.automorphisms) == brute
    assert G.automorphisms[0] == tuple(range(n))


def test_invalid_groups_rejected():
    with pytest.raises(exhibits.InvalidGroup):
        exhibits.FiniteGroup("bad", [[0, 1], [1, 1]])
    with pytest.raises(exhibits.InvalidGroup):
        exhibits.FiniteGroup("nonassoc", [[0, 1, 2], [1, 0, 0], [2, 2, 1]])


@pytest.mark.parametrize("G", exhibits.builtin_groups(4), ids=lambda G: G.name)
def test_enumerator_agrees_with_latin_square_oracle(G):
    assert {S.key() for S in exhibits.enumerate_skew_braces(G)} == exhibits.brute_force_skew_braces(G)


@pytest.mark.parametrize("G", exhibits.builtin_groups(6), ids=lambda G: G.name)
def test_enumeration_counts_frozen(G):
    found = exhibits.enumerate_skew_braces(G)
    assert len(found) == FROZEN_COUNTS[G.name]
    keys = [S.key() for S in found]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert G.table in keys
    for S in found:
        assert oracles.skew_compatible(S.dot.table, S.circ.table)


def test_almost_trivial_distinct_for_non_abelian(s3):
    keys = {S.key() for S in exhibits.enumerate_skew_braces(s3)}
    assert exhibits.opposite_skew_brace(s3).key() in keys
    assert exhibits.opposite_skew_brace(s3).key() != s3.table


def test_bound_exceeded():
    with pytest.raises(exhibits.BoundExceeded):
        exhibits.enumerate_skew_braces(exhibits.builtin_group("Q8"))
    with pytest.raises(exhibits.BoundExceeded):
        exhibits.brute_force_skew_braces(exhibits.builtin_group("C5"))


def test_compatibility_violation_detected(s3):
    # (C6, +) paired with (S3, .) on the same labels is not a skew brace
    S = exhibits.SkewBrace(exhibits.builtin_group("C6"), s3)
    assert S.compatibility_failures()
    with pytest.raises(exhibits.InvalidSkewBrace):
        exhibits.hopf_brace_from_skew_brace(S)


def test_group_algebra_degenerate_and_c2():
    H1 = exhibits.group_algebra(exhibits.builtin_group("C1"))
    assert H1.carrier.dim == 1 and check_hopf(H1).ok
    H2 = exhibits.group_algebra(exhibits.builtin_group("C2"))
    assert H2.lam == H2.I


def test_super_line_matrices():
    H = exhibits.super_line()
    assert H.carrier.grading == (0, 1)
    assert H.mu.matrix == oracles.mat([[1, 0, 0, 0], [0, 1, 1, 0]])
    assert H.delta.matrix == oracles.mat([[1, 0], [0, 1], [0, 1], [0, 0]])
    assert check_hopf(H).ok and check_cocommutative(H).ok


def test_function_algebra_is_dual_of_group_algebra(s3):
    F = exhibits.function_algebra(s3)
    G = exhibits.group_algebra(s3)
    assert check_hopf(F).ok
    assert not F.is_cocommutative() and F.is_commutative()
    # transposes: mu_F = delta_G^T and delta_F = mu_G^T
    assert F.mu.matrix == [list(r) for r in zip(*G.delta.matrix)]
    assert F.delta.matrix == [list(r) for r in zip(*G.mu.matrix)]


def test_linearization_functorial_on_isomorphisms(s3):
    for S in exhibits.enumerate_skew_braces(s3)[:4]:
        B = exhibits.hopf_brace_from_skew_brace(S)
        for sigma in S.dot.automorphisms[:3] + ((1, 0, 3, 2, 5, 4),):
            S2 = exhibits.transport(S, sigma)
            B2 = exhibits.hopf_brace_from_skew_brace(S2)
            f = Mor(B.carrier, B2.carrier, perm=list(sigma))
            r = check_hopf_brace_morphism(f, B, B2)
            assert r.ok, r.render()


def test_corpus_linearizations_pass(small_corpus):
    for e in small_corpus:
        if e.skew is not None:
            assert check_hopf_brace(e.brace).ok and check_s_hopf_brace(e.brace).ok
