import pytest
from hypothesis import given, strategies as st

import oracles
from hopfbrace import exhibits
from hopfbrace.hopfcore import (
    Bialgebra,
    NotInvertible,
    check_algebra,
    check_bialgebra,
    check_cocommutative,
    check_hopf,
    check_module_algebra,
    convolution_inverse,
    convolve,
    cop,
    derive_antipode,
    endomorphism_algebra,
    hopf_from_bialgebra,
    trivial_hopf,
)
from hopfbrace.tensorcat import BraidingKind, Mor, generic_obj


@pytest.mark.parametrize("name", exhibits.BUILTIN_GROUP_NAMES)
def test_group_algebras_are_cocommutative_hopf(name):
    H = exhibits.group_algebra(exhibits.builtin_group(name))
    r = check_hopf(H)
    assert r.ok, r.render()
    assert check_cocommutative(H).ok
    assert r.properties["commutative"] == exhibits.builtin_group(name).is_abelian()


def test_c2_by_hand():
    H = exhibits.group_algebra(exhibits.builtin_group("C2"))
    # basis (e, g), g^2 = e
    assert H.mu.matrix == oracles.mat([[1, 0, 0, 1], [0, 1, 1, 0]])
    assert H.delta.matrix == oracles.mat([[1, 0], [0, 0], [0, 0], [0, 1]])
    assert H.lam.matrix == oracles.eye(2)


def test_super_line_by_hand():
    H = exhibits.super_line()
    assert check_hopf(H).ok
    assert check_cocommutative(H).ok
    # x is odd; x (x) x would pick up a sign under the braiding but delta never produces it
    c = H.c()
    assert c.matrix[3][3] == -1
    assert (c @ H.delta) == H.delta
    assert H.lam.matrix == oracles.mat([[1, 0], [0, -1]])
    assert derive_antipode(H) == H.lam


def test_antipode_is_derived_not_assumed(s3):
    H = exhibits.group_algebra(s3)
    B = Bialgebra(carrier=H.carrier, eta=H.eta, mu=H.mu, eps=H.eps, delta=H.delta)
    H2 = hopf_from_bialgebra(B)
    assert H2.lam == H.lam


def test_non_invertible_convolution_reports_rank():
    H = exhibits.group_algebra(exhibits.builtin_group("C3"))
    zero = Mor.zero(H.carrier, H.carrier)
    with pytest.raises(NotInvertible, match="rank"):
        convolution_inverse(H.convolution(), zero)


def test_polynomial_bialgebra_without_antipode_detected():
    # K[x]/(x^2) with x group-like-ish: delta(x) = x (x) x, eps(x) = 1 is a
    # bialgebra (monoid algebra of {1, x} with x^2 = x) but x has no inverse
    H = generic_obj(2, None, "H")
    HH = generic_obj(4, None, "HH")
    K = generic_obj(1, None, "K")
    B = Bialgebra(
        carrier=H,
        eta=Mor.from_rows(K, H, [[1], [0]]),
        mu=Mor.from_rows(HH, H, [[1, 0, 0, 0], [0, 1, 1, 1]]),
        eps=Mor.from_rows(H, K, [[1, 1]]),
        delta=Mor.from_rows(H, HH, [[1, 0], [0, 0], [0, 0], [0, 1]]),
    )
    assert check_bialgebra(B).ok
    with pytest.raises(NotInvertible):
        derive_antipode(B)


def test_endomorphism_algebra_is_matrix_algebra():
    for X in (generic_obj(2), generic_obj(3, (0, 1, 1))):
        assert check_algebra(endomorphism_algebra(X)).ok


@given(st.data())
def test_convolution_associative_and_unital(data):
    H = exhibits.group_algebra(exhibits.builtin_group("S3"))
    ctx = H.convolution()
    ent = st.integers(-2, 2)

    def m():
        rows = data.draw(st.lists(st.lists(ent, min_size=6, max_size=6), min_size=6, max_size=6))
        return Mor.from_rows(H.carrier, H.carrier, rows)

    f, g, h = m(), m(), m()
    assert convolve(ctx, convolve(ctx, f, g), h) == convolve(ctx, f, convolve(ctx, g, h))
    assert convolve(ctx, ctx.unit, f) == f == convolve(ctx, f, ctx.unit)


@pytest.mark.parametrize("name", ["C3", "S3", "Q8"])
def test_convolution_inverse_of_identity_is_antipode(name):
    H = exhibits.group_algebra(exhibits.builtin_group(name))
    assert convolution_inverse(H.convolution(), H.I) == H.lam


def test_cop_lives_over_inverse_braiding():
    H = exhibits.super_line()
    Hc = cop(H)
    assert Hc.over_inverse and check_hopf(Hc).ok


def test_trivial_hopf_passes():
    for kind in BraidingKind:
        assert check_hopf(trivial_hopf(kind)).ok


def test_adjoint_action_is_module_algebra(s3):
    H = exhibits.group_algebra(s3)
    n = s3.order
    adj = exhibits.linear_map(n, lambda g, h: s3.table[s3.table[g][h]][s3.inverse[g]])
    assert check_module_algebra(H, H.algebra, adj).ok


def test_perturbed_product_fails_with_difference(s3):
    H = exhibits.group_algebra(s3)
    bad = H.mu.with_entry(1, 7, 1)  # g*g^-1 also hits g
    r = check_hopf(H.with_product(H.eta, bad, H.lam))
    assert not r.ok
    failing = r.failures()
    assert failing and any(c.difference is not None and not c.difference.is_zero() for c in failing)
