"""Hopf braces, brace triples and post-Hopf algebras.

Each structure is a frozen record of exact matrices on one carrier ``H``.
The ``check_*`` functions return a :class:`Report` with one entry per
defining clause (keys follow the definition numbering, e.g. ``Def2.1(vi.4)``)
followed by the identities that must hold as consequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from hopfbrace.hopfcore import (
    AntipodeNotInvertible,
    ConvolutionContext,
    HopfAlgebra,
    NotInvertible,
    check_coalgebra_morphism,
    check_cocommutative,
    check_hopf,
    check_hopf_morphism,
    check_module_algebra,
    convolution_inverse,
    convolve,
    endomorphism_algebra,
)
from hopfbrace.report import Report
from hopfbrace.tensorcat import (
    Mor,
    NotInvertibleMatrix,
    coevaluation,
    evaluation,
    identity,
)


class BetaUnavailable(Exception):
    pass


def _inv(f: Mor) -> Mor | None:
    try:
        return f.inverse()
    except NotInvertibleMatrix:
        return None


# ---------------------------------------------------------------------------
# Hopf braces


@dataclass(frozen=True)
class HopfBrace:
    """Two Hopf algebras ``H1``, ``H2`` sharing one coalgebra."""

    first: HopfAlgebra
    second: HopfAlgebra

    def __post_init__(self):
        a, b = self.first, self.second
        if not (a.carrier.same(b.carrier) and a.eps == b.eps and a.delta == b.delta):
            raise ValueError("the two Hopf algebras of a brace must share their coalgebra")
        if a.braid is not b.braid or a.over_inverse != b.over_inverse:
            raise ValueError("the two Hopf algebras of a brace must share their braiding")

    @property
    def carrier(self):
        return self.first.carrier

    @property
    def braid(self):
        return self.first.braid

    @property
    def eps(self) -> Mor:
        return self.first.eps

    @property
    def delta(self) -> Mor:
        return self.first.delta

    @cached_property
    def gamma(self) -> Mor:
        return gamma_of_brace(self)


def gamma_of_brace(B: HopfBrace) -> Mor:
    """``mu1 o (lambda1 (x) mu2) o (delta (x) H)``."""
    H1, H2 = B.first, B.second
    return H1.mu @ (H1.lam & H2.mu) @ (B.delta & H1.I)


def check_hopf_brace(B: HopfBrace, report: Report | None = None) -> Report:
    r = report if report is not None else Report("hopf brace")
    H1, H2 = B.first, B.second
    I, c, delta = H1.I, H1.c(), B.delta
    r.extend(check_hopf(H1), "Def1.8(i):")
    r.extend(check_hopf(H2), "Def1.8(ii):")
    G = B.gamma
    r.equal(
        "Def1.8(iii)",
        H2.mu @ (I & H1.mu),
        H1.mu @ (H2.mu & G) @ (I & c & I) @ (delta & I & I),
    )
    r.equal("units-agree", H1.eta, H2.eta)
    r.equal("mu2-from-Gamma", H2.mu, H1.mu @ (I & G) @ (delta & I))
    r.equal("Gamma.(H(x)lambda2).delta=lambda1", G @ (I & H2.lam) @ delta, H1.lam)
    r.equal(
        "Gamma.(H(x)lambda1)",
        G @ (I & H1.lam),
        H1.mu @ ((H1.lam @ H2.mu) & I) @ (I & c) @ (delta & I),
    )
    r.extend(check_module_algebra(H2, H1.algebra, G), "Gamma-module-algebra:")
    cocomm = H1.is_cocommutative()
    r.properties["cocommutative"] = cocomm
    if cocomm:
        check_coalgebra_morphism(G, _tensor_coalgebra(H1), H1, r, "Gamma-coalgebra:")
    return r


@dataclass(frozen=True)
class SHopfBraceWitness:
    brace: HopfBrace
    lam1_inv: Mor
    lam2_inv: Mor


def s_hopf_witness(B: HopfBrace) -> SHopfBraceWitness:
    """Attach the inverse antipodes; raises if either antipode is singular."""
    l1, l2 = _inv(B.first.lam), _inv(B.second.lam)
    if l1 is None or l2 is None:
        raise AntipodeNotInvertible("s-Hopf braces need invertible antipodes")
    return SHopfBraceWitness(B, l1, l2)


def check_s_hopf_brace(B: HopfBrace, report: Report | None = None) -> Report:
    r = report if report is not None else Report("s-Hopf brace")
    check_hopf_brace(B, r)
    H1, H2 = B.first, B.second
    I, c, delta = H1.I, H1.c(), B.delta
    G = B.gamma
    r.equal(
        "Def2.4(i)",
        (G & I) @ (I & c) @ (delta & I),
        (G & I) @ (I & c) @ ((c @ delta) & I),
    )
    l1inv, l2inv = _inv(H1.lam), _inv(H2.lam)
    r.flag("Def2.4(ii)", l1inv is not None and l2inv is not None, "antipodes are isomorphisms")
    l2 = H2.lam
    r.equal(
        "Def2.4(ii.1)",
        H1.mu @ (I & G) @ ((delta @ l2) & I),
        H1.mu @ (I & G) @ (((l2 & l2) @ delta) & I),
    )
    if l1inv is not None and l2inv is not None:
        a = r.equal("Def2.4(ii.2)", G @ (l2 & I) @ delta, l1inv @ l2)
        b = (G @ (I & l2inv) @ H1.cinv() @ delta) == l1inv
        r.flag("ii.2-equivalent-form", a == b, f"alternative form holds: {b}")
    else:
        r.flag("Def2.4(ii.2)", False, "antipode not invertible")
    return r


# ---------------------------------------------------------------------------
# brace triples


@dataclass(frozen=True)
class BraceTriple:
    hopf: HopfAlgebra
    gamma: Mor
    T: Mor

    @property
    def carrier(self):
        return self.hopf.carrier

    @cached_property
    def T_inv(self) -> Mor:
        return self.T.inverse()


def mu_bt(T: BraceTriple) -> Mor:
    """``mu o (H (x) gamma) o (delta (x) H)``."""
    H = T.hopf
    return H.mu @ (H.I & T.gamma) @ (H.delta & H.I)


def check_brace_triple(BT: BraceTriple, report: Report | None = None) -> Report:
    r = report if report is not None else Report("brace triple")
    H = BT.hopf
    I, c, delta, mu, eps, eta = H.I, H.c(), H.delta, H.mu, H.eps, H.eta
    g, T = BT.gamma, BT.T
    r.extend(check_hopf(H), "hopf:")
    lam_inv = _inv(H.lam)
    r.flag("hopf:lambda-iso", lam_inv is not None)
    r.equal("Def2.1(i)", (g & I) @ (I & c) @ (delta & I), (g & I) @ (I & c) @ ((c @ delta) & I))
    r.equal("Def2.1(ii.1)", delta @ g, (g & g) @ (I & c & I) @ (delta & delta))
    r.equal("Def2.1(ii.2)", eps @ g, eps & eps)
    r.equal("Def2.1(iii)", g @ (I & mu), mu @ (g & g) @ (I & c & I) @ (delta & I & I))
    r.equal("Def2.1(iv)", g @ (I & g), g @ ((mu @ (I & g) @ (delta & I)) & I))
    r.equal("Def2.1(v)", g @ (eta & I), I)
    T_inv = _inv(T)
    r.flag("Def2.1(vi)", T_inv is not None, "T is an isomorphism")
    r.equal("Def2.1(vi.1)", delta @ T, c @ (T & T) @ delta)
    r.equal("Def2.1(vi.2)", eps @ T, eps)
    r.equal(
        "Def2.1(vi.3)",
        mu @ (I & g) @ ((delta @ T) & I),
        mu @ (I & g) @ (((T & T) @ delta) & I),
    )
    r.equal("Def2.1(vi.4)", g @ (I & T) @ delta, H.lam)
    if lam_inv is not None:
        a = r.equal("Def2.1(vi.5)", g @ (T & I) @ delta, lam_inv @ T)
        if T_inv is not None:
            b = (g @ (I & T_inv) @ H.cinv() @ delta) == lam_inv
            r.flag("vi.5-equivalent-form", a == b, f"alternative form holds: {b}")
    else:
        r.flag("Def2.1(vi.5)", False, "antipode not invertible")
    r.equal("gamma.(H(x)eta)=eps(x)eta", g @ (I & eta), eps & eta)
    cocomm = H.is_cocommutative()
    r.properties["cocommutative"] = cocomm
    if cocomm:
        r.equal("T.T=id", T @ T, I)
    return r


def check_brace_triple_morphism(f: Mor, A: BraceTriple, B: BraceTriple) -> Report:
    r = Report("brace triple morphism")
    check_hopf_morphism(f, A.hopf, B.hopf, r)
    r.equal("BTMor(gamma)", f @ A.gamma, B.gamma @ (f & f))
    r.equal("BTMor(T)", f @ A.T, B.T @ f)
    return r


def check_hopf_brace_morphism(f: Mor, A: HopfBrace, B: HopfBrace) -> Report:
    r = Report("hopf brace morphism")
    r.extend(check_hopf_morphism(f, A.first, B.first), "H1:")
    r.extend(check_hopf_morphism(f, A.second, B.second), "H2:")
    r.equal("HBrMor(Gamma)", f @ A.gamma, B.gamma @ (f & f))
    return r


# ---------------------------------------------------------------------------
# post-Hopf algebras


@dataclass(frozen=True)
class PostHopfAlgebra:
    """A finite Hopf algebra with a second product ``m``.

    ``beta`` may be supplied (e.g. from a brace triple); otherwise it is
    solved for on first access and cached.
    """

    hopf: HopfAlgebra
    m: Mor
    beta_hint: Mor | None = None

    @property
    def carrier(self):
        return self.hopf.carrier

    @cached_property
    def alpha(self) -> Mor:
        return alpha_of(self.hopf, self.m)

    @cached_property
    def endo(self) -> ConvolutionContext:
        return ConvolutionContext(self.hopf.coalgebra, endomorphism_algebra(self.carrier))

    @cached_property
    def beta(self) -> Mor:
        if self.beta_hint is not None:
            return self.beta_hint
        try:
            return convolution_inverse(self.endo, self.alpha)
        except NotInvertible as exc:
            raise BetaUnavailable(str(exc)) from None

    def has_beta(self) -> bool:
        try:
            self.beta
        except BetaUnavailable:
            return False
        return True

    def mu_hat(self) -> Mor:
        return mu_hat(self)


def alpha_of(H: HopfAlgebra, m: Mor) -> Mor:
    """``(H* (x) m) o (c_{H,H*} (x) H) o (H (x) a_H)``: ``H -> H* (x) H``."""
    Hs = H.carrier.dual
    return (identity(Hs) & m) @ (H.c(H.carrier, Hs) & H.I) @ (H.I & coevaluation(H.carrier))


def beta_closed_form(BT: BraceTriple) -> Mor:
    """Convolution inverse of ``alpha`` for a brace triple: ``alpha o T^{-1}``."""
    return alpha_of(BT.hopf, BT.gamma) @ BT.T_inv


def mu_hat(P: PostHopfAlgebra) -> Mor:
    H = P.hopf
    return H.mu @ (H.I & P.m) @ (H.delta & H.I)


def _b(H: HopfAlgebra) -> Mor:
    return evaluation(H.carrier)


def lambda_hat(P: PostHopfAlgebra) -> Mor:
    """``(b (x) H) o (c_{H*,H} (x) H) o (H* (x) c) o (beta (x) lambda) o delta``."""
    H = P.hopf
    Hs = H.carrier.dual
    beta = P.beta
    return (
        (_b(H) & H.I)
        @ (H.c(Hs, H.carrier) & H.I)
        @ (identity(Hs) & H.c())
        @ (beta & H.lam)
        @ H.delta
    )


def lambda_hat_cocommutative(P: PostHopfAlgebra) -> Mor:
    H = P.hopf
    return (_b(H) & H.I) @ (H.lam & P.beta) @ H.delta


def alpha_tilde(P: PostHopfAlgebra) -> Mor:
    H = P.hopf
    return (_b(H) & H.I) @ (H.I & P.alpha)


def beta_tilde(P: PostHopfAlgebra) -> Mor:
    H = P.hopf
    return (_b(H) & H.I) @ (H.I & P.beta)


def hat_convolution(P: PostHopfAlgebra) -> ConvolutionContext:
    from hopfbrace.hopfcore import AlgebraStruct

    H = P.hopf
    return ConvolutionContext(H.coalgebra, AlgebraStruct(H.carrier, H.eta, mu_hat(P)))


def check_post_hopf(P: PostHopfAlgebra, report: Report | None = None) -> Report:
    r = report if report is not None else Report("post-Hopf algebra")
    H = P.hopf
    I, c, delta, mu, eps, eta = H.I, H.c(), H.delta, H.mu, H.eps, H.eta
    m = P.m
    r.extend(check_hopf(H), "hopf:")
    r.equal("Def4.1(i.1)", delta @ m, (m & m) @ (I & c & I) @ (delta & delta))
    r.equal("Def4.1(i.2)", eps @ m, eps & eps)
    r.equal("Def4.1(ii)", m @ (I & m), m @ ((mu @ (I & m) @ (delta & I)) & I))
    r.equal("Def4.1(iii)", m @ (I & mu), mu @ (m & m) @ (I & c & I) @ (delta & I & I))
    alpha = P.alpha
    try:
        beta = P.beta
    except BetaUnavailable as exc:
        r.flag("Def4.1(iv)", False, f"alpha not convolution invertible: {exc}")
        beta = None
    if beta is not None:
        ctx = P.endo
        unit = ctx.unit
        left = convolve(ctx, alpha, beta) == unit
        right = convolve(ctx, beta, alpha) == unit
        r.flag("Def4.1(iv)", left and right, "alpha * beta = unit = beta * alpha")
    r.equal("m.(H(x)eta)=eps(x)eta", m @ (I & eta), eps & eta)
    r.equal("m.(eta(x)H)=id", m @ (eta & I), I)
    b = _b(H)
    r.equal("m.cinv=(b(x)H).(H(x)alpha)", m @ H.cinv(), (b & I) @ (I & alpha))
    r.equal("m=(b(x)H).(H(x)alpha).c", m, (b & I) @ (I & alpha) @ c)
    cocomm = H.is_cocommutative()
    r.properties["cocommutative"] = cocomm
    return r


def check_star_condition(P: PostHopfAlgebra, report: Report | None = None) -> Report:
    """Comultiplicativity of ``beta~`` plus the identities that accompany it."""
    r = report if report is not None else Report("star condition")
    H = P.hopf
    I, c, delta, eps = H.I, H.c(), H.delta, H.eps
    try:
        bt = beta_tilde(P)
    except BetaUnavailable as exc:
        r.flag("star", False, f"beta unavailable: {exc}")
        return r
    r.equal("star", delta @ bt, (bt & bt) @ (I & c & I) @ (delta & delta))
    r.equal("eps.beta~=eps(x)eps", eps @ bt, eps & eps)
    if H.is_cocommutative():
        check_coalgebra_morphism(alpha_tilde(P), _tensor_coalgebra(H), H, r, "alpha~-coalgebra:")
    return r


def _tensor_coalgebra(H: HopfAlgebra):
    from hopfbrace.hopfcore import CoalgebraStruct

    I = H.I
    return CoalgebraStruct(
        (I & I).dom,
        H.eps & H.eps,
        (I & H.c() & I) @ (H.delta & H.delta),
    )


def check_lambda_hat(P: PostHopfAlgebra, report: Report | None = None) -> Report:
    """Identities satisfied by ``lambda^``.

    The first two hold for every post-Hopf algebra; the rest are required only
    in the cocommutative case and are recorded as information otherwise.
    """
    r = report if report is not None else Report("lambda-hat")
    H = P.hopf
    I, delta, eps, eta, m = H.I, H.delta, H.eps, H.eta, P.m
    lh = lambda_hat(P)
    cocomm = H.is_cocommutative()
    r.properties["cocommutative"] = cocomm
    hat = hat_convolution(P)
    r.equal("m.(H(x)lambda^).delta=lambda", m @ (I & lh) @ delta, H.lam)
    r.equal("id*^lambda^=eps(x)eta", convolve(hat, I, lh), eps & eta)
    if cocomm:
        r.equal("lambda^-cocommutative-form", lh, lambda_hat_cocommutative(P))
    r.equal("eps.beta~=eps(x)eps", eps @ beta_tilde(P), eps & eps)
    r.equal("eps.lambda^=eps", eps @ lh, eps, required=cocomm)
    r.equal("delta.lambda^=(lambda^(x)lambda^).delta", delta @ lh, (lh & lh) @ delta, required=cocomm)
    r.equal("lambda^.lambda^=id", lh @ lh, I, required=cocomm)
    r.equal("lambda^*^id=eps(x)eta", convolve(hat, lh, I), eps & eta, required=cocomm)
    return r


def check_post_hopf_morphism(f: Mor, A: PostHopfAlgebra, B: PostHopfAlgebra) -> Report:
    r = Report("post-Hopf morphism")
    check_hopf_morphism(f, A.hopf, B.hopf, r)
    r.equal("PostMor(m)", f @ A.m, B.m @ (f & f))
    return r


def subadjacent_hopf(P: PostHopfAlgebra) -> HopfAlgebra:
    H = P.hopf
    return H.with_product(H.eta, mu_hat(P), lambda_hat(P))


def check_subadjacent(P: PostHopfAlgebra) -> Report:
    """Bialgebra/Hopf axioms for ``(H, eta, mu^, eps, delta, lambda^)``."""
    r = Report("subadjacent Hopf algebra")
    check_hopf(subadjacent_hopf(P), r)
    return r


def is_finite(_H: HopfAlgebra) -> bool:
    # every carrier here is finite-dimensional
    return True


__all__ = [
    "BetaUnavailable",
    "BraceTriple",
    "HopfBrace",
    "PostHopfAlgebra",
    "SHopfBraceWitness",
    "alpha_of",
    "alpha_tilde",
    "beta_closed_form",
    "beta_tilde",
    "check_brace_triple",
    "check_brace_triple_morphism",
    "check_cocommutative",
    "check_hopf_brace",
    "check_hopf_brace_morphism",
    "check_lambda_hat",
    "check_post_hopf",
    "check_post_hopf_morphism",
    "check_s_hopf_brace",
    "check_star_condition",
    "check_subadjacent",
    "gamma_of_brace",
    "hat_convolution",
    "lambda_hat",
    "lambda_hat_cocommutative",
    "mu_bt",
    "mu_hat",
    "s_hopf_witness",
    "subadjacent_hopf",
]
