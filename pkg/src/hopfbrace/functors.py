"""The constructions F, G, P, Q between braces, triples and post-Hopf algebras,
and exact round-trip verification."""

from __future__ import annotations

from dataclasses import dataclass, field

from hopfbrace.bracelab import (
    BraceTriple,
    HopfBrace,
    PostHopfAlgebra,
    beta_closed_form,
    check_brace_triple,
    check_hopf_brace,
    check_post_hopf,
    check_s_hopf_brace,
    check_star_condition,
    lambda_hat,
    mu_bt,
    mu_hat,
)
from hopfbrace.report import Clause, Report
from hopfbrace.tensorcat import DomainMismatch, Mor


class InvalidInput(ValueError):
    """The input does not satisfy the hypotheses of the construction."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


class StarConditionFailed(InvalidInput):
    pass


def _require(report: Report, what: str, exc=InvalidInput) -> None:
    if not report.ok:
        keys = ", ".join(c.key for c in report.failures())
        raise exc(f"{what}: failing clauses {keys}", report)


def functor_F(T: BraceTriple, *, validate: bool = True) -> HopfBrace:
    """Brace triple to s-Hopf brace: ``H2 = (eta, mu^BT, eps, delta, T)``."""
    if validate:
        _require(check_brace_triple(T), "not a brace triple")
    H = T.hopf
    return HopfBrace(H, H.with_product(H.eta, mu_bt(T), T.T))


def functor_G(B: HopfBrace, *, validate: bool = True) -> BraceTriple:
    """s-Hopf brace to brace triple ``(H1, Gamma, lambda2)``."""
    if validate:
        _require(check_s_hopf_brace(B), "not an s-Hopf brace")
    return BraceTriple(B.first, B.gamma, B.second.lam)


def functor_P(T: BraceTriple, *, validate: bool = True) -> PostHopfAlgebra:
    """Finite brace triple to post-Hopf algebra ``(H, gamma)``; ``beta`` is
    cached in closed form."""
    if validate:
        _require(check_brace_triple(T), "not a brace triple")
    return PostHopfAlgebra(T.hopf, T.gamma, beta_closed_form(T))


def functor_Q(P: PostHopfAlgebra, *, validate: bool = True) -> HopfBrace:
    """Cocommutative post-Hopf algebra with the star condition to Hopf brace
    ``(H, (eta, mu^, eps, delta, lambda^))``."""
    if validate:
        _require(check_post_hopf(P), "not a post-Hopf algebra")
        if not P.hopf.is_cocommutative():
            raise InvalidInput("the underlying Hopf algebra is not cocommutative")
        _require(check_star_condition(P), "star condition", StarConditionFailed)
    H = P.hopf
    return HopfBrace(H, H.with_product(H.eta, mu_hat(P), lambda_hat(P)))


def G_after_Q(P: PostHopfAlgebra, *, validate: bool = True) -> BraceTriple:
    return functor_G(functor_Q(P, validate=validate), validate=validate)


# ---------------------------------------------------------------------------
# round trips

DIRECTIONS = ("G∘F", "F∘G", "P'∘(G''∘Q)", "(G''∘Q)∘P'")


@dataclass
class RoundTripReport:
    direction: str
    fields: list[Clause] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.fields)

    def __bool__(self) -> bool:
        return self.ok

    def compare(self, name: str, before: Mor, after: Mor) -> None:
        try:
            diff = after - before
        except DomainMismatch as exc:
            self.fields.append(Clause(name, False, None, f"type error: {exc}"))
            return
        passed = diff.is_zero()
        self.fields.append(Clause(name, passed, None if passed else diff))

    def as_report(self) -> Report:
        return Report(f"round trip {self.direction}", list(self.fields))

    def render(self) -> str:
        return self.as_report().render()

    def to_dict(self) -> dict:
        d = self.as_report().to_dict()
        d["direction"] = self.direction
        return d


def _compare_hopf(r: RoundTripReport, prefix: str, a, b) -> None:
    for name in ("eta", "mu", "eps", "delta", "lam"):
        r.compare(prefix + name, getattr(a, name), getattr(b, name))


def _compare_triples(r: RoundTripReport, a: BraceTriple, b: BraceTriple) -> None:
    _compare_hopf(r, "", a.hopf, b.hopf)
    r.compare("gamma", a.gamma, b.gamma)
    r.compare("T", a.T, b.T)


def _compare_braces(r: RoundTripReport, a: HopfBrace, b: HopfBrace) -> None:
    _compare_hopf(r, "H1.", a.first, b.first)
    _compare_hopf(r, "H2.", a.second, b.second)


def roundtrip(kind: str, structure) -> RoundTripReport:
    """Apply a composite construction and compare with the input field by field.

    ``kind`` is one of :data:`DIRECTIONS` or the ASCII aliases ``GF``, ``FG``,
    ``PGQ`` (post-Hopf in) and ``GQP`` (triple in).
    """
    alias = {"GF": DIRECTIONS[0], "FG": DIRECTIONS[1], "PGQ": DIRECTIONS[2], "GQP": DIRECTIONS[3]}
    direction = alias.get(kind, kind)
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown round trip {kind!r}")
    r = RoundTripReport(direction)
    if direction == DIRECTIONS[0]:
        _compare_triples(r, structure, functor_G(functor_F(structure)))
    elif direction == DIRECTIONS[1]:
        _compare_braces(r, structure, functor_F(functor_G(structure)))
    elif direction == DIRECTIONS[2]:
        back = functor_P(G_after_Q(structure))
        _compare_hopf(r, "", structure.hopf, back.hopf)
        r.compare("m", structure.m, back.m)
    else:
        P = functor_P(structure)
        back = G_after_Q(P)
        _compare_triples(r, structure, back)
        r.compare("lambda^=T", lambda_hat(P), structure.T)
    return r


# ---------------------------------------------------------------------------
# morphisms


def check_functor_on_morphism(f: Mor, A: BraceTriple, B: BraceTriple) -> Report:
    """Images of a triple morphism under F and P are morphisms again."""
    from hopfbrace.bracelab import (
        check_brace_triple_morphism,
        check_hopf_brace_morphism,
        check_post_hopf_morphism,
    )

    r = Report("functoriality")
    r.extend(check_brace_triple_morphism(f, A, B), "BT:")
    FA, FB = functor_F(A), functor_F(B)
    r.extend(check_hopf_brace_morphism(f, FA, FB), "F:")
    GA, GB = functor_G(FA), functor_G(FB)
    r.extend(check_brace_triple_morphism(f, GA, GB), "G.F:")
    PA, PB = functor_P(A), functor_P(B)
    r.extend(check_post_hopf_morphism(f, PA, PB), "P:")
    if A.hopf.is_cocommutative():
        r.extend(check_hopf_brace_morphism(f, functor_Q(PA), functor_Q(PB)), "Q.P:")
    return r


__all__ = [
    "DIRECTIONS",
    "G_after_Q",
    "InvalidInput",
    "RoundTripReport",
    "StarConditionFailed",
    "check_functor_on_morphism",
    "functor_F",
    "functor_G",
    "functor_P",
    "functor_Q",
    "roundtrip",
]
