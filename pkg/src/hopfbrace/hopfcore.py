"""Algebras, coalgebras, bialgebras and Hopf algebras as exact matrices.

All structure maps live on a single carrier object ``H`` inside a symmetric
category selected by ``braid``.  A structure flagged ``over_inverse`` lives
in the same category with the inverse braiding ``c'_{X,Y} = c_{Y,X}^{-1}``
(this is where co-opposite Hopf algebras live).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from hopfbrace import linalg
from hopfbrace.report import Report
from hopfbrace.tensorcat import (
    K,
    BraidingKind,
    DomainMismatch,
    Mor,
    NotInvertibleMatrix,
    Obj,
    braiding,
    braiding_inverse,
    compose,
    identity,
    tensor,
)


class NotInvertible(Exception):
    """A convolution inverse does not exist."""


class InternalInconsistency(Exception):
    """A one-sided convolution inverse failed to be two-sided."""


class AntipodeNotInvertible(Exception):
    pass


def _braid(kind: BraidingKind, over_inverse: bool, X: Obj, Y: Obj) -> Mor:
    if over_inverse:
        return braiding_inverse(kind, Y, X)
    return braiding(kind, X, Y)


@dataclass(frozen=True)
class AlgebraStruct:
    carrier: Obj
    eta: Mor
    mu: Mor


@dataclass(frozen=True)
class CoalgebraStruct:
    carrier: Obj
    eps: Mor
    delta: Mor


@dataclass(frozen=True, kw_only=True)
class Bialgebra:
    carrier: Obj
    braid: BraidingKind = BraidingKind.FLIP
    eta: Mor
    mu: Mor
    eps: Mor
    delta: Mor
    over_inverse: bool = False

    @property
    def I(self) -> Mor:
        return identity(self.carrier)

    def c(self, X: Obj | None = None, Y: Obj | None = None) -> Mor:
        """The braiding of the ambient category, ``c_{H,H}`` by default."""
        X = self.carrier if X is None else X
        Y = self.carrier if Y is None else Y
        return _braid(self.braid, self.over_inverse, X, Y)

    def cinv(self, X: Obj | None = None, Y: Obj | None = None) -> Mor:
        """``c_{X,Y}^{-1}: Y (x) X -> X (x) Y``."""
        return self.c(X, Y).inverse()

    @property
    def algebra(self) -> AlgebraStruct:
        return AlgebraStruct(self.carrier, self.eta, self.mu)

    @property
    def coalgebra(self) -> CoalgebraStruct:
        return CoalgebraStruct(self.carrier, self.eps, self.delta)

    @property
    def unit_counit(self) -> Mor:
        return self.eta @ self.eps

    def convolution(self) -> ConvolutionContext:
        return ConvolutionContext(self.coalgebra, self.algebra)

    def is_cocommutative(self) -> bool:
        return self.c() @ self.delta == self.delta

    def is_commutative(self) -> bool:
        return self.mu @ self.c() == self.mu


@dataclass(frozen=True, kw_only=True)
class HopfAlgebra(Bialgebra):
    lam: Mor
    lam_inv: Mor | None = None

    @cached_property
    def lam_inverse(self) -> Mor:
        if self.lam_inv is not None:
            return self.lam_inv
        try:
            return self.lam.inverse()
        except NotInvertibleMatrix as exc:
            raise AntipodeNotInvertible(str(exc)) from None

    def with_product(self, eta: Mor, mu: Mor, lam: Mor) -> HopfAlgebra:
        return replace(self, eta=eta, mu=mu, lam=lam, lam_inv=None)


@dataclass(frozen=True)
class ConvolutionContext:
    """Convolution algebra of maps from ``source`` to ``target``."""

    source: CoalgebraStruct
    target: AlgebraStruct

    @property
    def unit(self) -> Mor:
        return self.target.eta @ self.source.eps

    def check(self, f: Mor) -> None:
        if not (f.dom.same(self.source.carrier) and f.cod.same(self.target.carrier)):
            raise DomainMismatch(
                f"{f.dom}->{f.cod} is not a map {self.source.carrier}->{self.target.carrier}"
            )


def convolve(ctx: ConvolutionContext, f: Mor, g: Mor) -> Mor:
    ctx.check(f)
    ctx.check(g)
    return compose(ctx.target.mu, tensor(f, g), ctx.source.delta)


def _left_convolution_system(ctx: ConvolutionContext, f: Mor):
    """Matrix of ``x -> f * x`` with unknowns ``x[a, d]`` flattened row-major."""
    nA = ctx.target.carrier.dim
    nD = ctx.source.carrier.dim
    mu = ctx.target.mu
    delta = ctx.source.delta
    mu3 = np.asarray(mu.num).reshape(nA, nA, nA)
    step = mu3.transpose(0, 2, 1).reshape(nA * nA, nA)  # [(a, a2), a1]
    x = linalg.matmul(step, np.asarray(f.num))  # [(a, a2), d1]
    y = linalg.matmul(x, np.asarray(delta.num).reshape(nD, nD * nD))  # [(a, a2), (d2, d)]
    coeff = y.reshape(nA, nA, nD, nD).transpose(0, 3, 1, 2).reshape(nA * nD, nA * nD)
    return coeff, mu.den * f.den * delta.den


def convolution_inverse(ctx: ConvolutionContext, f: Mor) -> Mor:
    """The two-sided convolution inverse of ``f``.

    Solves ``f * x = unit`` exactly and confirms ``x * f = unit``.
    """
    ctx.check(f)
    unit = ctx.unit
    coeff, den = _left_convolution_system(ctx, f)
    rhs = np.asarray(unit.num).ravel()
    sol, rank = linalg.solve_blocks(linalg.as_int_array(coeff), den, rhs, unit.den)
    if sol is None:
        n = coeff.shape[1]
        raise NotInvertible(
            f"f * x = unit has no solution ({n} unknowns, coefficient rank {rank})"
        )
    nA = ctx.target.carrier.dim
    nD = ctx.source.carrier.dim
    rows = [sol[r * nD:(r + 1) * nD] for r in range(nA)]
    inv = Mor.from_rows(ctx.source.carrier, ctx.target.carrier, rows)
    if convolve(ctx, inv, f) != unit:
        raise InternalInconsistency("right inverse is not a left inverse")
    return inv


def derive_antipode(b: Bialgebra) -> Mor:
    """Antipode of a bialgebra: the convolution inverse of the identity."""
    return convolution_inverse(b.convolution(), b.I)


def hopf_from_bialgebra(b: Bialgebra) -> HopfAlgebra:
    return HopfAlgebra(
        carrier=b.carrier, braid=b.braid, eta=b.eta, mu=b.mu, eps=b.eps, delta=b.delta,
        over_inverse=b.over_inverse, lam=derive_antipode(b),
    )


def endomorphism_algebra(P: Obj) -> AlgebraStruct:
    """``P* (x) P`` with product ``P* (x) b_P (x) P`` and unit ``a_P``."""
    from hopfbrace.tensorcat import coevaluation, evaluation

    Ps = P.dual
    mu = tensor(identity(Ps), evaluation(P), identity(P))
    return AlgebraStruct(mu.cod, coevaluation(P), mu)


# ---------------------------------------------------------------------------
# checkers


def check_algebra(A, report: Report | None = None) -> Report:
    r = report if report is not None else Report("algebra")
    I = identity(A.carrier)
    r.equal("Alg(unit-right)", A.mu @ (I & A.eta), I)
    r.equal("Alg(unit-left)", A.mu @ (A.eta & I), I)
    r.equal("Alg(assoc)", A.mu @ (I & A.mu), A.mu @ (A.mu & I))
    return r


def check_coalgebra(D, report: Report | None = None) -> Report:
    r = report if report is not None else Report("coalgebra")
    I = identity(D.carrier)
    r.equal("Coalg(counit-left)", (D.eps & I) @ D.delta, I)
    r.equal("Coalg(counit-right)", (I & D.eps) @ D.delta, I)
    r.equal("Coalg(coassoc)", (D.delta & I) @ D.delta, (I & D.delta) @ D.delta)
    return r


def check_bialgebra(B: Bialgebra, report: Report | None = None) -> Report:
    r = report if report is not None else Report("bialgebra")
    check_algebra(B, r)
    check_coalgebra(B, r)
    I, c = B.I, B.c()
    r.equal("Bialg(eps.mu)", B.eps @ B.mu, B.eps & B.eps)
    r.equal("Bialg(eps.eta)", B.eps @ B.eta, identity(K))
    r.equal(
        "Bialg(delta.mu)",
        B.delta @ B.mu,
        (B.mu & B.mu) @ (I & c & I) @ (B.delta & B.delta),
    )
    r.equal("Bialg(delta.eta)", B.delta @ B.eta, B.eta & B.eta)
    return r


def check_hopf(H: HopfAlgebra, report: Report | None = None) -> Report:
    """Bialgebra axioms, antipode identities and the standard consequences."""
    r = report if report is not None else Report("hopf")
    check_bialgebra(H, r)
    I, c, lam = H.I, H.c(), H.lam
    ue = H.unit_counit
    r.equal("Hopf(id*lambda)", H.mu @ (I & lam) @ H.delta, ue)
    r.equal("Hopf(lambda*id)", H.mu @ (lam & I) @ H.delta, ue)
    r.equal("Hopf(antimult)", lam @ H.mu, H.mu @ (lam & lam) @ c)
    r.equal("Hopf(anticomult)", H.delta @ lam, c @ (lam & lam) @ H.delta)
    r.equal("Hopf(lambda.eta)", lam @ H.eta, H.eta)
    r.equal("Hopf(eps.lambda)", H.eps @ lam, H.eps)
    cocomm = H.is_cocommutative()
    comm = H.is_commutative()
    r.properties["cocommutative"] = cocomm
    r.properties["commutative"] = comm
    if cocomm:
        r.equal("Cocomm(c.c=id)", c @ c, I & I)
    if cocomm or comm:
        r.equal("Hopf(lambda.lambda=id)", lam @ lam, I)
    if cocomm:
        r.equal("Cocomm(lambda coalg)", (lam & lam) @ H.delta, H.delta @ lam)
    if comm:
        r.equal("Comm(lambda alg)", lam @ H.mu, H.mu @ (lam & lam))
    return r


def check_cocommutative(H: Bialgebra, report: Report | None = None) -> Report:
    r = report if report is not None else Report("cocommutative")
    c = H.c()
    if r.equal("Cocomm(c.delta=delta)", c @ H.delta, H.delta):
        r.equal("Cocomm(c.c=id)", c @ c, H.I & H.I)
    return r


def check_algebra_morphism(f: Mor, A, B, r: Report, prefix: str = "") -> None:
    r.equal(prefix + "AlgMor(mu)", B.mu @ (f & f), f @ A.mu)
    r.equal(prefix + "AlgMor(eta)", f @ A.eta, B.eta)


def check_coalgebra_morphism(f: Mor, D, E, r: Report, prefix: str = "") -> None:
    r.equal(prefix + "CoalgMor(delta)", (f & f) @ D.delta, E.delta @ f)
    r.equal(prefix + "CoalgMor(eps)", E.eps @ f, D.eps)


def check_hopf_morphism(f: Mor, X: HopfAlgebra, Y: HopfAlgebra, report: Report | None = None) -> Report:
    r = report if report is not None else Report("hopf morphism")
    check_algebra_morphism(f, X, Y, r)
    check_coalgebra_morphism(f, X, Y, r)
    r.equal("HopfMor(lambda)", Y.lam @ f, f @ X.lam)
    return r


def _action_on_tensor(X: Bialgebra, M: Obj, phi: Mor) -> Mor:
    IM = identity(M)
    return (phi & phi) @ (identity(X.carrier) & X.c(X.carrier, M) & IM) @ (X.delta & IM & IM)


def check_module(X: Bialgebra, M: Obj, phi: Mor, r: Report) -> None:
    IM = identity(M)
    r.equal("Mod(unit)", phi @ (X.eta & IM), IM)
    r.equal("Mod(assoc)", phi @ (X.I & phi), phi @ (X.mu & IM))


def check_module_algebra(X: HopfAlgebra, A, phi: Mor, report: Report | None = None) -> Report:
    """``(A, phi)`` is a left ``X``-module algebra."""
    r = report if report is not None else Report("module algebra")
    check_module(X, A.carrier, phi, r)
    r.equal("ModAlg(unit)", phi @ (X.I & A.eta), X.eps & A.eta)
    r.equal("ModAlg(mult)", phi @ (X.I & A.mu), A.mu @ _action_on_tensor(X, A.carrier, phi))
    return r


def check_module_coalgebra(
    X: HopfAlgebra, D, phi: Mor, report: Report | None = None, unit: Mor | None = None
) -> Report:
    """``(D, phi)`` is a left ``X``-module coalgebra.

    If ``unit`` (a unit of ``D``) is given, also records whether
    ``phi o (X (x) unit) = eps_X (x) unit``.
    """
    r = report if report is not None else Report("module coalgebra")
    check_module(X, D.carrier, phi, r)
    r.equal("ModCoalg(counit)", D.eps @ phi, X.eps & D.eps)
    r.equal("ModCoalg(comult)", D.delta @ phi, _action_on_tensor(X, D.carrier, phi) @ (X.I & D.delta))
    if unit is not None:
        r.equal("ModCoalg(phi.unit)", phi @ (X.I & unit), X.eps & unit, required=False)
    return r


def cop(H: HopfAlgebra) -> HopfAlgebra:
    """Co-opposite Hopf algebra, living over the inverse braiding."""
    lam_inv = H.lam_inverse
    return replace(
        H,
        delta=H.cinv() @ H.delta,
        lam=lam_inv,
        lam_inv=H.lam,
        over_inverse=not H.over_inverse,
    )


def trivial_hopf(braid: BraidingKind = BraidingKind.FLIP) -> HopfAlgebra:
    """The unit object ``K`` as a Hopf algebra."""
    one = identity(K)
    return HopfAlgebra(carrier=K, braid=braid, eta=one, mu=one, eps=one, delta=one, lam=one)

