"""Strict symmetric monoidal engine over the rationals.

Objects are finite-dimensional (optionally Z/2-graded) spaces, morphisms are
exact rational matrices with row index = codomain basis and column index =
domain basis.  Tensor products use left-major flat indexing: the basis vector
``e_i (x) e_j`` sits at position ``i * dim(right) + j``, which is what
``numpy.kron`` produces.

Signed permutation matrices (identities, braidings and their tensor products)
are kept in permutation form and only densified on demand, so that wiring such
as ``H (x) c (x) H`` on 4096-dimensional spaces costs an index gather.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from hopfbrace import linalg


class TensorCatError(Exception):
    pass


class DomainMismatch(TensorCatError):
    pass


class MissingGrading(TensorCatError):
    pass


class NotInvertibleMatrix(TensorCatError):
    pass


class BraidingKind(enum.Enum):
    FLIP = "Flip"
    GRADED_FLIP = "GradedFlip"


@dataclass(frozen=True)
class Obj:
    """A finite-dimensional object.

    ``factors`` records the names of the tensor factors (the unit object has
    none) and is used only for display and by the expression language;
    equality of objects is dimension plus parities.
    """

    dim: int
    grading: tuple[int, ...] | None = None
    name: str = "X"
    factors: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.grading is not None:
            g = tuple(int(p) for p in self.grading)
            if len(g) != self.dim or any(p not in (0, 1) for p in g):
                raise ValueError(f"bad grading {self.grading!r} for dim {self.dim}")
            object.__setattr__(self, "grading", g)
        if not self.factors and self.name != "K":
            object.__setattr__(self, "factors", (self.name,))

    @property
    def parities(self) -> tuple[int, ...]:
        return self.grading if self.grading is not None else (0,) * self.dim

    def same(self, other: Obj) -> bool:
        return self.dim == other.dim and self.parities == other.parities

    def __eq__(self, other):
        if not isinstance(other, Obj):
            return NotImplemented
        return self.same(other)

    def __hash__(self):
        return hash((self.dim, self.parities))

    @property
    def dual(self) -> Obj:
        if self.name == "K":
            return self
        name = self.name[:-1] if self.name.endswith("*") else self.name + "*"
        if len(self.factors) > 1:
            name = "(" + self.name + ")*"
        return Obj(self.dim, self.grading, name)

    def __str__(self):
        return self.name


K = Obj(1, (0,), "K")


def tensor_obj(*objs: Obj) -> Obj:
    if not objs:
        return K
    factors: list[str] = []
    dim = 1
    grading: list[int] = [0]
    graded = False
    for o in objs:
        dim *= o.dim
        graded = graded or o.grading is not None
        grading = [(a + b) % 2 for a in grading for b in o.parities]
        factors.extend(o.factors)
    name = "(x)".join(factors) if factors else "K"
    if len(factors) == 1:
        name = factors[0]
    return Obj(dim, tuple(grading) if graded else None, name, tuple(factors))


class Mor:
    """Exact rational matrix ``cod.dim x dom.dim`` between two objects.

    Stored either densely as ``num / den`` (integer array, positive common
    denominator, lowest terms) or as a signed permutation ``perm, sign``
    meaning column ``j`` maps to row ``perm[j]`` with coefficient ``sign[j]``.
    Instances are immutable.
    """

    __slots__ = ("dom", "cod", "_num", "_den", "_perm", "_sign", "__weakref__")

    def __init__(self, dom: Obj, cod: Obj, num=None, den: int = 1, *, perm=None, sign=None):
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        if perm is not None:
            perm = np.asarray(perm, dtype=np.int64)
            sign = np.ones(len(perm), dtype=np.int64) if sign is None else np.asarray(sign, dtype=np.int64)
            if dom.dim != cod.dim or len(perm) != dom.dim:
                raise DomainMismatch("permutation size does not match objects")
            perm.flags.writeable = False
            sign.flags.writeable = False
            object.__setattr__(self, "_perm", perm)
            object.__setattr__(self, "_sign", sign)
            object.__setattr__(self, "_num", None)
            object.__setattr__(self, "_den", 1)
        else:
            num = linalg.as_int_array(np.asarray(num))
            if num.shape != (cod.dim, dom.dim):
                raise DomainMismatch(
                    f"matrix shape {num.shape} does not match {cod.dim}x{dom.dim}"
                )
            num, den = linalg.normalize(num, int(den))
            num.flags.writeable = False
            object.__setattr__(self, "_num", num)
            object.__setattr__(self, "_den", den)
            object.__setattr__(self, "_perm", None)
            object.__setattr__(self, "_sign", None)

    def __setattr__(self, name, value):
        raise AttributeError("Mor is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, dom: Obj, cod: Obj, rows: Sequence[Sequence]) -> Mor:
        num, den = linalg.from_fractions(rows)
        if num.shape != (cod.dim, dom.dim):
            raise DomainMismatch(f"matrix shape {num.shape} does not match {cod.dim}x{dom.dim}")
        return cls(dom, cod, num, den)

    @classmethod
    def zero(cls, dom: Obj, cod: Obj) -> Mor:
        return cls(dom, cod, np.zeros((cod.dim, dom.dim), dtype=np.int64))

    # -- access ---------------------------------------------------------------

    @property
    def is_perm(self) -> bool:
        return self._perm is not None

    @property
    def num(self) -> np.ndarray:
        if self._num is None:
            n = self.dom.dim
            a = np.zeros((n, n), dtype=np.int64)
            a[self._perm, np.arange(n)] = self._sign
            a.flags.writeable = False
            object.__setattr__(self, "_num", a)
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def shape(self) -> tuple[int, int]:
        return (self.cod.dim, self.dom.dim)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.num[i, j]), self._den)

    @property
    def matrix(self) -> list[list[Fraction]]:
        return [[Fraction(int(v), self._den) for v in row] for row in self.num]

    def is_zero(self) -> bool:
        if self.is_perm:
            return False
        return not np.any(self._num)

    # -- algebra --------------------------------------------------------------

    def __matmul__(self, other: Mor) -> Mor:
        return compose(self, other)

    def __and__(self, other: Mor) -> Mor:
        return tensor(self, other)

    def __add__(self, other: Mor) -> Mor:
        _check_parallel(self, other)
        a, b, d = linalg.scale_to_common(self.num, self._den, other.num, other._den)
        return Mor(self.dom, self.cod, linalg.add(a, b), d)

    def __neg__(self) -> Mor:
        if self.is_perm:
            return Mor(self.dom, self.cod, perm=self._perm, sign=-self._sign)
        return Mor(self.dom, self.cod, -self._num, self._den)

    def __sub__(self, other: Mor) -> Mor:
        return self + (-other)

    def scale(self, q) -> Mor:
        q = Fraction(q)
        return Mor(self.dom, self.cod, linalg.mul_scalar(self.num, q.numerator), self._den * q.denominator)

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return mor_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def with_entry(self, i: int, j: int, value) -> Mor:
        rows = self.matrix
        rows[i][j] = Fraction(value)
        return Mor.from_rows(self.dom, self.cod, rows)

    def inverse(self) -> Mor:
        if self.dom.dim != self.cod.dim:
            raise NotInvertibleMatrix("non-square matrix")
        if self.is_perm:
            n = self.dom.dim
            inv = np.empty(n, dtype=np.int64)
            inv[self._perm] = np.arange(n)
            return Mor(self.cod, self.dom, perm=inv, sign=self._sign[inv])
        res = linalg.inverse(self._num, self._den)
        if res is None:
            raise NotInvertibleMatrix("singular matrix")
        return Mor(self.cod, self.dom, *res)

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except NotInvertibleMatrix:
            return False
        return True

    def __repr__(self):
        return f"Mor({self.dom} -> {self.cod}, {self.shape[0]}x{self.shape[1]})"

    def pretty(self) -> str:
        cells = [[_fmt(v) for v in row] for row in self.matrix]
        w = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_parallel(f: Mor, g: Mor):
    if not (f.dom.same(g.dom) and f.cod.same(g.cod)):
        raise DomainMismatch(f"{f.dom}->{f.cod} vs {g.dom}->{g.cod}")


def identity(X: Obj) -> Mor:
    return Mor(X, X, perm=np.arange(X.dim))


def compose(*fs: Mor) -> Mor:
    """``compose(f, g, h) = f o g o h`` (rightmost applied first)."""
    if not fs:
        raise ValueError("compose needs at least one morphism")
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = _compose2(f, out)
    return out


def _compose2(f: Mor, g: Mor) -> Mor:
    if not g.cod.same(f.dom):
        raise DomainMismatch(f"cannot compose {f.dom}->{f.cod} after {g.dom}->{g.cod}")
    if f.is_perm and g.is_perm:
        return Mor(g.dom, f.cod, perm=f._perm[g._perm], sign=f._sign[g._perm] * g._sign)
    if f.is_perm:
        out = np.zeros(g.num.shape, dtype=g.num.dtype)
        out[f._perm] = g.num * f._sign[:, None] if g.num.dtype != object else g.num * f._sign.astype(object)[:, None]
        return Mor(g.dom, f.cod, out, g.den)
    if g.is_perm:
        a = f.num[:, g._perm]
        a = a * (g._sign.astype(object) if a.dtype == object else g._sign)
        return Mor(g.dom, f.cod, a, f.den)
    return Mor(g.dom, f.cod, linalg.matmul(f.num, g.num), f.den * g.den)


def tensor(*fs: Mor) -> Mor:
    """Tensor product, left factor major."""
    if not fs:
        return identity(K)
    out = fs[0]
    for f in fs[1:]:
        out = _tensor2(out, f)
    return out


def _tensor2(f: Mor, g: Mor) -> Mor:
    dom = tensor_obj(f.dom, g.dom)
    cod = tensor_obj(f.cod, g.cod)
    if f.is_perm and g.is_perm:
        m = g.cod.dim
        perm = (f._perm[:, None] * m + g._perm[None, :]).ravel()
        sign = (f._sign[:, None] * g._sign[None, :]).ravel()
        return Mor(dom, cod, perm=perm, sign=sign)
    return Mor(dom, cod, linalg.kron(f.num, g.num), f.den * g.den)


def mor_equal(f: Mor, g: Mor) -> bool:
    if not (f.dom.same(g.dom) and f.cod.same(g.cod)):
        return False
    if f.is_perm and g.is_perm:
        return bool(np.array_equal(f._perm, g._perm) and np.array_equal(f._sign, g._sign))
    if f.den != g.den:
        return False
    return bool(np.array_equal(f.num, g.num))


# ---------------------------------------------------------------------------
# braidings and duality


def _swap_signs(kind: BraidingKind, X: Obj, Y: Obj) -> np.ndarray:
    if kind is BraidingKind.FLIP:
        return np.ones(X.dim * Y.dim, dtype=np.int64)
    if X.grading is None or Y.grading is None:
        if X.dim == 1 and X.parities == (0,) or Y.dim == 1 and Y.parities == (0,):
            return np.ones(X.dim * Y.dim, dtype=np.int64)
        raise MissingGrading(f"graded flip needs gradings on {X} and {Y}")
    px = np.array(X.parities)
    py = np.array(Y.parities)
    return np.where(np.outer(px, py) % 2 == 1, -1, 1).ravel()


def braiding(kind: BraidingKind, X: Obj, Y: Obj) -> Mor:
    """``c_{X,Y}: X (x) Y -> Y (x) X``, sending ``e_i (x) f_j`` to ``+-f_j (x) e_i``."""
    i, j = np.meshgrid(np.arange(X.dim), np.arange(Y.dim), indexing="ij")
    perm = (j * X.dim + i).ravel()
    return Mor(tensor_obj(X, Y), tensor_obj(Y, X), perm=perm, sign=_swap_signs(kind, X, Y))


def braiding_inverse(kind: BraidingKind, X: Obj, Y: Obj) -> Mor:
    """``c_{X,Y}^{-1}: Y (x) X -> X (x) Y``."""
    return braiding(kind, X, Y).inverse()


def coevaluation(X: Obj) -> Mor:
    """``a_X(K): K -> X* (x) X``; a 1 at every flat index ``i*dim + i``."""
    n = X.dim
    col = np.zeros((n * n, 1), dtype=np.int64)
    col[np.arange(n) * n + np.arange(n), 0] = 1
    return Mor(K, tensor_obj(X.dual, X), col)


def evaluation(X: Obj) -> Mor:
    """``b_X(K): X (x) X* -> K``; a 1 at every flat index ``i*dim + i``."""
    n = X.dim
    row = np.zeros((1, n * n), dtype=np.int64)
    row[0, np.arange(n) * n + np.arange(n)] = 1
    return Mor(tensor_obj(X, X.dual), K, row)


def scalar(q) -> Mor:
    return Mor.from_rows(K, K, [[q]])


def generic_obj(dim: int, grading: Iterable[int] | None = None, name: str = "X") -> Obj:
    return Obj(dim, tuple(grading) if grading is not None else None, name)
