"""A small language for morphism expressions.

Grammar::

    expr   := term { "." term }
    term   := factor { "ox" factor }
    factor := IDENT | "id[" OBJ "]" | "c[" OBJ "," OBJ "]" | "cinv[" OBJ "," OBJ "]" | "(" expr ")"

``.`` is composition with the right operand applied first and binds looser
than the tensor ``ox``.  Object names are ``H``, ``H*`` and ``K`` (the unit).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from hopfbrace.bracelab import (
    BraceTriple,
    HopfBrace,
    PostHopfAlgebra,
    alpha_of,
    beta_closed_form,
    mu_bt,
)
from hopfbrace.hopfcore import HopfAlgebra
from hopfbrace.tensorcat import K, Mor, coevaluation, compose, evaluation, identity, tensor


class ExprError(Exception):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}" if line else message)
        self.line = line
        self.column = column


class ExprSyntaxError(ExprError, SyntaxError):
    pass


class UnknownGenerator(ExprError):
    pass


class TypeMismatch(ExprError):
    pass


# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Pos:
    line: int
    column: int


@dataclass(frozen=True)
class Gen:
    name: str
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Id:
    obj: str
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Braid:
    left: str
    right: str
    inverse: bool = False
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Compose:
    parts: tuple[Expr, ...]
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Tensor:
    parts: tuple[Expr, ...]
    pos: Pos | None = field(default=None, compare=False)


Expr = Union[Gen, Id, Braid, Compose, Tensor]


# ---------------------------------------------------------------------------
# lexing and parsing

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*\*?)|(?P<punct>[.()\[\],∘⊗])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: Pos


def tokenize(text: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    while i < len(text):
        mt = _TOKEN.match(text, i)
        if mt is None:
            raise ExprSyntaxError(f"unexpected character {text[i]!r}", line, col)
        s = mt.group()
        kind = mt.lastgroup
        if kind == "ident" and s == "ox":
            kind, s = "punct", "ox"
        elif s == "∘":
            kind, s = "punct", "."
        elif s == "⊗":
            kind, s = "punct", "ox"
        if kind != "ws":
            out.append(Token(kind, s, Pos(line, col)))
        for ch in mt.group():
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = mt.end()
    out.append(Token("end", "", Pos(line, col)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text or t.kind == "ident":
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected {text!r}, got {got}", t.pos.line, t.pos.column)
        return self.advance()

    def obj(self) -> str:
        t = self.tok
        if t.kind != "ident":
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected an object name, got {got}", t.pos.line, t.pos.column)
        return self.advance().text

    def expr(self) -> Expr:
        start = self.tok.pos
        parts = [self.term()]
        while self.tok.text == "." and self.tok.kind == "punct":
            self.advance()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts), start)

    def term(self) -> Expr:
        start = self.tok.pos
        parts = [self.factor()]
        while self.tok.text == "ox" and self.tok.kind == "punct":
            self.advance()
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Tensor(tuple(parts), start)

    def factor(self) -> Expr:
        t = self.tok
        if t.kind == "punct" and t.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "ident":
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected a morphism, got {got}", t.pos.line, t.pos.column)
        self.advance()
        if self.tok.text == "[" and t.text in ("id", "c", "cinv"):
            self.advance()
            a = self.obj()
            if t.text == "id":
                self.expect("]")
                return Id(a, t.pos)
            self.expect(",")
            b = self.obj()
            self.expect("]")
            return Braid(a, b, t.text == "cinv", t.pos)
        return Gen(t.text, t.pos)


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != "end":
        t = p.tok
        raise ExprSyntaxError(f"unexpected {t.text!r}", t.pos.line, t.pos.column)
    return e


def print_expr(e: Expr) -> str:
    """Canonical text; ``parse_expr(print_expr(e)) == e``."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Id):
        return f"id[{e.obj}]"
    if isinstance(e, Braid):
        return f"{'cinv' if e.inverse else 'c'}[{e.left},{e.right}]"
    if isinstance(e, Compose):
        return " . ".join(f"({print_expr(p)})" if isinstance(p, Compose) else print_expr(p) for p in e.parts)
    return " ox ".join(
        f"({print_expr(p)})" if isinstance(p, (Compose, Tensor)) else print_expr(p) for p in e.parts
    )


# ---------------------------------------------------------------------------
# typing

ObjType = tuple[str, ...]  # tensor factors; () is the unit K

_H: ObjType = ("H",)
_HH: ObjType = ("H", "H")
_U: ObjType = ()
_HsH: ObjType = ("H*", "H")

_HOPF_SIGS = {
    "eta": (_U, _H), "mu": (_HH, _H), "eps": (_H, _U), "delta": (_H, _HH), "lambda": (_H, _H),
    "lambda_inv": (_H, _H), "aH": (_U, _HsH), "bH": (("H", "H*"), _U),
}
_SIGS = {
    "hopf": _HOPF_SIGS,
    "hopf_brace": {
        **{k: v for k, v in _HOPF_SIGS.items() if k not in ("mu", "lambda", "lambda_inv")},
        "eta1": (_U, _H), "eta2": (_U, _H), "mu1": (_HH, _H), "mu2": (_HH, _H),
        "lambda1": (_H, _H), "lambda2": (_H, _H), "Gamma": (_HH, _H),
    },
    "brace_triple": {
        **_HOPF_SIGS, "gamma": (_HH, _H), "T": (_H, _H), "Tinv": (_H, _H), "muBT": (_HH, _H),
        "alphaH": (_H, _HsH), "betaH": (_H, _HsH),
    },
    "post_hopf": {**_HOPF_SIGS, "m": (_HH, _H), "alphaH": (_H, _HsH), "betaH": (_H, _HsH)},
}


def signatures(kind: str) -> dict[str, tuple[ObjType, ObjType]]:
    return _SIGS[kind]


def _show(t: ObjType) -> str:
    return "(x)".join(t) if t else "K"


def _obj_type(name: str, pos: Pos | None) -> ObjType:
    if name == "K":
        return _U
    if name in ("H", "H*"):
        return (name,)
    line, col = (pos.line, pos.column) if pos else (0, 0)
    raise UnknownGenerator(f"unknown object {name!r} (expected H, H* or K)", line, col)


def typecheck(e: Expr, kind: str) -> tuple[ObjType, ObjType]:
    """``(domain, codomain)`` of ``e`` as tuples of factor names."""
    sigs = _SIGS[kind]
    if isinstance(e, Gen):
        if e.name not in sigs:
            line, col = (e.pos.line, e.pos.column) if e.pos else (0, 0)
            raise UnknownGenerator(
                f"unknown generator {e.name!r} for kind {kind}; known: {', '.join(sorted(sigs))}",
                line, col,
            )
        return sigs[e.name]
    if isinstance(e, Id):
        t = _obj_type(e.obj, e.pos)
        return t, t
    if isinstance(e, Braid):
        a, b = _obj_type(e.left, e.pos), _obj_type(e.right, e.pos)
        return (b + a, a + b) if e.inverse else (a + b, b + a)
    if isinstance(e, Tensor):
        dom: ObjType = ()
        cod: ObjType = ()
        for p in e.parts:
            d, c = typecheck(p, kind)
            dom, cod = dom + d, cod + c
        return dom, cod
    types = [typecheck(p, kind) for p in e.parts]
    for k in range(len(types) - 1):
        outer, inner = types[k], types[k + 1]
        if outer[0] != inner[1]:
            pos = e.parts[k + 1].pos or e.pos
            line, col = (pos.line, pos.column) if pos else (0, 0)
            raise TypeMismatch(
                f"cannot compose: {print_expr(e.parts[k])} expects {_show(outer[0])} "
                f"but {print_expr(e.parts[k + 1])} yields {_show(inner[1])}",
                line, col,
            )
    return types[-1][0], types[0][1]


# ---------------------------------------------------------------------------
# evaluation


def kind_of_structure(S) -> str:
    if isinstance(S, HopfBrace):
        return "hopf_brace"
    if isinstance(S, BraceTriple):
        return "brace_triple"
    if isinstance(S, PostHopfAlgebra):
        return "post_hopf"
    if isinstance(S, HopfAlgebra):
        return "hopf"
    raise TypeError(f"no expression generators for {type(S).__name__}")


def _base_hopf(S) -> HopfAlgebra:
    if isinstance(S, HopfBrace):
        return S.first
    if isinstance(S, (BraceTriple, PostHopfAlgebra)):
        return S.hopf
    return S


def generators(S) -> dict[str, Mor]:
    """The generator bindings available for structure ``S`` (computed lazily)."""
    H = _base_hopf(S)
    C = H.carrier
    table = {
        "eta": lambda: H.eta, "mu": lambda: H.mu, "eps": lambda: H.eps, "delta": lambda: H.delta,
        "lambda": lambda: H.lam, "lambda_inv": lambda: H.lam_inverse,
        "aH": lambda: coevaluation(C), "bH": lambda: evaluation(C),
    }
    if isinstance(S, HopfBrace):
        table.update({
            "eta1": lambda: S.first.eta, "eta2": lambda: S.second.eta,
            "mu1": lambda: S.first.mu, "mu2": lambda: S.second.mu,
            "lambda1": lambda: S.first.lam, "lambda2": lambda: S.second.lam,
            "Gamma": lambda: S.gamma,
        })
    elif isinstance(S, BraceTriple):
        table.update({
            "gamma": lambda: S.gamma, "T": lambda: S.T, "Tinv": lambda: S.T_inv,
            "muBT": lambda: mu_bt(S), "alphaH": lambda: alpha_of(H, S.gamma),
            "betaH": lambda: beta_closed_form(S),
        })
    elif isinstance(S, PostHopfAlgebra):
        table.update({"m": lambda: S.m, "alphaH": lambda: S.alpha, "betaH": lambda: S.beta})
    sigs = _SIGS[kind_of_structure(S)]
    return {k: v for k, v in table.items() if k in sigs}


class _Env:
    def __init__(self, S):
        self.S = S
        self.H = _base_hopf(S)
        self.lazy = generators(S)
        self.cache: dict[str, Mor] = {}

    def gen(self, name: str) -> Mor:
        if name not in self.cache:
            self.cache[name] = self.lazy[name]()
        return self.cache[name]

    def obj(self, name: str):
        C = self.H.carrier
        return {"K": K, "H": C, "H*": C.dual}[name]


def _eval(e: Expr, env: _Env) -> Mor:
    if isinstance(e, Gen):
        return env.gen(e.name)
    if isinstance(e, Id):
        return identity(env.obj(e.obj))
    if isinstance(e, Braid):
        X, Y = env.obj(e.left), env.obj(e.right)
        return env.H.cinv(X, Y) if e.inverse else env.H.c(X, Y)
    if isinstance(e, Tensor):
        return tensor(*(_eval(p, env) for p in e.parts))
    return compose(*(_eval(p, env) for p in e.parts))


def eval_expr(e: Expr | str, S) -> Mor:
    """Typecheck then evaluate ``e`` against the generators of ``S``."""
    if isinstance(e, str):
        e = parse_expr(e)
    typecheck(e, kind_of_structure(S))
    return _eval(e, _Env(S))


__all__ = [
    "Braid",
    "Compose",
    "ExprError",
    "ExprSyntaxError",
    "Gen",
    "Id",
    "Tensor",
    "TypeMismatch",
    "UnknownGenerator",
    "eval_expr",
    "generators",
    "parse_expr",
    "print_expr",
    "signatures",
    "typecheck",
]
