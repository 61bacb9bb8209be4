"""Example generators: finite groups, skew braces and their linearizations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from hopfbrace.bracelab import BraceTriple, HopfBrace
from hopfbrace.hopfcore import HopfAlgebra
from hopfbrace.tensorcat import K, BraidingKind, Mor, generic_obj, tensor_obj

DEFAULT_BOUND = 6
ORACLE_BOUND = 4


class InvalidGroup(ValueError):
    pass


class InvalidSkewBrace(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


Table = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# finite groups


@dataclass(frozen=True)
class FiniteGroup:
    """A group on ``{0, ..., n-1}`` given by its Cayley table."""

    name: str
    table: Table
    identity: int = field(init=False)
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        t = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", t)
        n = len(t)
        if n == 0 or any(len(row) != n for row in t):
            raise InvalidGroup("Cayley table must be square and nonempty")
        if any(v < 0 or v >= n for row in t for v in row):
            raise InvalidGroup("table entry out of range")
        ids = [e for e in range(n) if all(t[e][g] == g and t[g][e] == g for g in range(n))]
        if not ids:
            raise InvalidGroup(f"{self.name}: no identity element")
        e = ids[0]
        inv = []
        for g in range(n):
            h = next((h for h in range(n) if t[g][h] == e and t[h][g] == e), None)
            if h is None:
                raise InvalidGroup(f"{self.name}: element {g} has no inverse")
            inv.append(h)
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidGroup(f"{self.name}: not associative at {(a, b, c)}")
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    @cached_property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All automorphisms as image tuples, sorted, identity first."""
        n, t, e = self.order, self.table, self.identity
        gens = self._generators()
        found = []
        others = [g for g in range(n) if g != e]
        # an automorphism is determined by the images of a generating set
        for images in itertools.permutations(others, len(gens)):
            phi = self._extend(dict(zip(gens, images)))
            if phi is None:
                continue
            if all(phi[t[a][b]] == t[phi[a]][phi[b]] for a in range(n) for b in range(n)):
                found.append(tuple(phi))
        found = sorted(set(found))
        ident = tuple(range(n))
        found.remove(ident)
        return (ident, *found)

    def _generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self._closure(gens)
        return gens

    def _closure(self, gens) -> set[int]:
        span = {self.identity}
        frontier = list(span)
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = self.table[a][g]
                if b not in span:
                    span.add(b)
                    frontier.append(b)
        return span

    def _extend(self, assign: dict[int, int]) -> list[int] | None:
        """Extend generator images along words; ``None`` if not a bijection."""
        n, t = self.order, self.table
        phi: dict[int, int] = {self.identity: self.identity}
        frontier = [self.identity]
        while frontier:
            a = frontier.pop()
            for g, img in assign.items():
                b = t[a][g]
                val = t[phi[a]][img]
                if b in phi:
                    if phi[b] != val:
                        return None
                else:
                    phi[b] = val
                    frontier.append(b)
        out = [phi[g] for g in range(n)]
        return out if len(set(out)) == n else None


def _cyclic(n: int) -> Table:
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def _from_elements(elems: list, op) -> Table:
    index = {x: i for i, x in enumerate(elems)}
    return tuple(tuple(index[op(a, b)] for b in elems) for a in elems)


def _direct(*orders: int) -> Table:
    elems = list(itertools.product(*(range(k) for k in orders)))
    return _from_elements(elems, lambda a, b: tuple((x + y) % k for x, y, k in zip(a, b, orders)))


def _perm_group(gens: list[tuple[int, ...]]) -> Table:
    ident = tuple(range(len(gens[0])))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop(0)
        for g in gens:
            q = tuple(p[g[i]] for i in range(len(g)))
            if q not in seen:
                seen.add(q)
                elems.append(q)
                frontier.append(q)
    # (p*q)(i) = p(q(i))
    return _from_elements(elems, lambda p, q: tuple(p[q[i]] for i in range(len(q))))


def _quaternion() -> Table:
    # elements (sign, unit) with unit in 1, i, j, k
    unit_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def op(a, b):
        s, u = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return _from_elements(elems, op)


def _builtin_tables() -> dict[str, Table]:
    tables = {f"C{n}": _cyclic(n) for n in range(1, 9)}
    tables["C2xC2"] = _direct(2, 2)
    tables["S3"] = _perm_group([(1, 0, 2), (1, 2, 0)])
    tables["D4"] = _perm_group([(1, 2, 3, 0), (0, 3, 2, 1)])
    tables["Q8"] = _quaternion()
    tables["C2xC4"] = _direct(2, 4)
    tables["C2xC2xC2"] = _direct(2, 2, 2)
    return tables


BUILTIN_GROUP_NAMES = tuple(_builtin_tables())


def builtin_group(name: str) -> FiniteGroup:
    tables = _builtin_tables()
    if name not in tables:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(tables)}")
    return FiniteGroup(name, tables[name])


def builtin_groups(max_order: int = 8) -> list[FiniteGroup]:
    return [g for g in map(builtin_group, BUILTIN_GROUP_NAMES) if g.order <= max_order]


# ---------------------------------------------------------------------------
# skew braces


@dataclass(frozen=True)
class SkewBrace:
    """``(G, ., *)`` on a common underlying set."""

    dot: FiniteGroup
    circ: FiniteGroup
    label: str = ""

    def __post_init__(self):
        if self.dot.order != self.circ.order:
            raise InvalidSkewBrace("the two groups live on sets of different size")

    @property
    def order(self) -> int:
        return self.dot.order

    def compatibility_failures(self) -> list[tuple[int, int, int]]:
        """Triples violating ``g*(h.t) = (g*h).g^-1.(g*t)``."""
        d, c = self.dot.table, self.circ.table
        inv = self.dot.inverse
        n = self.order
        bad = []
        for g, h, t in itertools.product(range(n), repeat=3):
            if c[g][d[h][t]] != d[d[c[g][h]][inv[g]]][c[g][t]]:
                bad.append((g, h, t))
        return bad

    def is_valid(self) -> bool:
        return not self.compatibility_failures()

    def validate(self) -> None:
        bad = self.compatibility_failures()
        if bad:
            raise InvalidSkewBrace(f"compatibility fails at {len(bad)} triples, first {bad[0]}")

    def key(self) -> Table:
        return self.circ.table

    def gamma(self, g: int, h: int) -> int:
        """``g^-1 . (g * h)``."""
        return self.dot.table[self.dot.inverse[g]][self.circ.table[g][h]]


def trivial_skew_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G, G, f"trivial({G.name})")


def opposite_skew_brace(G: FiniteGroup) -> SkewBrace:
    """``g * h = h . g``."""
    n = G.order
    op = tuple(tuple(G.table[b][a] for b in range(n)) for a in range(n))
    return SkewBrace(G, FiniteGroup(f"{G.name}op", op), f"opposite({G.name})")


def _is_group_table(t, n: int, e: int) -> bool:
    for g in range(n):
        if sorted(t[g]) != list(range(n)):
            return False
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return False
    return all(t[e][g] == g and t[g][e] == g for g in range(n))


def enumerate_skew_braces(G: FiniteGroup, bound: int = DEFAULT_BOUND) -> list[SkewBrace]:
    """All skew braces with additive group ``G``, found through lambda-maps.

    Each candidate assigns an automorphism ``lambda_g`` to every ``g != e``
    and sets ``g * h = g . lambda_g(h)``; candidates whose ``*`` is a group
    and which satisfy the compatibility law are kept.  Sorted by table.
    """
    n = G.order
    if n > bound:
        raise BoundExceeded(f"|G| = {n} exceeds enumeration bound {bound}")
    e, t = G.identity, G.table
    auts = G.automorphisms
    others = [g for g in range(n) if g != e]
    found: dict[Table, SkewBrace] = {}
    for choice in itertools.product(auts, repeat=len(others)):
        lam = {e: tuple(range(n))}
        lam.update(zip(others, choice))
        circ = tuple(tuple(t[g][lam[g][h]] for h in range(n)) for g in range(n))
        if circ in found or not _is_group_table(circ, n, e):
            continue
        S = SkewBrace(G, FiniteGroup(f"{G.name}*", circ))
        if S.is_valid():
            found[circ] = S
    return [replace(found[k], label=f"{G.name}#{i}") for i, k in enumerate(sorted(found))]


def brute_force_skew_braces(G: FiniteGroup, bound: int = ORACLE_BOUND) -> set[Table]:
    """Every ``*``-table making ``(G, ., *)`` a skew brace, by direct search.

    Backtracks over Latin squares (group tables are Latin squares) and then
    filters for the group axioms and compatibility.  Independent of
    automorphisms; used only as an oracle for small orders.
    """
    n = G.order
    if n > bound:
        raise BoundExceeded(f"|G| = {n} exceeds oracle bound {bound}")
    cells = [(i, j) for i in range(n) for j in range(n)]
    grid = [[-1] * n for _ in range(n)]
    rows_used = [set() for _ in range(n)]
    cols_used = [set() for _ in range(n)]
    out: set[Table] = set()

    def rec(k: int):
        if k == len(cells):
            table = tuple(tuple(r) for r in grid)
            try:
                circ = FiniteGroup("candidate", table)
            except InvalidGroup:
                return
            if SkewBrace(G, circ).is_valid():
                out.add(table)
            return
        i, j = cells[k]
        for v in range(n):
            if v in rows_used[i] or v in cols_used[j]:
                continue
            grid[i][j] = v
            rows_used[i].add(v)
            cols_used[j].add(v)
            rec(k + 1)
            rows_used[i].discard(v)
            cols_used[j].discard(v)
        grid[i][j] = -1

    rec(0)
    return out


def transport(S: SkewBrace, sigma: tuple[int, ...]) -> SkewBrace:
    """Relabel the underlying set by the bijection ``sigma``."""
    n = S.order
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i

    def move(t):
        return tuple(tuple(sigma[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n))

    return SkewBrace(
        FiniteGroup(S.dot.name, move(S.dot.table)),
        FiniteGroup(S.circ.name, move(S.circ.table)),
        f"{S.label}^sigma",
    )


# ---------------------------------------------------------------------------
# linearization


def _carrier(n: int, grading=None):
    return generic_obj(n, grading, "H")


def group_algebra(G: FiniteGroup, braid: BraidingKind = BraidingKind.FLIP) -> HopfAlgebra:
    """The group algebra ``K[G]`` with group-like basis."""
    if braid is not BraidingKind.FLIP:
        raise ValueError("group algebras are ungraded; use Flip")
    n = G.order
    H = _carrier(n)
    HH = tensor_obj(H, H)
    eta = np.zeros((n, 1), dtype=np.int64)
    eta[G.identity, 0] = 1
    mu = np.zeros((n, n * n), dtype=np.int64)
    delta = np.zeros((n * n, n), dtype=np.int64)
    for g in range(n):
        delta[g * n + g, g] = 1
        for h in range(n):
            mu[G.table[g][h], g * n + h] = 1
    return HopfAlgebra(
        carrier=H,
        braid=braid,
        eta=Mor(K, H, eta),
        mu=Mor(HH, H, mu),
        eps=Mor(H, K, np.ones((1, n), dtype=np.int64)),
        delta=Mor(H, HH, delta),
        lam=Mor(H, H, perm=list(G.inverse)),
    )


def function_algebra(G: FiniteGroup) -> HopfAlgebra:
    """``K^G``, the dual of ``K[G]``: idempotent basis ``p_g``, commutative,
    and cocommutative only when ``G`` is abelian."""
    n = G.order
    H = _carrier(n)
    HH = tensor_obj(H, H)
    mu = np.zeros((n, n * n), dtype=np.int64)
    delta = np.zeros((n * n, n), dtype=np.int64)
    eps = np.zeros((1, n), dtype=np.int64)
    eps[0, G.identity] = 1
    for g in range(n):
        mu[g, g * n + g] = 1
        for h in range(n):
            delta[g * n + h, G.table[g][h]] = 1
    return HopfAlgebra(
        carrier=H,
        braid=BraidingKind.FLIP,
        eta=Mor(K, H, np.ones((n, 1), dtype=np.int64)),
        mu=Mor(HH, H, mu),
        eps=Mor(H, K, eps),
        delta=Mor(H, HH, delta),
        lam=Mor(H, H, perm=list(G.inverse)),
    )


def linear_map(G_dim: int, fn) -> Mor:
    """Linearize a set map ``G x G -> G`` given as ``fn(g, h)``."""
    n = G_dim
    H = _carrier(n)
    a = np.zeros((n, n * n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            a[fn(g, h), g * n + h] = 1
    return Mor(tensor_obj(H, H), H, a)


def hopf_brace_from_skew_brace(S: SkewBrace) -> HopfBrace:
    if not S.is_valid():
        raise InvalidSkewBrace(f"{S.label or 'skew brace'} violates compatibility")
    if S.dot.identity != S.circ.identity:
        raise InvalidSkewBrace("the two group structures have different identities")
    return HopfBrace(group_algebra(S.dot), group_algebra(S.circ))


def brace_triple_from_skew_brace(S: SkewBrace) -> BraceTriple:
    """``gamma(g (x) h) = g^-1 . (g * h)`` and ``T`` the ``*``-inversion."""
    S.validate()
    H = group_algebra(S.dot)
    gamma = linear_map(S.order, S.gamma)
    T = Mor(H.carrier, H.carrier, perm=list(S.circ.inverse))
    return BraceTriple(H, gamma, T)


def trivial_triple(H: HopfAlgebra) -> BraceTriple:
    """``gamma = eps (x) id`` and ``T = lambda``."""
    return BraceTriple(H, H.eps & H.I, H.lam)


def super_line() -> HopfAlgebra:
    """``K[x]/(x^2)`` with ``x`` odd and primitive, over the graded flip."""
    H = _carrier(2, (0, 1))
    HH = tensor_obj(H, H)
    return HopfAlgebra(
        carrier=H,
        braid=BraidingKind.GRADED_FLIP,
        eta=Mor(K, H, np.array([[1], [0]])),
        mu=Mor(HH, H, np.array([[1, 0, 0, 0], [0, 1, 1, 0]])),
        eps=Mor(H, K, np.array([[1, 0]])),
        delta=Mor(H, HH, np.array([[1, 0], [0, 1], [0, 1], [0, 0]])),
        lam=Mor(H, H, perm=[0, 1], sign=[1, -1]),
    )


# ---------------------------------------------------------------------------
# corpus


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    triple: BraceTriple
    skew: SkewBrace | None = None

    @cached_property
    def brace(self) -> HopfBrace:
        if self.skew is not None:
            return hopf_brace_from_skew_brace(self.skew)
        H = self.triple.hopf
        return HopfBrace(H, H)


def skew_brace_corpus(max_order: int = 8, exhaustive_bound: int = DEFAULT_BOUND) -> list[SkewBrace]:
    """Trivial and opposite families on every built-in group, plus every
    enumerated skew brace on groups of order at most ``exhaustive_bound``.
    Deduplicated per group by table."""
    out: list[SkewBrace] = []
    for G in builtin_groups(max_order):
        seen: set[Table] = set()
        fams = [trivial_skew_brace(G), opposite_skew_brace(G)]
        if G.order <= exhaustive_bound:
            fams += enumerate_skew_braces(G, exhaustive_bound)
        for S in fams:
            if S.key() not in seen:
                seen.add(S.key())
                out.append(S)
    return out


def corpus(max_order: int = 8, exhaustive_bound: int = DEFAULT_BOUND) -> list[CorpusEntry]:
    """Brace triples of independent provenance: linearized skew braces, the
    trivial triple on the super line and on the non-cocommutative ``K^S3``."""
    entries = [
        CorpusEntry(S.label, brace_triple_from_skew_brace(S), S)
        for S in skew_brace_corpus(max_order, exhaustive_bound)
    ]
    entries.append(CorpusEntry("trivial(super)", trivial_triple(super_line())))
    entries.append(CorpusEntry("trivial(K^S3)", trivial_triple(function_algebra(builtin_group("S3")))))
    return entries
