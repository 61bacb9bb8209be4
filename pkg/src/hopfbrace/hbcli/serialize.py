"""Text serialization of structures.

A structure file is a JSON document with a fixed key order::

    {
      "format_version": 1,
      "kind": "brace_triple",
      "carrier": {"dim": 2, "grading": null},
      "braiding": "Flip",
      "morphisms": {
        "eta": [
          ["1"],
          ["0"]
        ],
        ...
      }
    }

Matrix rows index the codomain; entries are decimal integers or ``"p/q"``.
``dumps`` always writes each row on its own line so files diff cleanly and
``dumps(loads(text)) == text`` for any file ``dumps`` produced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from hopfbrace.bracelab import BraceTriple, HopfBrace, PostHopfAlgebra
from hopfbrace.hopfcore import HopfAlgebra
from hopfbrace.tensorcat import K, BraidingKind, DomainMismatch, Mor, generic_obj, tensor_obj

FORMAT_VERSION = 1

HOPF_KEYS = ("eta", "mu", "eps", "delta", "lambda")
SCHEMAS: dict[str, tuple[str, ...]] = {
    "hopf": HOPF_KEYS,
    "hopf_brace": ("eta", "mu1", "lambda1", "mu2", "lambda2", "eps", "delta"),
    "brace_triple": HOPF_KEYS + ("gamma", "T"),
    "post_hopf": HOPF_KEYS + ("m",),
}

Structure = HopfAlgebra | HopfBrace | BraceTriple | PostHopfAlgebra


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class StructureFile:
    kind: str
    dim: int
    grading: tuple[int, ...] | None
    braiding: BraidingKind
    morphisms: dict[str, Mor]
    format_version: int = FORMAT_VERSION


def _shapes(kind: str, dim: int) -> dict[str, tuple[int, int]]:
    n = dim
    base = {
        "eta": (n, 1), "mu": (n, n * n), "eps": (1, n), "delta": (n * n, n), "lambda": (n, n),
        "gamma": (n, n * n), "T": (n, n), "m": (n, n * n),
    }
    base.update({"mu1": base["mu"], "mu2": base["mu"], "lambda1": base["lambda"], "lambda2": base["lambda"]})
    return {k: base[k] for k in SCHEMAS[kind]}


def parse_scalar(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"matrix entries must be strings or integers, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar {s!r}: {exc}") from None


def format_scalar(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _objects(dim: int, grading):
    H = generic_obj(dim, grading, "H")
    return {"K": K, "H": H, "HH": tensor_obj(H, H)}


def _dom_cod(key: str, objs) -> tuple:
    H, HH = objs["H"], objs["HH"]
    if key.startswith("eta"):
        return K, H
    if key.startswith("eps"):
        return H, K
    if key in ("mu", "mu1", "mu2", "gamma", "m"):
        return HH, H
    if key == "delta":
        return H, HH
    return H, H


# ---------------------------------------------------------------------------
# reading


def loads(text: str) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {version!r}")
    kind = doc.get("kind")
    if kind not in SCHEMAS:
        raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(SCHEMAS)}")
    carrier = doc.get("carrier")
    if not isinstance(carrier, dict) or not isinstance(carrier.get("dim"), int):
        raise FormatError("carrier must be an object with an integer dim")
    dim, grading = carrier["dim"], carrier.get("grading")
    if dim < 1:
        raise FormatError("carrier dim must be positive")
    try:
        objs = _objects(dim, grading)
        braid = BraidingKind(doc.get("braiding"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    mats = doc.get("morphisms")
    if not isinstance(mats, dict):
        raise FormatError("morphisms must be an object")
    shapes = _shapes(kind, dim)
    missing = [k for k in shapes if k not in mats]
    extra = [k for k in mats if k not in shapes]
    if missing or extra:
        raise FormatError(f"kind {kind}: missing {missing or 'none'}, unexpected {extra or 'none'}")
    out = {}
    for key, (rows, cols) in shapes.items():
        m = mats[key]
        if not (isinstance(m, list) and len(m) == rows and all(isinstance(r, list) and len(r) == cols for r in m)):
            raise FormatError(f"{key}: expected a {rows}x{cols} nested array")
        dom, cod = _dom_cod(key, objs)
        out[key] = Mor.from_rows(dom, cod, [[parse_scalar(v) for v in r] for r in m])
    g = tuple(grading) if grading is not None else None
    return StructureFile(kind, dim, g, braid, out, version)


def load(path: str | Path) -> StructureFile:
    return loads(Path(path).read_text())


# ---------------------------------------------------------------------------
# writing


def dumps(sf: StructureFile) -> str:
    lines = [
        "{",
        f'  "format_version": {sf.format_version},',
        f'  "kind": {json.dumps(sf.kind)},',
        f'  "carrier": {{"dim": {sf.dim}, "grading": {json.dumps(list(sf.grading)) if sf.grading is not None else "null"}}},',
        f'  "braiding": {json.dumps(sf.braiding.value)},',
        '  "morphisms": {',
    ]
    keys = SCHEMAS[sf.kind]
    for idx, key in enumerate(keys):
        m = sf.morphisms[key]
        rows = [
            "      [" + ", ".join(json.dumps(format_scalar(v)) for v in row) + "]"
            for row in m.matrix
        ]
        lines.append(f"    {json.dumps(key)}: [")
        lines.append(",\n".join(rows))
        lines.append("    ]" + ("," if idx < len(keys) - 1 else ""))
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"


def dump(sf: StructureFile, path: str | Path) -> None:
    Path(path).write_text(dumps(sf))


# ---------------------------------------------------------------------------
# conversion to and from the structure classes


def _hopf(sf: StructureFile, eta="eta", mu="mu", lam="lambda") -> HopfAlgebra:
    M = sf.morphisms
    return HopfAlgebra(
        carrier=M["eps"].dom,
        braid=sf.braiding,
        eta=M[eta],
        mu=M[mu],
        eps=M["eps"],
        delta=M["delta"],
        lam=M[lam],
    )


def to_structure(sf: StructureFile) -> Structure:
    M = sf.morphisms
    if sf.kind == "hopf":
        return _hopf(sf)
    if sf.kind == "hopf_brace":
        return HopfBrace(_hopf(sf, mu="mu1", lam="lambda1"), _hopf(sf, mu="mu2", lam="lambda2"))
    if sf.kind == "brace_triple":
        return BraceTriple(_hopf(sf), M["gamma"], M["T"])
    return PostHopfAlgebra(_hopf(sf), M["m"])


def kind_of(S: Structure) -> str:
    if isinstance(S, HopfBrace):
        return "hopf_brace"
    if isinstance(S, BraceTriple):
        return "brace_triple"
    if isinstance(S, PostHopfAlgebra):
        return "post_hopf"
    if isinstance(S, HopfAlgebra):
        return "hopf"
    raise TypeError(f"cannot serialize {type(S).__name__}")


def _hopf_fields(H: HopfAlgebra) -> dict[str, Mor]:
    if H.over_inverse:
        raise FormatError("structures over the inverse braiding are not serializable")
    return {"eta": H.eta, "mu": H.mu, "eps": H.eps, "delta": H.delta, "lambda": H.lam}


def from_structure(S: Structure) -> StructureFile:
    kind = kind_of(S)
    if kind == "hopf":
        H, M = S, _hopf_fields(S)
    elif kind == "hopf_brace":
        H = S.first
        if S.first.eta != S.second.eta:
            raise FormatError("hopf_brace files store a single unit; the two units differ")
        M = _hopf_fields(S.first)
        M = {
            "eta": M["eta"], "mu1": S.first.mu, "lambda1": S.first.lam,
            "mu2": S.second.mu, "lambda2": S.second.lam, "eps": M["eps"], "delta": M["delta"],
        }
    elif kind == "brace_triple":
        H = S.hopf
        M = {**_hopf_fields(H), "gamma": S.gamma, "T": S.T}
    else:
        H = S.hopf
        M = {**_hopf_fields(H), "m": S.m}
    C = H.carrier
    for key, (rows, cols) in _shapes(kind, C.dim).items():
        if M[key].shape != (rows, cols):
            raise DomainMismatch(f"{key} has shape {M[key].shape}, expected {(rows, cols)}")
    return StructureFile(kind, C.dim, C.grading, H.braid, {k: M[k] for k in SCHEMAS[kind]})


def save_structure(S: Structure, path: str | Path) -> None:
    dump(from_structure(S), path)


def load_structure(path: str | Path) -> Structure:
    return to_structure(load(path))


def kind_of_name(cls: type) -> str:
    names = {HopfBrace: "hopf_brace", BraceTriple: "brace_triple", PostHopfAlgebra: "post_hopf", HopfAlgebra: "hopf"}
    return names[cls]
