"""Structured pass/fail records for axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from hopfbrace.tensorcat import DomainMismatch, Mor


@dataclass
class Clause:
    key: str
    passed: bool
    difference: Mor | None = None
    note: str = ""
    required: bool = True

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"key": self.key, "passed": self.passed}
        if not self.required:
            d["required"] = False
        if self.note:
            d["note"] = self.note
        if self.difference is not None:
            d["difference"] = {
                "shape": list(self.difference.shape),
                "nonzero": [[i, j, _s(v)] for i, j, v in nonzero_entries(self.difference)],
            }
        return d


def nonzero_entries(m: Mor, limit: int | None = None):
    """``(row, col, value)`` triples of the nonzero entries, row-major."""
    rows, cols = np.nonzero(m.num)
    out = []
    for i, j in zip(rows.tolist(), cols.tolist()):
        out.append((i, j, m.entry(i, j)))
        if limit is not None and len(out) >= limit:
            break
    return out


def _s(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class Report:
    title: str
    clauses: list[Clause] = field(default_factory=list)
    properties: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.clauses if c.required)

    def __bool__(self) -> bool:
        return self.ok

    def __getitem__(self, key: str) -> Clause:
        for c in self.clauses:
            if c.key == key:
                return c
        raise KeyError(key)

    def __contains__(self, key: str) -> bool:
        return any(c.key == key for c in self.clauses)

    def keys(self) -> list[str]:
        return [c.key for c in self.clauses]

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.required and not c.passed]

    def equal(self, key: str, lhs: Mor, rhs: Mor, *, required: bool = True, note: str = "") -> bool:
        """Record ``lhs == rhs`` exactly; the difference is kept on failure."""
        try:
            diff = lhs - rhs
        except DomainMismatch as exc:
            self.clauses.append(Clause(key, False, None, f"type error: {exc}", required))
            return False
        passed = diff.is_zero()
        self.clauses.append(Clause(key, passed, None if passed else diff, note, required))
        return passed

    def flag(self, key: str, passed: bool, note: str = "", *, required: bool = True) -> bool:
        self.clauses.append(Clause(key, bool(passed), None, note, required))
        return bool(passed)

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.clauses:
            self.clauses.append(Clause(prefix + c.key, c.passed, c.difference, c.note, c.required))

    def render(self, show_diffs: bool = True) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for k, v in self.properties.items():
            lines.append(f"  [{k}] {v}")
        for c in self.clauses:
            status = "PASS" if c.passed else ("FAIL" if c.required else "no")
            tag = "" if c.required else " (info)"
            lines.append(f"  {status:4} {c.key}{tag}" + (f"  -- {c.note}" if c.note else ""))
            if show_diffs and c.difference is not None:
                ents = nonzero_entries(c.difference, limit=6)
                shown = ", ".join(f"({i},{j})={_s(v)}" for i, j, v in ents)
                total = int((c.difference.num != 0).sum())
                more = f" ... {total - len(ents)} more" if total > len(ents) else ""
                lines.append(f"         lhs-rhs {c.difference.shape[0]}x{c.difference.shape[1]}: {shown}{more}")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "properties": dict(self.properties),
            "clauses": [c.to_dict() for c in self.clauses],
        }
