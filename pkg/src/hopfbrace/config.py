"""Run configurations for the experiment scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from hopfbrace import exhibits


@dataclass(frozen=True)
class CorpusConfig:
    max_order: int = 8
    exhaustive_bound: int = exhibits.DEFAULT_BOUND
    groups: tuple[str, ...] = field(default_factory=tuple)  # empty: all built-ins

    def entries(self) -> list[exhibits.CorpusEntry]:
        out = exhibits.corpus(self.max_order, self.exhaustive_bound)
        if self.groups:
            out = [e for e in out if e.skew is None or e.skew.dot.name in self.groups]
        return out

    def to_dict(self) -> dict:
        return asdict(self)

