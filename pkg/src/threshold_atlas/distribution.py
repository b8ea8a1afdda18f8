"""Exact histograms of integer-valued statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass(frozen=True)
class DistributionTable:
    """Mapping ``j -> count`` for a statistic over a finite family of objects.

    Zero counts are dropped, so two tables compare equal exactly when they
    agree on every ``j``.  Merging with ``+`` is associative and commutative,
    which is what parallel reductions rely on.
    """

    counts: Mapping[int, int] = field(default_factory=dict)
    n: int | None = None
    statistic: str = ""

    def __post_init__(self) -> None:
        clean = {int(j): int(c) for j, c in sorted(self.counts.items()) if c}
        if any(c < 0 for c in clean.values()):
            raise ValueError("distribution counts must be non-negative")
        object.__setattr__(self, "counts", clean)

    @classmethod
    def of(cls, values: Iterable[int], n: int | None = None, statistic: str = "") -> DistributionTable:
        return cls(Counter(values), n, statistic)

    def __getitem__(self, j: int) -> int:
        return self.counts.get(j, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DistributionTable):
            return self.counts == other.counts
        if isinstance(other, Mapping):
            return self.counts == {j: c for j, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))

    def __add__(self, other: DistributionTable) -> DistributionTable:
        merged = Counter(self.counts)
        merged.update(other.counts)
        return DistributionTable(merged, self.n if self.n is not None else other.n, self.statistic or other.statistic)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_list(self, length: int | None = None) -> list[int]:
        top = max(self.counts, default=-1) + 1
        size = top if length is None else max(length, top)
        return [self.counts.get(j, 0) for j in range(size)]
