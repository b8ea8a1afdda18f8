"""Labeled threshold graphs, their constructions, anchors and odd anchors.

A construction is a signed permutation read left to right: ``+v`` adds
vertex v adjacent to everything present (dominant), ``-v`` adds it
isolated (recessive).

Vertex-1 convention: when 1 lies in the first block of the graph, the
construction must start with 1 and record it as ``+1``.  Without it the
odd-anchor count is not an invariant of the graph, so :func:`anchors`
refuses constructions that break it.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from threshold_atlas.distribution import DistributionTable
from threshold_atlas.errors import DomainError
from threshold_atlas.signed_permutations import SignedPermutation, enumerate_signed
from threshold_atlas.threshold_bijections import enumerate_threshold_pairs, standardize

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledThresholdGraph:
    """Simple graph on vertices 1..n; edges stored as sorted pairs ``(i, j)``, i < j."""

    n: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> LabeledThresholdGraph:
        norm = set()
        for e in edges:
            i, j = (int(v) for v in e)
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise DomainError(f"bad edge {list(e)} for n={n}")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> LabeledThresholdGraph:
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError('graph JSON must look like {"n": int, "edges": [[i, j], ...]}')
        return cls.from_edges(int(data["n"]), data["edges"])

    def format_edges(self) -> str:
        return " ".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.sorted_edges()) or "-"


def graph_from_construction(c: Sequence[int]) -> LabeledThresholdGraph:
    edges = set()
    seen: list[int] = []
    for e in c:
        v = abs(e)
        if e > 0:
            for u in seen:
                edges.add((u, v) if u < v else (v, u))
        seen.append(v)
    return LabeledThresholdGraph(len(seen), frozenset(edges))


def _peel(g: LabeledThresholdGraph) -> list[tuple[int, int]] | None:
    """Deterministic peel: returns the removals ``(vertex, +1 universal / -1 isolated)``.

    Always removes the largest-labelled vertex that is isolated or universal
    in what remains; a lone last vertex counts as isolated.  ``None`` when
    the peel gets stuck, i.e. the graph is not threshold.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    alive = set(adj)
    order = []
    while alive:
        r = len(alive)
        pick = None
        for v in sorted(alive, reverse=True):
            d = len(adj[v])
            if d == 0:
                pick = (v, -1)
                break
            if d == r - 1:
                pick = (v, 1)
                break
        if pick is None:
            return None
        v = pick[0]
        for u in adj[v]:
            adj[u].discard(v)
        alive.discard(v)
        order.append(pick)
    return order


def is_threshold_graph(g: LabeledThresholdGraph) -> bool:
    return _peel(g) is not None


def canonical_pair(g: LabeledThresholdGraph) -> SignedPermutation:
    """The threshold pair in standard form whose construction gives ``g``."""
    if g.n < 2:
        raise DomainError("canonical_pair needs n >= 2")
    order = _peel(g)
    if order is None:
        raise DomainError("graph is not a threshold graph")
    construction = tuple(sign * v for v, sign in reversed(order))
    return standardize(construction)


def apply_convention(tp: Sequence[int]) -> SignedPermutation:
    """Canonical convention-following construction of a threshold pair's graph.

    A threshold pair lists its first block ascending, so 1 is in the first
    block exactly when it comes first; it is then recorded as dominant.
    """
    tp = tuple(tp)
    if abs(tp[0]) == 1:
        return (1,) + tp[1:]
    return tp


def _one_in_first_block(c: Sequence[int]) -> bool:
    # first block of the graph's pair = the first equal-sign run of c, where
    # the first entry is taken to share the sign of the second
    if len(c) < 2:
        return True
    if abs(c[0]) == 1 or abs(c[1]) == 1:
        return True
    s = c[1] > 0
    for e in c[2:]:
        if (e > 0) != s:
            return False
        if abs(e) == 1:
            return True
    return False


def convention_violation(c: Sequence[int]) -> str | None:
    """Name the broken clause of the vertex-1 convention, or ``None``."""
    if not _one_in_first_block(c):
        return None
    if abs(c[0]) != 1:
        return "1 lies in the first block, so it must be the first vertex added"
    if c[0] < 0:
        return "1 is added first, so it must be recorded as dominant (+1)"
    return None


def follows_convention(c: Sequence[int]) -> bool:
    return convention_violation(c) is None


@dataclass(frozen=True)
class Anchor:
    label: int
    dominant: bool
    odd: bool


@dataclass(frozen=True)
class AnchorReport:
    anchors: tuple[Anchor, ...]

    @property
    def labels(self) -> list[int]:
        return [a.label for a in self.anchors]

    @property
    def odd_labels(self) -> list[int]:
        return [a.label for a in self.anchors if a.odd]


def anchors(c: Sequence[int]) -> AnchorReport:
    """Anchors of a construction in order of addition, each flagged odd or not."""
    problem = convention_violation(c)
    if problem:
        raise DomainError(f"construction {list(c)} breaks the vertex-1 convention: {problem}")
    marks = []
    running = None
    for e in reversed(c):
        v = abs(e)
        if running is None or v < running:
            marks.append((v, e > 0))
            running = v
    marks.reverse()
    out = []
    prev = None
    for v, dom in marks:
        odd = dom if prev is None else dom != prev
        out.append(Anchor(v, dom, odd))
        prev = dom
    return AnchorReport(tuple(out))


def odd_anchor_count(c: Sequence[int]) -> int:
    return sum(1 for a in anchors(c).anchors if a.odd)


def all_constructions(g: LabeledThresholdGraph) -> Iterator[SignedPermutation]:
    """Every convention-following signed permutation that builds exactly ``g``."""
    for sp in enumerate_signed(g.n):
        if follows_convention(sp) and graph_from_construction(sp) == g:
            yield sp


def constructions_by_graph(n: int) -> dict[LabeledThresholdGraph, list[SignedPermutation]]:
    """All convention-following constructions of size ``n``, grouped by their graph.

    One pass over the 2^n n! signed permutations; the exhaustive form of
    :func:`all_constructions` for every graph at once.
    """
    groups: dict[LabeledThresholdGraph, list[SignedPermutation]] = defaultdict(list)
    for sp in enumerate_signed(n):
        if follows_convention(sp):
            groups[graph_from_construction(sp)].append(sp)
    return dict(groups)


def odd_anchor_distribution(n: int, first_block: Sequence[int] | None = None) -> DistributionTable:
    """T(n, j): labeled threshold graphs on [n] with j odd anchors."""
    return DistributionTable.of(
        (odd_anchor_count(apply_convention(tp)) for tp in enumerate_threshold_pairs(n, first_block)),
        n,
        "odd-anchors",
    )
