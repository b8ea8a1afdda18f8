"""Threshold pairs in standard form, threshold permutations and the maps between them.

Both kinds of object are signed permutations (plain int tuples) subject to
extra conditions; the functions here test those conditions, enumerate the
pairs, and translate back and forth.  Sizes 0 and 1 are rejected: both
definitions need two leading entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from threshold_atlas.errors import DomainError
from threshold_atlas.signed_permutations import SignedPermutation, is_normal


def _need_two(sp: Sequence[int], what: str) -> None:
    if len(sp) < 2:
        raise DomainError(f"{what} is only defined for n >= 2")


def is_threshold_pair(sp: Sequence[int]) -> bool:
    """Standard form: equal leading signs, and equal-sign neighbours ascend."""
    _need_two(sp, "threshold pair")
    if (sp[0] > 0) != (sp[1] > 0):
        return False
    for i in range(1, len(sp)):
        if (sp[i] > 0) == (sp[i - 1] > 0) and abs(sp[i]) < abs(sp[i - 1]):
            return False
    return True


def is_threshold_perm(sp: Sequence[int]) -> bool:
    _need_two(sp, "threshold permutation")
    a, b = sp[0], sp[1]
    if abs(a) > abs(b):
        return False
    if abs(a) == 1:
        if a > 0:
            return False
    elif b > 0:
        return False
    return is_normal(sp)


def ordered_set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered set partitions of ``items``; each block keeps the input order."""
    if not items:
        yield ()
        return
    items = tuple(items)
    for size in range(1, len(items) + 1):
        for first in combinations(items, size):
            chosen = set(first)
            rest = tuple(x for x in items if x not in chosen)
            for tail in ordered_set_partitions(rest):
                yield (first,) + tail


def _pair_from_blocks(blocks: Sequence[Sequence[int]], lead: int) -> SignedPermutation:
    out = []
    sign = lead
    for block in blocks:
        out.extend(sign * x for x in block)
        sign = -sign
    return tuple(out)


def first_blocks(n: int) -> list[tuple[int, ...]]:
    """Candidate first blocks (size >= 2) in enumeration order; one shard each."""
    return [blk for size in range(2, n + 1) for blk in combinations(range(1, n + 1), size)]


def enumerate_threshold_pairs(n: int, first_block: Sequence[int] | None = None) -> Iterator[SignedPermutation]:
    """Every threshold pair in standard form of size ``n``, each once.

    Built from ordered set partitions of [n] whose first block has at least
    two elements: pick the sign of that block, alternate afterwards and
    write every block in increasing order.  Passing ``first_block`` yields
    only the pairs with that first block.
    """
    if n < 2:
        raise DomainError("threshold pairs need n >= 2")
    heads = first_blocks(n) if first_block is None else [tuple(sorted(first_block))]
    for head in heads:
        chosen = set(head)
        rest = tuple(x for x in range(1, n + 1) if x not in chosen)
        for tail in ordered_set_partitions(rest):
            blocks = (head,) + tail
            for lead in (1, -1):
                yield _pair_from_blocks(blocks, lead)


def pair_to_threshold_perm(tp: Sequence[int]) -> SignedPermutation:
    _need_two(tp, "threshold pair")
    out = [abs(x) for x in tp]
    for i in range(2, len(tp)):
        if (tp[i] > 0) != (tp[i - 1] > 0):
            out[i] = -out[i]
    if out[0] != 1:
        out[0] = tp[0]
        out[1] = -out[1]
    else:
        out[0] = -1
        if tp[0] < 0:
            out[1] = -out[1]
    return tuple(out)


def threshold_perm_to_pair(tperm: Sequence[int]) -> SignedPermutation:
    """Inverse of :func:`pair_to_threshold_perm`.

    Each negative entry from the third position on marks a change of
    block; the reference sign is w_1, or w_2 when the permutation starts
    with 1.
    """
    if not is_threshold_perm(tperm):
        raise DomainError(f"{list(tperm)} is not a threshold permutation")
    ref = 1 if (tperm[0] > 0 if abs(tperm[0]) != 1 else tperm[1] > 0) else -1
    out = []
    sign = ref
    for i, e in enumerate(tperm):
        if i >= 2 and e < 0:
            sign = -sign
        out.append(sign * abs(e))
    return tuple(out)


def standardize(sp: Sequence[int]) -> SignedPermutation:
    """The threshold pair that builds the same graph as ``sp``.

    The first sign is copied from the second (the first vertex's type is
    irrelevant), then every maximal run of equal signs is sorted ascending
    (consecutive vertices of one type commute).
    """
    _need_two(sp, "standardize")
    signs = [1 if x > 0 else -1 for x in sp]
    signs[0] = signs[1]
    mags = [abs(x) for x in sp]
    out: list[int] = []
    i = 0
    while i < len(mags):
        j = i
        while j + 1 < len(mags) and signs[j + 1] == signs[i]:
            j += 1
        out.extend(signs[i] * m for m in sorted(mags[i : j + 1]))
        i = j + 1
    return tuple(out)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    signs: tuple[int, ...]

    def index_of(self, vertex: int) -> int:
        for k, blk in enumerate(self.blocks):
            if vertex in blk:
                return k
        raise DomainError(f"vertex {vertex} is in no block")


def blocks(tp: Sequence[int]) -> BlockDecomposition:
    """Maximal constant-sign runs of a threshold pair, in order."""
    if not is_threshold_pair(tp):
        raise DomainError(f"{list(tp)} is not a threshold pair in standard form")
    out: list[frozenset[int]] = []
    signs: list[int] = []
    run: list[int] = []
    for i, e in enumerate(tp):
        s = 1 if e > 0 else -1
        if i and s != signs[-1]:
            out.append(frozenset(run))
            run = []
        if not run:
            signs.append(s)
        run.append(abs(e))
    out.append(frozenset(run))
    return BlockDecomposition(tuple(out), tuple(signs))
