"""Signed permutations, their compartments and odd cycles.

A signed permutation of [n] is stored as a plain tuple of nonzero ints:
the magnitude of entry i is pi_i and its sign is w_i, so ``(3, 1, -6)``
means 3 and 1 carry ``+`` and 6 carries ``-``.  Tuples keep the exhaustive
scans (up to about a million objects) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from threshold_atlas.distribution import DistributionTable
from threshold_atlas.errors import DomainError

SignedPermutation = tuple[int, ...]


def check_signed(entries: Sequence[int]) -> SignedPermutation:
    """Validate and normalize ``entries`` into a signed permutation."""
    sp = tuple(int(e) for e in entries)
    if 0 in sp:
        raise DomainError("signed permutation entries must be nonzero")
    if sorted(abs(e) for e in sp) != list(range(1, len(sp) + 1)):
        raise DomainError(f"magnitudes of {list(sp)} are not a permutation of [1..{len(sp)}]")
    return sp


def magnitudes(sp: SignedPermutation) -> tuple[int, ...]:
    return tuple(abs(e) for e in sp)


def format_signed(sp: Sequence[int]) -> str:
    """Human form with explicit signs, e.g. ``-2 -3 +5``."""
    return " ".join(f"{e:+d}" for e in sp)


@dataclass(frozen=True)
class CycleStructure:
    """Signed cycles of a signed permutation.

    Each cycle is a tuple of arrows ``(src, dst, sign)`` on magnitudes; the
    sign on an arrow is the sign assigned to the number it points to.
    ``compartments`` keeps the linear segments the cycles were cut from,
    when known.
    """

    cycles: tuple[tuple[tuple[int, int, int], ...], ...]
    compartments: tuple[SignedPermutation, ...] = ()

    def odd_count(self) -> int:
        return sum(1 for cyc in self.cycles if sum(1 for *_, s in cyc if s < 0) % 2)


def compartment_bounds(sp: Sequence[int]) -> list[tuple[int, int]]:
    """Half-open index ranges of the compartments of ``sp``.

    A cut goes right after every entry whose magnitude is smaller than all
    magnitudes that follow it, which is the same as repeatedly cutting after
    the minimum of the remaining suffix.
    """
    ends = []
    running = None
    for i in range(len(sp) - 1, -1, -1):
        m = abs(sp[i])
        if running is None or m < running:
            ends.append(i)
            running = m
    ends.reverse()
    bounds = []
    start = 0
    for e in ends:
        bounds.append((start, e + 1))
        start = e + 1
    return bounds


def compartments(sp: Sequence[int]) -> list[SignedPermutation]:
    return [tuple(sp[a:b]) for a, b in compartment_bounds(sp)]


def compartmentalize(sp: SignedPermutation) -> CycleStructure:
    comps = compartments(sp)
    cycles = []
    for comp in comps:
        k = len(comp)
        cycles.append(
            tuple((abs(comp[i]), abs(comp[(i + 1) % k]), 1 if comp[(i + 1) % k] > 0 else -1) for i in range(k))
        )
    return CycleStructure(tuple(cycles), tuple(comps))


def odd_cycle_count(sp: Sequence[int]) -> int:
    """Number of compartments holding an odd number of negative entries."""
    odd = 0
    running = None
    parity = 0
    # walk right to left; a compartment closes (reading leftwards) when the
    # next entry to the left is a new suffix minimum
    for i in range(len(sp) - 1, -1, -1):
        e = sp[i]
        m = e if e > 0 else -e
        if running is None or m < running:
            odd += parity
            parity = 0
            running = m
        if e < 0:
            parity ^= 1
    return odd + parity


def permutation_from_cycles(cs: CycleStructure) -> SignedPermutation:
    """Rebuild the signed permutation from its signed cycles.

    Cycles are emptied in increasing order of their minima; each one is
    written starting from the number its minimum points to and ending with
    the minimum itself.
    """
    succ: dict[int, tuple[int, int]] = {}
    owner: dict[int, int] = {}
    for idx, cyc in enumerate(cs.cycles):
        if not cyc:
            raise DomainError("empty cycle")
        for src, dst, sign in cyc:
            if sign not in (1, -1):
                raise DomainError(f"arrow sign {sign!r} is not +1 or -1")
            if src in succ:
                raise DomainError(f"{src} has two outgoing arrows")
            succ[src] = (dst, sign)
            owner[src] = idx
    n = len(succ)
    if set(succ) != set(range(1, n + 1)) or sorted(d for d, _ in succ.values()) != list(range(1, n + 1)):
        raise DomainError("cycle supports do not cover [n] disjointly")
    for src, (dst, _) in succ.items():
        if owner[dst] != owner[src]:
            raise DomainError(f"arrow {src}->{dst} leaves its cycle")
    sign_of = {dst: sign for dst, sign in succ.values()}
    out: list[int] = []
    done: set[int] = set()
    for m in range(1, n + 1):
        if m in done:
            continue
        x = succ[m][0]
        seg = []
        while True:
            seg.append(x * sign_of[x])
            done.add(x)
            if x == m:
                break
            x = succ[x][0]
        out.extend(seg)
    return tuple(out)


def enumerate_signed(n: int, prefix: Sequence[int] = ()) -> Iterator[SignedPermutation]:
    """All 2^n n! signed permutations of [n].

    Order: lexicographic in the magnitude sequence, then in the sign pattern
    with ``+`` before ``-``.  ``prefix`` restricts the stream to magnitude
    sequences starting with the given magnitudes, so disjoint prefixes split
    the work for parallel consumers.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    for perm in _perms_with_prefix(n, prefix):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * p for s, p in zip(signs, perm))


def _perms_with_prefix(n: int, prefix: Sequence[int]) -> Iterator[tuple[int, ...]]:
    head = tuple(abs(int(p)) for p in prefix)
    if len(set(head)) != len(head) or any(not 1 <= h <= n for h in head):
        raise DomainError(f"invalid prefix {list(prefix)} for n={n}")
    rest = [i for i in range(1, n + 1) if i not in head]
    for tail in permutations(rest):
        yield head + tail


def is_normal(sp: Sequence[int]) -> bool:
    """Every positive entry after the first exceeds its predecessor in magnitude."""
    for i in range(1, len(sp)):
        if sp[i] > 0 and sp[i] < abs(sp[i - 1]):
            return False
    return True


def enumerate_normal(n: int, prefix: Sequence[int] = ()) -> Iterator[SignedPermutation]:
    """Normal permutations of [n], in the same order as :func:`enumerate_signed`.

    Generated directly: at descent positions the sign is forced to ``-``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    for perm in _perms_with_prefix(n, prefix):
        choices = [(1, -1)] if n else []
        for i in range(1, n):
            choices.append((1, -1) if perm[i] > perm[i - 1] else (-1,))
        for signs in product(*choices):
            yield tuple(s * p for s, p in zip(signs, perm))


def odd_cycle_distribution(perms: Iterable[Sequence[int]], n: int | None = None) -> DistributionTable:
    """Histogram ``{j: count}`` of odd-cycle counts over ``perms``."""
    return DistributionTable.of((odd_cycle_count(sp) for sp in perms), n, "odd-cycles")
