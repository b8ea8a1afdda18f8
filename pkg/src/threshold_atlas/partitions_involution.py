"""Signed ordered partitions, their representations, and the counts N(n, j).

A representation is a sequence of disjoint parts with one sign per part.
The first sign is the sign of the whole partition; every later sign is a
binary operator: ``+`` glues a part onto the block before it, ``-`` starts a
new block.  So ``-{2}-{3}+{1}+{4}`` represents the signed ordered partition
``-{2}{1,3,4}``.

The standard representation writes each block as ascending singletons
joined by ``+``; reading off its singletons with their signs gives a
normal permutation, and every normal permutation arises this way once.

The sign-reversing involution pairs off all non-standard representations,
which turns the alternating count over representations into N(n, j).  The
(b, pi) insertion map then accounts for the normal permutations that are
not threshold permutations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator, Sequence

from threshold_atlas.errors import DomainError, FixedPointError
from threshold_atlas.exactmath import a_coeff, stirling2
from threshold_atlas.signed_permutations import SignedPermutation, is_normal, odd_cycle_count
from threshold_atlas.threshold_bijections import is_threshold_perm, ordered_set_partitions


@dataclass(frozen=True)
class SignedOrderedPartition:
    blocks: tuple[frozenset[int], ...]
    sign: int

    def __str__(self) -> str:
        body = "".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return ("+" if self.sign > 0 else "-") + body


@dataclass(frozen=True)
class Representation:
    parts: tuple[frozenset[int], ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != len(self.signs):
            raise DomainError("a representation needs exactly one sign per part")
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("representation signs must be +1 or -1")
        if any(not p for p in self.parts):
            raise DomainError("representation parts must be nonempty")

    @classmethod
    def parse(cls, text: str) -> Representation:
        """Read the ``-{2}-{3}+{1,4}`` notation."""
        found = re.findall(r"([+-])\s*\{([^}]*)\}", text)
        if not found or re.sub(r"([+-])\s*\{([^}]*)\}|\s", "", text):
            raise DomainError(f"cannot parse representation {text!r}")
        parts = tuple(frozenset(int(x) for x in body.split(",")) for _, body in found)
        return cls(parts, tuple(1 if s == "+" else -1 for s, _ in found))

    def __str__(self) -> str:
        return "".join(
            ("+" if s > 0 else "-") + "{" + ",".join(map(str, sorted(p))) + "}" for p, s in zip(self.parts, self.signs)
        )

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def sections(self) -> list[tuple[int, int]]:
        """Index ranges of the parts belonging to each block."""
        starts = [i for i, s in enumerate(self.signs) if i == 0 or s < 0]
        return list(zip(starts, starts[1:] + [len(self.parts)]))

    def partition(self) -> SignedOrderedPartition:
        blocks = tuple(frozenset().union(*self.parts[a:b]) for a, b in self.sections())
        return SignedOrderedPartition(blocks, self.signs[0])


def is_standard(rep: Representation) -> bool:
    if any(len(p) != 1 for p in rep.parts):
        return False
    for i in range(1, len(rep.parts)):
        if rep.signs[i] > 0 and min(rep.parts[i - 1]) > min(rep.parts[i]):
            return False
    return True


def enumerate_representations(n: int) -> Iterator[Representation]:
    """Every representation of every signed ordered partition of [n], once each.

    A representation is an ordered set partition of [n] into parts plus a
    free sign per part, so there are sum_m m! S(n, m) 2^m of them.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    for parts in ordered_set_partitions(tuple(range(1, n + 1))):
        fparts = tuple(frozenset(p) for p in parts)
        for signs in product((1, -1), repeat=len(parts)):
            yield Representation(fparts, signs)


def representation_count(n: int) -> int:
    return sum(factorial(m) * stirling2(n, m) * 2**m for m in range(n + 1))


def standard_representation(sop: SignedOrderedPartition) -> Representation:
    parts: list[frozenset[int]] = []
    signs: list[int] = []
    for k, block in enumerate(sop.blocks):
        for i, x in enumerate(sorted(block)):
            parts.append(frozenset((x,)))
            signs.append((sop.sign if k == 0 else -1) if i == 0 else 1)
    return Representation(tuple(parts), tuple(signs))


def rep_to_normal_perm(rep: Representation) -> SignedPermutation:
    if not is_standard(rep):
        raise DomainError(f"{rep} is not a standard representation")
    return tuple(s * next(iter(p)) for p, s in zip(rep.parts, rep.signs))


def normal_perm_to_rep(sp: Sequence[int]) -> Representation:
    if not is_normal(sp):
        raise DomainError(f"{list(sp)} is not a normal permutation")
    return Representation(tuple(frozenset((abs(e),)) for e in sp), tuple(1 if e > 0 else -1 for e in sp))


def rep_odd_cycle_count(rep: Representation) -> int:
    """Odd cycles, comparing parts by their least elements."""
    return odd_cycle_count([s * min(p) for p, s in zip(rep.parts, rep.signs)])


def rep_to_partition_pair(rep: Representation) -> tuple[tuple[frozenset[int], ...], SignedPermutation]:
    """Split a k-part representation into a set partition and a signed permutation of [k].

    Parts are numbered by their least elements; the signed permutation lists
    those numbers in representation order with each part's sign.
    """
    ordered = tuple(sorted(rep.parts, key=min))
    index = {p: i + 1 for i, p in enumerate(ordered)}
    return ordered, tuple(s * index[p] for p, s in zip(rep.parts, rep.signs))


def partition_pair_to_rep(blocks: Sequence[frozenset[int]], sp: Sequence[int]) -> Representation:
    ordered = sorted((frozenset(b) for b in blocks), key=min)
    if len(ordered) != len(sp):
        raise DomainError("signed permutation size must match the number of parts")
    return Representation(tuple(ordered[abs(e) - 1] for e in sp), tuple(1 if e > 0 else -1 for e in sp))


def involution(rep: Representation) -> Representation:
    """Match a non-standard representation with one having one part more or fewer.

    In the first block not written as ascending singletons, take the
    smallest element a_i out of place.  If it sits in a part of size > 1 it
    is split off right after that part; otherwise it is a singleton and is
    merged into the part before it.
    """
    parts = list(rep.parts)
    signs = list(rep.signs)
    for start, end in rep.sections():
        sec = parts[start:end]
        elems = sorted(frozenset().union(*sec))
        if all(len(p) == 1 for p in sec) and [min(p) for p in sec] == elems:
            continue
        i = next(k for k in range(len(elems)) if k >= len(sec) or sec[k] != frozenset((elems[k],)))
        a = elems[i]
        r = start + next(k for k, p in enumerate(sec) if a in p)
        if len(parts[r]) > 1:
            parts[r] = parts[r] - {a}
            parts.insert(r + 1, frozenset((a,)))
            signs.insert(r + 1, 1)
        else:
            parts[r - 1] = parts[r - 1] | {a}
            del parts[r]
            del signs[r]
        return Representation(tuple(parts), tuple(signs))
    raise FixedPointError(f"{rep} is standard; the involution fixes it")


def normal_count_formula(n: int, j: int) -> int:
    """N(n, j) = sum_k (-1)^(n-k) S(n, k) a(k, j)."""
    if n < 0 or j < 0 or j > n:
        raise DomainError(f"normal_count_formula({n}, {j}) needs 0 <= j <= n")
    return sum((-1) ** (n - k) * stirling2(n, k) * a_coeff(k, j) for k in range(j, n + 1))


def threshold_perm_count(n: int, j: int) -> int:
    """Threshold permutations of size n with j odd cycles: N(n, j) - n N(n-1, j)."""
    if n < 2 or j < 0 or j > n:
        raise DomainError(f"threshold_perm_count({n}, {j}) needs n >= 2 and 0 <= j <= n")
    prev = normal_count_formula(n - 1, j) if j <= n - 1 else 0
    return normal_count_formula(n, j) - n * prev


def threshold_perm_count_expanded(n: int, j: int) -> int:
    """The same number as one alternating sum with weights S(n,k) + n S(n-1,k)."""
    if n < 2 or j < 0 or j > n:
        raise DomainError(f"threshold_perm_count({n}, {j}) needs n >= 2 and 0 <= j <= n")
    total = 0
    for k in range(j, n + 1):
        weight = stirling2(n, k) + (n * stirling2(n - 1, k) if k <= n - 1 else 0)
        total += (-1) ** (n - k) * weight * a_coeff(k, j)
    return total


@dataclass(frozen=True)
class SpecialPair:
    """A special number ``b`` in [n] and a normal permutation ``pi`` of [n-1]."""

    b: int
    pi: SignedPermutation

    def __post_init__(self) -> None:
        n = len(self.pi) + 1
        if not 1 <= self.b <= n:
            raise DomainError(f"special number {self.b} is not in [1..{n}]")
        if not is_normal(self.pi):
            raise DomainError(f"{list(self.pi)} is not a normal permutation")

    @property
    def n(self) -> int:
        return len(self.pi) + 1

    def relabeled(self) -> SignedPermutation:
        """``pi`` carried onto [n] minus {b} by the order-preserving bijection."""
        return tuple(e + (1 if e > 0 else -1) if abs(e) >= self.b else e for e in self.pi)

    @classmethod
    def from_relabeled(cls, b: int, entries: Sequence[int]) -> SpecialPair:
        """Build from ``pi`` already written on [n] minus {b}."""
        if any(abs(e) == b for e in entries):
            raise DomainError(f"{list(entries)} contains the special number {b}")
        return cls(b, tuple(e - (1 if e > 0 else -1) if abs(e) > b else e for e in entries))


def lemma_bijection_forward(p: SpecialPair) -> SignedPermutation:
    """Insert the special number in front of pi.

    * b = 1: prepend +1;
    * 1 < b < a_1: prepend b with a_1's sign, then make a_1 positive;
    * b > a_1: prepend b with the sign opposite to a_1's, then make a_1 negative.
    """
    rest = p.relabeled()
    b = p.b
    if b == 1:
        return (1,) + rest
    a1 = rest[0]
    if b < abs(a1):
        return (b if a1 > 0 else -b, abs(a1)) + rest[1:]
    return (-b if a1 > 0 else b, -abs(a1)) + rest[1:]


def lemma_bijection_inverse(sp: Sequence[int]) -> SpecialPair:
    sp = tuple(sp)
    if len(sp) < 2 or not is_normal(sp):
        raise DomainError(f"{list(sp)} is not a normal permutation of size >= 2")
    if is_threshold_perm(sp):
        raise DomainError(f"{list(sp)} is a threshold permutation, so it is not in the image")
    first, second = sp[0], sp[1]
    b = abs(first)
    if first == 1:
        rest = sp[1:]
    elif b > abs(second):
        # b was written with the sign opposite to a_1's
        rest = ((abs(second) if first < 0 else -abs(second)),) + sp[2:]
    else:
        # 1 < b < a_1 and a_1 carries +: a_1 originally had b's sign
        rest = ((abs(second) if first > 0 else -abs(second)),) + sp[2:]
    return SpecialPair.from_relabeled(b, rest)
