"""Sharded evaluation of the odd-cycle and odd-anchor distributions.

The threshold pairs of size n are split by their first block; each shard
is histogrammed independently and the tables are summed.  Addition of
tables is associative and commutative, so the result does not depend on
the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from threshold_atlas.distribution import DistributionTable
from threshold_atlas.signed_permutations import odd_cycle_count
from threshold_atlas.threshold_bijections import enumerate_threshold_pairs, first_blocks, pair_to_threshold_perm
from threshold_atlas.threshold_graphs import apply_convention, odd_anchor_count

STATISTICS = ("odd-cycles", "odd-anchors")
JOBS_ENV = "THRESHOLD_ATLAS_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _shard(n: int, statistic: str, head: Sequence[int]) -> dict[int, int]:
    pairs = enumerate_threshold_pairs(n, head)
    if statistic == "odd-cycles":
        values = (odd_cycle_count(pair_to_threshold_perm(tp)) for tp in pairs)
    else:
        values = (odd_anchor_count(apply_convention(tp)) for tp in pairs)
    return DistributionTable.of(values).counts


def statistic_distribution(n: int, statistic: str, jobs: int = 1) -> DistributionTable:
    """Distribution of ``statistic`` over the labeled threshold graphs on [n].

    ``odd-cycles`` reads each graph as its threshold permutation,
    ``odd-anchors`` as its canonical convention-following construction.
    """
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    heads = first_blocks(n)
    total = DistributionTable({}, n, statistic)
    if jobs <= 1:
        for head in heads:
            total = total + DistributionTable(_shard(n, statistic, head))
        return total
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for counts in pool.map(_shard, [n] * len(heads), [statistic] * len(heads), heads):
            total = total + DistributionTable(counts)
    return total
