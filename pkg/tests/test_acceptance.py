"""Acceptance suite: one test per criterion, exact integer equality, timed.

Each test prints ``PASS``/``FAIL`` with its wall time; the same lines are
repeated in the pytest terminal summary.  Run directly with
``python tests/test_acceptance.py`` for the report alone.
"""

from __future__ import annotations

import subprocess
import sys
import time
from collections import Counter
from functools import wraps
from math import factorial

from threshold_atlas import known_values as kv
from threshold_atlas.arrangements import (
    charpoly_finite_field,
    charpoly_threshold_formula,
    edge_rule_check,
    region_count,
    region_count_identities,
    threshold_arrangement,
    typeb_arrangement,
)
from threshold_atlas.exactmath import a_coeff, a_coeff_cycle_sum, falling_odd_product, rising_odd_product
from threshold_atlas.partitions_involution import (
    SpecialPair,
    enumerate_representations,
    involution,
    is_standard,
    lemma_bijection_forward,
    normal_count_formula,
    rep_odd_cycle_count,
)
from threshold_atlas.signed_permutations import (
    enumerate_normal,
    enumerate_signed,
    is_normal,
    odd_cycle_count,
    odd_cycle_distribution,
)
from threshold_atlas.threshold_bijections import enumerate_threshold_pairs, is_threshold_perm, pair_to_threshold_perm
from threshold_atlas.threshold_graphs import (
    apply_convention,
    canonical_pair,
    constructions_by_graph,
    graph_from_construction,
    odd_anchor_count,
    odd_anchor_distribution,
)
from threshold_atlas.errors import FixedPointError

REPORT: list[str] = []


def criterion(name: str, limit: float):
    def wrap(fn):
        @wraps(fn)
        def run():
            start = time.perf_counter()
            error = None
            try:
                fn()
            except AssertionError as exc:
                error = exc
            elapsed = time.perf_counter() - start
            ok = error is None and elapsed < limit
            why = "" if ok else f"  [{error or f'over the {limit:g} s limit'}]"
            line = f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f} s, limit {limit:g} s){why}"
            REPORT.append(line)
            print(line)
            if error is not None:
                raise error
            assert elapsed < limit, f"{name} took {elapsed:.2f} s, limit {limit:g} s"

        return run

    return wrap


def abs_coeffs(n: int) -> dict[int, int]:
    return {j: abs(c) for j, c in enumerate(charpoly_threshold_formula(n).coeffs)}


@criterion("published polynomials and region counts, n = 2..10", 1)
def test_table_one():
    for n in range(2, 11):
        p = charpoly_threshold_formula(n)
        assert tuple(reversed(p.coeffs)) == kv.THRESHOLD_CHARPOLY_DESC[n], n
        assert region_count(p) == kv.THRESHOLD_REGIONS[n], n
    assert region_count(charpoly_threshold_formula(10)) == 62_749_906


@criterion("finite field count = closed form (threshold n <= 6, type B n <= 4)", 120)
def test_finite_field():
    for n in range(2, 7):
        assert charpoly_finite_field(threshold_arrangement(n)) == charpoly_threshold_formula(n), n
    for n in range(1, 5):
        assert charpoly_finite_field(typeb_arrangement(n)) == falling_odd_product(n), n


@criterion("odd-cycle histogram of threshold permutations = |coefficients|, n = 2..8", 60)
def test_odd_cycle_theorem():
    seen = 0
    for n in range(2, 9):
        hist = Counter()
        for tp in enumerate_threshold_pairs(n):
            hist[odd_cycle_count(pair_to_threshold_perm(tp))] += 1
        seen = sum(hist.values())
        assert dict(hist) == {j: c for j, c in abs_coeffs(n).items() if c}, n
    assert seen == 334_982


@criterion("odd-anchor distribution = |coefficients|, n = 2..8; small graph tables row-exact", 120)
def test_odd_anchor_theorem():
    for n in range(2, 9):
        assert odd_anchor_distribution(n) == {j: c for j, c in abs_coeffs(n).items() if c}, n
    for rows in (kv.GRAPHS_SIZE_2, kv.GRAPHS_SIZE_3):
        size = len(rows[0][0])
        published = sorted((c, tuple(e), odd) for c, e, odd in rows)
        ours = []
        for tp in enumerate_threshold_pairs(size):
            c = apply_convention(tp)
            ours.append((c, tuple(graph_from_construction(c).sorted_edges()), odd_anchor_count(c)))
        assert sorted(ours) == published, size


@criterion("odd-anchor count is the same for every construction, n <= 6", 10)
def test_invariance():
    scanned = 0
    for n in range(1, 7):
        scanned = sum(1 for _ in enumerate_signed(n))
        for g, cs in constructions_by_graph(n).items():
            assert len({odd_anchor_count(c) for c in cs}) == 1, g
    assert scanned == 2**6 * factorial(6) == 46_080


@criterion("a(n,j) formula = recurrence = enumeration, n <= 7; row sums 2^n n!", 30)
def test_a_coeff_triple():
    for n in range(0, 8):
        hist = odd_cycle_distribution(enumerate_signed(n))
        product = rising_odd_product(n)
        for j in range(n + 1):
            assert a_coeff(n, j) == a_coeff_cycle_sum(n, j) == product.coefficient(j) == hist[j], (n, j)
        assert sum(a_coeff(n, j) for j in range(n + 1)) == 2**n * factorial(n)


@criterion("N(n,j) = enumeration (n <= 7); involution exhaustive (n <= 5)", 30)
def test_normal_counts_and_involution():
    for n in range(1, 8):
        hist = Counter(odd_cycle_count(p) for p in enumerate_normal(n))
        assert all(hist[j] == normal_count_formula(n, j) for j in range(n + 1)), n
    reps = 0
    for n in range(1, 6):
        for r in enumerate_representations(n):
            reps += n == 5
            if is_standard(r):
                try:
                    involution(r)
                except FixedPointError:
                    continue
                raise AssertionError(f"standard {r} is not fixed")
            s = involution(r)
            assert not is_standard(s) and involution(s) == r, r
            assert (len(s.parts) - len(r.parts)) % 2 == 1, r
            assert rep_odd_cycle_count(s) == rep_odd_cycle_count(r), r
    assert reps == 9_002


@criterion("(b, pi) map: bijection onto normal non-threshold permutations, n <= 6", 30)
def test_lemma_bijection():
    for n in range(2, 7):
        pairs = [SpecialPair(b, pi) for b in range(1, n + 1) for pi in enumerate_normal(n - 1)]
        image = [lemma_bijection_forward(p) for p in pairs]
        assert len(set(image)) == len(image), n
        assert set(image) == {sp for sp in enumerate_normal(n) if not is_threshold_perm(sp)}, n
        for p, sp in zip(pairs, image):
            assert is_normal(sp) and odd_cycle_count(sp) == odd_cycle_count(p.pi), (p, sp)


@criterion("region dictionary: edge rule and canonical_pair round trip, n <= 7", 60)
def test_region_dictionary():
    for n in range(2, 8):
        for tp in enumerate_threshold_pairs(n):
            assert edge_rule_check(tp), tp
            assert canonical_pair(graph_from_construction(tp)) == tp, tp


@criterion("region-count identities agree with Zaslavsky evaluation, n <= 15", 1)
def test_region_identities():
    for n in range(2, 16):
        bell_form, euler_form = region_count_identities(n)
        assert bell_form == euler_form == region_count(charpoly_threshold_formula(n)), n


def _cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "threshold_atlas", *args], capture_output=True)


@criterion("verify --max-n 8 exits 0; tables byte-stable across two runs", 180)
def test_cli_verify_and_tables():
    proc = _cli("verify", "--max-n", "8")
    assert proc.returncode == 0, proc.stdout.decode()[-2000:]
    for which in ("1", "2", "3", "2g", "3g"):
        first, second = _cli("table", "--which", which), _cli("table", "--which", which)
        assert first.returncode == second.returncode == 0, which
        assert first.stdout == second.stdout and first.stdout, which


if __name__ == "__main__":
    failed = 0
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_")]:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
