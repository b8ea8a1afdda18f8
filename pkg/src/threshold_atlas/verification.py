"""Cross-module consistency checks driven by ``threshold-atlas verify``.

Every check takes ``max_n`` and runs up to ``min(its own bound, max_n)``.
A check returns ``None`` on success or a JSON-serializable counterexample.
Functions are looked up through their modules at call time, so a patched
implementation is what gets checked.
"""

from __future__ import annotations

import json
import time
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Any, Callable, Iterator

from threshold_atlas import arrangements as arr
from threshold_atlas import exactmath as em
from threshold_atlas import known_values as kv
from threshold_atlas import partitions_involution as pi_mod
from threshold_atlas import signed_permutations as sp_mod
from threshold_atlas import threshold_bijections as tb
from threshold_atlas import threshold_graphs as tg

Counterexample = Any


@dataclass
class CheckResult:
    name: str
    passed: bool
    bound: int
    seconds: float
    counterexample: Counterexample = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name} (n <= {self.bound}, {self.seconds:.2f}s)"
        if not self.passed:
            text += "\n      counterexample: " + json.dumps(self.counterexample, default=_jsonable)
        return text


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


CHECKS: list[tuple[str, int, Callable[[int], Counterexample]]] = []


def check(name: str, bound: int) -> Callable:
    def register(fn: Callable[[int], Counterexample]) -> Callable[[int], Counterexample]:
        CHECKS.append((name, bound, fn))
        return fn

    return register


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


@check("sequences agree with object counting", 8)
def _sequences(bound: int) -> Counterexample:
    for n in range(0, bound + 1):
        blocks = Counter(len(p) for p in _set_partitions(list(range(n))))
        for k in range(n + 1):
            if em.stirling2(n, k) != blocks[k]:
                return {"stirling2": [n, k], "got": em.stirling2(n, k), "enumerated": blocks[k]}
        ordered = sum(factorial(k) * c for k, c in blocks.items())
        if em.ordered_bell(n) != ordered:
            return {"ordered_bell": n, "got": em.ordered_bell(n), "enumerated": ordered}
        cycles = Counter(_cycle_count(p) for p in permutations(range(n)))
        for k in range(n + 1):
            if em.stirling1_unsigned(n, k) != cycles[k]:
                return {"stirling1_unsigned": [n, k]}
        if n >= 1:
            descents = Counter(sum(p[i] > p[i + 1] for i in range(n - 1)) for p in permutations(range(n)))
            for k in range(n):
                if em.eulerian(n, k) != descents[k]:
                    return {"eulerian": [n, k]}
    return None


@check("a(n,j): recurrence = product coefficient = cycle sum = enumeration", 7)
def _a_coeff(bound: int) -> Counterexample:
    for n in range(0, bound + 1):
        hist = sp_mod.odd_cycle_distribution(sp_mod.enumerate_signed(n))
        rising = em.rising_odd_product(n)
        for j in range(n + 1):
            values = [em.a_coeff(n, j), rising.coefficient(j), em.a_coeff_cycle_sum(n, j), hist[j]]
            if len(set(values)) != 1:
                return {"n": n, "j": j, "recurrence/product/cycle-sum/enumerated": values}
        if sum(em.a_coeff(n, j) for j in range(n + 1)) != 2**n * factorial(n):
            return {"n": n, "total": sum(em.a_coeff(n, j) for j in range(n + 1))}
        falling = em.falling_odd_product(n)
        if any(abs(falling.coefficient(j)) != em.a_coeff(n, j) for j in range(n + 1)):
            return {"n": n, "typeb_coefficients": list(falling.coeffs)}
    return None


@check("compartments: round trip and suffix-minimum cuts", 6)
def _compartments(bound: int) -> Counterexample:
    for n in range(1, bound + 1):
        for sp in sp_mod.enumerate_signed(n):
            cs = sp_mod.compartmentalize(sp)
            if sp_mod.permutation_from_cycles(cs) != sp:
                return {"signed_permutation": sp}
            if sum(cs.compartments, ()) != sp:
                return {"signed_permutation": sp, "compartments": cs.compartments}
            offset = 0
            for comp in cs.compartments:
                offset += len(comp)
                if any(abs(comp[-1]) > abs(e) for e in sp[offset:]) or abs(comp[-1]) != min(abs(e) for e in comp):
                    return {"signed_permutation": sp, "bad_cut": comp}
            if cs.odd_count() != sp_mod.odd_cycle_count(sp):
                return {"signed_permutation": sp, "odd_cycles": [cs.odd_count(), sp_mod.odd_cycle_count(sp)]}
    return None


@check("finite field interpolation = closed forms", 6)
def _finite_field(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        got = arr.charpoly_finite_field(arr.threshold_arrangement(n))
        if got != arr.charpoly_threshold_formula(n):
            return {"family": "threshold", "n": n, "finite_field": list(got.coeffs)}
    for n in range(1, min(bound, 4) + 1):
        got = arr.charpoly_finite_field(arr.typeb_arrangement(n))
        if got != em.falling_odd_product(n):
            return {"family": "typeb", "n": n, "finite_field": list(got.coeffs)}
    return None


@check("point counts: brute force = sweep = combinatorial (q <= 13)", 5)
def _point_counts(bound: int) -> Counterexample:
    for n in range(1, bound + 1):
        a = arr.threshold_arrangement(n)
        for q in range(3, 14, 2):
            counts = [arr.count_points_mod_q(a, q, m).count for m in ("brute", "sweep", "formula")]
            if len(set(counts)) != 1:
                return {"n": n, "q": q, "brute/sweep/formula": counts}
    return None


@check("closed form: published table, sign pattern, Zaslavsky count", 10)
def _closed_form(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        p = arr.charpoly_threshold_formula(n)
        if p.coeffs != kv.charpoly_low_to_high(n):
            return {"n": n, "formula": list(p.coeffs)}
        if any(p.coeffs[i] * (-1) ** (n - i) < 0 for i in range(n + 1)):
            return {"n": n, "sign_pattern": list(p.coeffs)}
        if arr.region_count(p) != kv.THRESHOLD_REGIONS[n]:
            return {"n": n, "regions": arr.region_count(p)}
        for j in range(n + 1):
            if arr.threshold_coefficient(n, j) != p.coefficient(j):
                return {"n": n, "j": j, "corollary": arr.threshold_coefficient(n, j)}
    return None


@check("region-count identities agree with Zaslavsky", 15)
def _identities(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        bell, euler = arr.region_count_identities(n)
        z = arr.region_count(arr.charpoly_threshold_formula(n))
        if not bell == euler == z:
            return {"n": n, "ordered_bell/eulerian/zaslavsky": [bell, euler, z]}
    return None


@check("threshold pairs: count, pair <-> permutation bijection, image", 8)
def _pairs(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        pairs = set()
        perms = set()
        for tp in tb.enumerate_threshold_pairs(n):
            if not tb.is_threshold_pair(tp) or tp in pairs:
                return {"bad_or_repeated_pair": tp}
            pairs.add(tp)
            tperm = tb.pair_to_threshold_perm(tp)
            if not tb.is_threshold_perm(tperm):
                return {"pair": tp, "image_not_threshold_perm": tperm}
            if tb.threshold_perm_to_pair(tperm) != tp:
                return {"pair": tp, "round_trip": tb.threshold_perm_to_pair(tperm)}
            perms.add(tperm)
        regions = arr.region_count(arr.charpoly_threshold_formula(n))
        if len(pairs) != regions:
            return {"n": n, "pairs": len(pairs), "regions": regions}
        # every threshold permutation is normal, so filtering normal ones finds them all
        filtered = {sp for sp in sp_mod.enumerate_normal(n) if tb.is_threshold_perm(sp)}
        if filtered != perms:
            return {"n": n, "missing_from_image": sorted(filtered - perms)[:1], "extra": sorted(perms - filtered)[:1]}
    return None


@check("standardize: idempotent, lands on pairs, preserves the graph", 6)
def _standardize(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        for sp in sp_mod.enumerate_signed(n):
            tp = tb.standardize(sp)
            if not tb.is_threshold_pair(tp) or tb.standardize(tp) != tp:
                return {"input": sp, "standardized": tp}
            if tg.graph_from_construction(sp) != tg.graph_from_construction(tp):
                return {"input": sp, "standardized": tp, "graph_changed": True}
    return None


@check("blocks: first block has size >= 2, blocks ascend", 7)
def _blocks(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        for tp in tb.enumerate_threshold_pairs(n):
            bd = tb.blocks(tp)
            if len(bd.blocks[0]) < 2 or [x for b in bd.blocks for x in sorted(b)] != [abs(e) for e in tp]:
                return {"pair": tp, "blocks": [sorted(b) for b in bd.blocks]}
    return None


@check("odd-cycle theorem over threshold permutations", 8)
def _odd_cycles(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        hist = sp_mod.odd_cycle_distribution(sp for sp in sp_mod.enumerate_normal(n) if tb.is_threshold_perm(sp))
        coeffs = arr.charpoly_threshold_formula(n)
        for j in range(n + 1):
            expected = abs(coeffs.coefficient(j))
            if hist[j] != expected or pi_mod.threshold_perm_count(n, j) != expected:
                return {"n": n, "j": j, "enumerated": hist[j], "formula": pi_mod.threshold_perm_count(n, j), "coefficient": expected}
    return None


@check("odd-anchor theorem and statistic transport", 8)
def _odd_anchors(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        hist: Counter = Counter()
        for tp in tb.enumerate_threshold_pairs(n):
            k = tg.odd_anchor_count(tg.apply_convention(tp))
            if k != sp_mod.odd_cycle_count(tb.pair_to_threshold_perm(tp)):
                return {"pair": tp, "odd_anchors": k, "odd_cycles": sp_mod.odd_cycle_count(tb.pair_to_threshold_perm(tp))}
            hist[k] += 1
        coeffs = arr.charpoly_threshold_formula(n)
        if any(hist[j] != abs(coeffs.coefficient(j)) for j in range(n + 1)):
            return {"n": n, "odd_anchor_histogram": dict(hist)}
    return None


@check("odd anchors do not depend on the construction", 6)
def _invariance(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        for g, cons in tg.constructions_by_graph(n).items():
            counts = {tg.odd_anchor_count(c) for c in cons}
            if len(counts) != 1:
                return {"graph": json.loads(g.to_json()), "constructions": cons[:4], "counts": sorted(counts)}
            if tg.apply_convention(tg.canonical_pair(g)) not in cons:
                return {"graph": json.loads(g.to_json()), "canonical_construction_missing": True}
    return None


@check("region dictionary: edge rule and canonical pair round trip", 7)
def _regions(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        for tp in tb.enumerate_threshold_pairs(n):
            if not arr.edge_rule_check(tp):
                return {"pair": tp, "edge_rule": False}
            g = tg.graph_from_construction(tp)
            if not tg.is_threshold_graph(g):
                return {"pair": tp, "not_threshold_graph": json.loads(g.to_json())}
            if tg.canonical_pair(g) != tp:
                return {"pair": tp, "canonical_pair": tg.canonical_pair(g)}
    return None


@check("involution on representations", 5)
def _involution(bound: int) -> Counterexample:
    for n in range(1, bound + 1):
        signed: Counter = Counter()
        standard: Counter = Counter()
        by_partition: dict = defaultdict(set)
        total = 0
        for rep in pi_mod.enumerate_representations(n):
            total += 1
            j = pi_mod.rep_odd_cycle_count(rep)
            signed[j] += (-1) ** (n - len(rep.parts))
            by_partition[rep.partition()].add(j)
            if pi_mod.is_standard(rep):
                standard[j] += 1
                if pi_mod.standard_representation(rep.partition()) != rep:
                    return {"standard_rep": str(rep)}
                continue
            other = pi_mod.involution(rep)
            if (
                pi_mod.involution(other) != rep
                or abs(len(other.parts) - len(rep.parts)) != 1
                or other.partition() != rep.partition()
                or pi_mod.rep_odd_cycle_count(other) != j
                or pi_mod.is_standard(other)
            ):
                return {"representation": str(rep), "image": str(other)}
        if total != pi_mod.representation_count(n):
            return {"n": n, "representations": total}
        if any(len(js) != 1 for js in by_partition.values()):
            return {"n": n, "partition_with_mixed_odd_cycles": True}
        for j in range(n + 1):
            if not signed[j] == standard[j] == pi_mod.normal_count_formula(n, j):
                return {"n": n, "j": j, "signed_sum": signed[j], "standard": standard[j]}
    return None


@check("representation <-> (set partition, signed permutation)", 4)
def _partition_pairs(bound: int) -> Counterexample:
    for n in range(1, bound + 1):
        for rep in pi_mod.enumerate_representations(n):
            blocks, sp = pi_mod.rep_to_partition_pair(rep)
            if pi_mod.partition_pair_to_rep(blocks, sp) != rep:
                return {"representation": str(rep)}
            if sp_mod.odd_cycle_count(sp) != pi_mod.rep_odd_cycle_count(rep):
                return {"representation": str(rep), "signed_permutation": sp}
    return None


@check("N(n,j) formula = normal permutation enumeration", 7)
def _normal(bound: int) -> Counterexample:
    for n in range(1, bound + 1):
        hist = sp_mod.odd_cycle_distribution(sp_mod.enumerate_normal(n))
        for j in range(n + 1):
            if hist[j] != pi_mod.normal_count_formula(n, j):
                return {"n": n, "j": j, "enumerated": hist[j], "formula": pi_mod.normal_count_formula(n, j)}
        if n <= 5:
            for sp in sp_mod.enumerate_normal(n):
                if pi_mod.rep_to_normal_perm(pi_mod.normal_perm_to_rep(sp)) != sp:
                    return {"normal_permutation": sp}
    return None


@check("threshold permutation counts = coefficients (formula to formula)", 12)
def _formula_counts(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        for j in range(n + 1):
            values = [
                pi_mod.threshold_perm_count(n, j),
                pi_mod.threshold_perm_count_expanded(n, j),
                abs(arr.threshold_coefficient(n, j)),
            ]
            if len(set(values)) != 1:
                return {"n": n, "j": j, "values": values}
    return None


@check("(b, pi) bijection onto normal non-threshold permutations", 6)
def _lemma(bound: int) -> Counterexample:
    for n in range(2, bound + 1):
        image = set()
        for b in range(1, n + 1):
            for perm in sp_mod.enumerate_normal(n - 1):
                pair = pi_mod.SpecialPair(b, perm)
                sp = pi_mod.lemma_bijection_forward(pair)
                if sp in image or not sp_mod.is_normal(sp) or tb.is_threshold_perm(sp):
                    return {"b": b, "pi": perm, "image": sp}
                if sp_mod.odd_cycle_count(sp) != sp_mod.odd_cycle_count(perm):
                    return {"b": b, "pi": perm, "image": sp, "odd_cycles_changed": True}
                if pi_mod.lemma_bijection_inverse(sp) != pair:
                    return {"b": b, "pi": perm, "image": sp, "inverse": str(pi_mod.lemma_bijection_inverse(sp))}
                image.add(sp)
        target = {sp for sp in sp_mod.enumerate_normal(n) if not tb.is_threshold_perm(sp)}
        if image != target:
            return {"n": n, "not_hit": sorted(target - image)[:1]}
    return None


def run_checks(max_n: int, names: list[str] | None = None) -> Iterator[CheckResult]:
    for name, bound, fn in CHECKS:
        if names is not None and name not in names:
            continue
        cap = min(bound, max_n)
        start = time.perf_counter()
        try:
            counterexample = fn(cap)
        except Exception as exc:  # a crash is a failed invariant too
            counterexample = {"exception": f"{type(exc).__name__}: {exc}"}
        yield CheckResult(name, counterexample is None, cap, time.perf_counter() - start, counterexample)

