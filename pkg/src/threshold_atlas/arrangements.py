"""Threshold and type-B arrangements: point counts mod q, characteristic polynomials, regions.

Hyperplanes are linear forms with at most two nonzero coefficients, each
+1 or -1, so every arrangement here is a sub-arrangement of type B and the
finite field method applies for all large enough odd q.

Three routes to the characteristic polynomial are provided and are meant
to be compared against each other:

* point counts mod q (numpy brute force, or an exact memoized sweep for
  larger q) interpolated at n+1 odd moduli;
* the combinatorial count of valid maps [n] -> Z_q for the threshold case;
* the closed form as a combination of falling odd products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Sequence

import numpy as np

from threshold_atlas.errors import ConsistencyError, DomainError, SamplingError
from threshold_atlas.exactmath import (
    Polynomial,
    a_coeff,
    eulerian,
    falling_odd_product,
    lagrange_interpolate,
    ordered_bell,
    stirling2,
)
from threshold_atlas.signed_permutations import check_signed
from threshold_atlas.threshold_graphs import graph_from_construction

# (coordinate, coefficient) pairs; coordinates are 0-based, coefficients +-1
Form = tuple[tuple[int, int], ...]

BRUTE_FORCE_LIMIT = 10**8


@dataclass(frozen=True)
class Arrangement:
    n: int
    forms: tuple[Form, ...]
    name: str = ""

    def __post_init__(self) -> None:
        for form in self.forms:
            if not 1 <= len(form) <= 2:
                raise DomainError(f"form {form} must have one or two terms")
            if len({i for i, _ in form}) != len(form):
                raise DomainError(f"form {form} repeats a coordinate")
            for i, c in form:
                if not 0 <= i < self.n or c not in (1, -1):
                    raise DomainError(f"form {form} is not a type-B form in dimension {self.n}")


def threshold_arrangement(n: int) -> Arrangement:
    """Hyperplanes x_i + x_j = 0 for i < j."""
    forms = tuple(((i, 1), (j, 1)) for i, j in combinations(range(n), 2))
    return Arrangement(n, forms, "threshold")


def typeb_arrangement(n: int) -> Arrangement:
    """Hyperplanes x_i - x_j = 0, x_i + x_j = 0 and x_i = 0."""
    forms: list[Form] = []
    for i, j in combinations(range(n), 2):
        forms.append(((i, 1), (j, -1)))
        forms.append(((i, 1), (j, 1)))
    forms.extend(((i, 1),) for i in range(n))
    return Arrangement(n, tuple(forms), "typeb")


@dataclass(frozen=True)
class FiniteFieldSample:
    q: int
    count: int

    def to_csv_row(self) -> str:
        return f"{self.q},{self.count}"


def _check_modulus(q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise DomainError(f"q={q}: the finite field method needs an odd modulus >= 3")


def count_points_brute(a: Arrangement, q: int) -> int:
    """Tuples in Z_q^n on no hyperplane, by direct enumeration (numpy, chunked by x_1)."""
    _check_modulus(q)
    n = a.n
    if n == 0:
        return 1
    if n == 1:
        rest = np.zeros((1, 0), dtype=np.int64)
    else:
        grids = np.meshgrid(*[np.arange(q, dtype=np.int64)] * (n - 1), indexing="ij")
        rest = np.stack([g.ravel() for g in grids], axis=1)
    total = 0
    for x0 in range(q):
        pts = np.concatenate([np.full((rest.shape[0], 1), x0, dtype=np.int64), rest], axis=1)
        ok = np.ones(pts.shape[0], dtype=bool)
        for form in a.forms:
            val = np.zeros(pts.shape[0], dtype=np.int64)
            for i, c in form:
                val += c * pts[:, i]
            ok &= val % q != 0
        total += int(ok.sum())
    return total


def count_points_sweep(a: Arrangement, q: int) -> int:
    """Exact count by assigning coordinates left to right.

    Each form couples at most two coordinates, so once x_1..x_k are fixed the
    only thing later coordinates need is, for each of them, the set of
    residues it may not take.  Counts are memoized on that state; the last
    coordinate is counted without enumeration.
    """
    _check_modulus(q)
    n = a.n
    if n == 0:
        return 1
    # own[k]: x_k = 0 is a hyperplane; ahead[k]: pairs (t, m) meaning
    # coordinate k + t may not equal m * x_k mod q
    own: list[bool] = [False] * n
    ahead: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for form in a.forms:
        if len(form) == 1:
            own[form[0][0]] = True
            continue
        (i, ci), (k, ck) = sorted(form)
        # ci x_i + ck x_k = 0  <=>  x_k = -ci*ck x_i  (ck is its own inverse)
        ahead[i].append((k - i, -ci * ck))

    @lru_cache(maxsize=None)
    def go(k: int, forbidden: tuple[frozenset[int], ...]) -> int:
        # forbidden[t] is the forbidden residue set of coordinate k + t
        bad = (forbidden[0] | {0}) if own[k] else forbidden[0]
        if k == n - 1:
            return q - len(bad)
        total = 0
        for v in range(q):
            if v in bad:
                continue
            nxt = list(forbidden[1:])
            for t, m in ahead[k]:
                nxt[t - 1] = nxt[t - 1] | {(m * v) % q}
            total += go(k + 1, tuple(nxt))
        return total

    try:
        return go(0, tuple(frozenset() for _ in range(n)))
    finally:
        go.cache_clear()


def count_points_threshold_formula(n: int, q: int) -> int:
    """Maps f: [n] -> Z_q with f(i) + f(j) != 0 for i != j, counted combinatorially.

    At most one point goes to 0, and f meets each pair {r, -r} in at most
    one value.  With ``h = (q-1)/2`` pairs available, using exactly k of
    them gives C(h, k) 2^k k! S(., k) maps.
    """
    _check_modulus(q)
    h = (q - 1) // 2

    def no_zero(m: int) -> int:
        if m == 0:
            return 1
        return sum(comb(h, k) * 2**k * factorial(k) * stirling2(m, k) for k in range(1, m + 1))

    if n == 0:
        return 1
    return no_zero(n) + n * no_zero(n - 1)


def count_points_mod_q(a: Arrangement, q: int, method: str = "auto") -> FiniteFieldSample:
    """Points of Z_q^n off every reduced hyperplane.

    ``method`` is ``brute`` (only when n q^n <= 10^8), ``sweep``,
    ``formula`` (threshold arrangements only) or ``auto`` (brute force when
    allowed, else the sweep).
    """
    _check_modulus(q)
    if method == "auto":
        method = "brute" if a.n * q**a.n <= BRUTE_FORCE_LIMIT else "sweep"
    if method == "brute":
        if a.n * q**a.n > BRUTE_FORCE_LIMIT:
            raise DomainError(f"brute force over {q}^{a.n} tuples exceeds the enumeration budget")
        count = count_points_brute(a, q)
    elif method == "sweep":
        count = count_points_sweep(a, q)
    elif method == "formula":
        if a != threshold_arrangement(a.n):
            raise DomainError("the combinatorial count only covers the threshold arrangement")
        count = count_points_threshold_formula(a.n, q)
    else:
        raise DomainError(f"unknown counting method {method!r}")
    return FiniteFieldSample(q, count)


def sample_moduli(n: int, extra: int = 2) -> list[int]:
    """The n+1 smallest odd q > 2n, followed by ``extra`` held-out moduli."""
    q0 = 2 * n + 1
    return [q0 + 2 * i for i in range(n + 1 + extra)]


def charpoly_finite_field(a: Arrangement, method: str = "auto") -> Polynomial:
    """Characteristic polynomial interpolated from point counts mod q.

    The n+1 samples fix the polynomial; two further samples must agree with
    it, otherwise the moduli were below the range where counting is
    polynomial in q and :class:`SamplingError` is raised.
    """
    qs = sample_moduli(a.n)
    samples = [count_points_mod_q(a, q, method) for q in qs]
    fit, held = samples[: a.n + 1], samples[a.n + 1 :]
    poly = lagrange_interpolate([(s.q, s.count) for s in fit])
    if poly.degree != a.n or poly.leading != 1:
        raise SamplingError(f"interpolant {poly} is not monic of degree {a.n}")
    for s in held:
        if poly(s.q) != s.count:
            raise SamplingError(f"held-out sample q={s.q}: counted {s.count}, interpolant gives {poly(s.q)}")
    return poly


@lru_cache(maxsize=None)
def charpoly_threshold_formula(n: int) -> Polynomial:
    """sum_k (S(n,k) + n S(n-1,k)) (t-1)(t-3)...(t-(2k-1))."""
    if n < 1:
        raise DomainError("charpoly_threshold_formula needs n >= 1")
    total = Polynomial()
    for k in range(1, n + 1):
        weight = stirling2(n, k) + (n * stirling2(n - 1, k) if k <= n - 1 else 0)
        total = total + falling_odd_product(k) * weight
    return total


def threshold_coefficient(n: int, j: int) -> int:
    """Signed coefficient of t^j in the threshold characteristic polynomial."""
    if n < 1 or j < 0 or j > n:
        raise DomainError(f"threshold_coefficient({n}, {j}) needs 0 <= j <= n, n >= 1")
    total = 0
    for k in range(max(j, 1), n + 1):
        weight = stirling2(n, k) + (n * stirling2(n - 1, k) if k <= n - 1 else 0)
        total += (-1) ** (k - j) * weight * a_coeff(k, j)
    return total


def region_count(p: Polynomial, n: int | None = None) -> int:
    """Zaslavsky: number of regions = (-1)^n p(-1)."""
    dim = p.degree if n is None else n
    return (-1) ** dim * p(-1)


def region_count_identities(n: int) -> tuple[int, int]:
    """The ordered-Bell and Eulerian closed forms for the threshold region count."""
    if n < 2:
        raise DomainError("region_count_identities needs n >= 2")
    bell_form = 2 * (ordered_bell(n) - n * ordered_bell(n - 1))
    euler_form = sum(2**k * (n - k) * eulerian(n - 1, k - 1) for k in range(1, n))
    return bell_form, euler_form


def representative_point(tp: Sequence[int]) -> dict[int, int]:
    """Point of the region of ``tp``: vertex at position i gets w_i * i (1-based)."""
    return {abs(e): (i + 1) * (1 if e > 0 else -1) for i, e in enumerate(tp)}


def region_sign_vector(tp: Sequence[int]) -> dict[tuple[int, int], int]:
    """Side of each hyperplane x_i + x_j = 0 for the region of a construction.

    +1 when both i and j are positive, or exactly one is negative and it
    comes first; -1 otherwise.  The rule is checked against the sign of
    a_i + a_j at :func:`representative_point`.  Any signed permutation is
    accepted; threshold pairs are the canonical labels of the regions.
    """
    tp = check_signed(tp)
    pos = {abs(e): i for i, e in enumerate(tp)}
    neg = {abs(e) for e in tp if e < 0}
    point = representative_point(tp)
    out = {}
    n = len(tp)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ni, nj = i in neg, j in neg
            if not ni and not nj:
                s = 1
            elif ni != nj:
                first_neg = i if ni else j
                other = j if ni else i
                s = 1 if pos[first_neg] < pos[other] else -1
            else:
                s = -1
            value = point[i] + point[j]
            if value == 0 or (value > 0) != (s > 0):
                raise ConsistencyError(f"pair {list(tp)}: rule gives {s:+d} on x{i}+x{j}, point gives {value}")
            out[(i, j)] = s
    return out


def edge_rule_check(tp: Sequence[int]) -> bool:
    """Positive side of x_i + x_j = 0 exactly on the edges of the pair's graph."""
    plus = {e for e, s in region_sign_vector(tp).items() if s > 0}
    return plus == set(graph_from_construction(tp).edges)
