"""Exact integer sequences and dense integer polynomials.

Everything here works on Python ints, so no value is ever truncated.
Sequence functions are memoized per process with ``functools.lru_cache``;
the cache is filled idempotently, so concurrent readers are harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from threshold_atlas.errors import DomainError, IntegralityError


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in ``t`` with integer coefficients, lowest degree first.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def linear(cls, root: int) -> Polynomial:
        """The monic linear polynomial ``t - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __add__(self, other: Polynomial) -> Polynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(m)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def to_text(self, var: str = "t") -> str:
        """Descending-power rendering, e.g. ``t^3-3t^2+3t-1``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return self.to_text()


def poly_eval(p: Polynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def product(factors: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial.constant(1)
    for f in factors:
        out = out * f
    return out


def _check_range(n: int, k: int, name: str) -> None:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"{name}({n}, {k}) requires 0 <= k <= n")


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    _check_range(n, k, "stirling2")
    return _stirling2(n, k)


def _stirling2_lenient(n: int, k: int) -> int:
    # S(n, k) = 0 outside 0 <= k <= n; formulas sum over such k freely.
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling2(n, k)


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return (n - 1) * _stirling1(n - 1, k) + _stirling1(n - 1, k - 1)


def stirling1_unsigned(n: int, k: int) -> int:
    """Number of permutations of [n] with exactly k cycles."""
    _check_range(n, k, "stirling1_unsigned")
    return _stirling1(n, k)


@lru_cache(maxsize=None)
def _eulerian(n: int, k: int) -> int:
    if n == 1:
        return 1 if k == 0 else 0
    if k < 0 or k > n - 1:
        return 0
    return (k + 1) * _eulerian(n - 1, k) + (n - k) * _eulerian(n - 1, k - 1)


def eulerian(n: int, k: int) -> int:
    """Number of permutations of [n] with exactly k descents."""
    if n < 1 or k < 0 or k > n - 1:
        raise DomainError(f"eulerian({n}, {k}) requires n >= 1 and 0 <= k <= n-1")
    return _eulerian(n, k)


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of [n] (Fubini number)."""
    if n < 0:
        raise DomainError("ordered_bell requires n >= 0")
    return sum(factorial(k) * _stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def rising_odd_product(k: int) -> Polynomial:
    """(t+1)(t+3)...(t+2k-1)."""
    if k < 0:
        raise DomainError("rising_odd_product requires k >= 0")
    if k == 0:
        return Polynomial.constant(1)
    return rising_odd_product(k - 1) * Polynomial.linear(-(2 * k - 1))


@lru_cache(maxsize=None)
def falling_odd_product(k: int) -> Polynomial:
    """(t-1)(t-3)...(t-(2k-1)); the characteristic polynomial of type B_k."""
    if k < 0:
        raise DomainError("falling_odd_product requires k >= 0")
    if k == 0:
        return Polynomial.constant(1)
    return falling_odd_product(k - 1) * Polynomial.linear(2 * k - 1)


@lru_cache(maxsize=None)
def _a_coeff(n: int, j: int) -> int:
    if j < 0 or j > n:
        return 0
    if n == 0:
        return 1
    return (2 * n - 1) * _a_coeff(n - 1, j) + _a_coeff(n - 1, j - 1)


def a_coeff(n: int, j: int) -> int:
    """Number of signed permutations of [n] with j odd cycles.

    Computed from the recurrence a(n,j) = (2n-1) a(n-1,j) + a(n-1,j-1)
    with a(0,0) = 1, which reproduces a(n,0) = (2n-1)!! and a(n,n) = 1.
    """
    _check_range(n, j, "a_coeff")
    return _a_coeff(n, j)


def a_coeff_cycle_sum(n: int, j: int) -> int:
    """The same count as a sum over ordinary cycle counts.

    Pick a permutation with i cycles, choose which j are odd, then each
    cycle of length m admits 2^(m-1) sign patterns of either parity.
    """
    _check_range(n, j, "a_coeff_cycle_sum")
    return sum(_stirling1(n, i) * comb(i, j) * 2 ** (n - i) for i in range(j, n + 1))


def lagrange_interpolate(points: Sequence[tuple[int, int]]) -> Polynomial:
    """Integer polynomial of degree < len(points) through ``points``.

    Intermediate arithmetic is exact over the rationals; a non-integral
    final coefficient raises :class:`IntegralityError`.
    """
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be pairwise distinct")
    m = len(points)
    total = [Fraction(0)] * m
    for i, (xi, yi) in enumerate(points):
        # basis numerator prod_{j != i} (t - x_j), built low-to-high
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xj
                nxt[d + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for d, c in enumerate(basis):
            total[d] += c * scale
    coeffs = []
    for d, c in enumerate(total):
        if c.denominator != 1:
            raise IntegralityError(f"coefficient of t^{d} is {c}, not an integer")
        coeffs.append(c.numerator)
    return Polynomial(tuple(coeffs))
