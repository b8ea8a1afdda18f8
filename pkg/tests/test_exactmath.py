from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threshold_atlas.errors import DomainError, IntegralityError
from threshold_atlas.exactmath import (
    Polynomial,
    a_coeff,
    a_coeff_cycle_sum,
    eulerian,
    falling_odd_product,
    lagrange_interpolate,
    ordered_bell,
    poly_eval,
    product,
    rising_odd_product,
    stirling1_unsigned,
    stirling2,
)


def P(*coeffs):
    return Polynomial(tuple(coeffs))


def set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def cycles(perm):
    seen, count = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            count += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
    return count


@pytest.mark.parametrize("n,k,want", [(0, 0, 1), (4, 2, 7), (5, 5, 1)])
def test_stirling2_examples(n, k, want):
    assert stirling2(n, k) == want


@pytest.mark.parametrize("n,k,want", [(3, 1, 2), (4, 4, 1), (4, 2, 11)])
def test_stirling1_examples(n, k, want):
    assert stirling1_unsigned(n, k) == want


@pytest.mark.parametrize("n,k,want", [(3, 1, 4), (5, 0, 1), (2, 1, 1)])
def test_eulerian_examples(n, k, want):
    assert eulerian(n, k) == want


@pytest.mark.parametrize("n,want", [(2, 3), (3, 13), (0, 1)])
def test_ordered_bell_examples(n, want):
    assert ordered_bell(n) == want


def test_sequences_against_enumeration():
    for n in range(7):
        blocks = Counter(len(p) for p in set_partitions(list(range(n))))
        cyc = Counter(cycles(p) for p in permutations(range(n)))
        for k in range(n + 1):
            assert stirling2(n, k) == blocks[k]
            assert stirling1_unsigned(n, k) == cyc[k]
        if n:
            desc = Counter(sum(p[i] > p[i + 1] for i in range(n - 1)) for p in permutations(range(n)))
            assert [eulerian(n, k) for k in range(n)] == [desc[k] for k in range(n)]


def test_sequence_domain_errors():
    with pytest.raises(DomainError):
        stirling2(-1, 0)
    with pytest.raises(DomainError):
        eulerian(0, 0)
    with pytest.raises(DomainError):
        eulerian(3, 3)
    with pytest.raises(DomainError):
        ordered_bell(-2)


def test_odd_products():
    assert rising_odd_product(0).coeffs == (1,)
    assert rising_odd_product(1).coeffs == (1, 1)
    assert rising_odd_product(2).coeffs == (3, 4, 1)
    assert falling_odd_product(0).coeffs == (1,)
    assert falling_odd_product(1).coeffs == (-1, 1)
    assert falling_odd_product(2).coeffs == (3, -4, 1)
    assert falling_odd_product(5) == product(Polynomial.linear(2 * i - 1) for i in range(1, 6))


def test_a_coeff_examples_and_forms():
    assert a_coeff(2, 1) == 4
    assert a_coeff(2, 0) == 3
    for n in range(9):
        assert a_coeff(n, n) == 1
        for j in range(n + 1):
            assert a_coeff(n, j) == a_coeff_cycle_sum(n, j) == rising_odd_product(n).coefficient(j)


def test_poly_eval_examples():
    assert poly_eval(P(0, -1, 1), 5) == 20
    assert poly_eval(P(1), 7) == 1
    assert poly_eval(P(3, -4, 1), 3) == 0


def test_polynomial_basics():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    zero = Polynomial(())
    assert zero.coeffs == () and zero.degree == -1 and zero.to_text() == "0"
    p = P(-1, 3, -3, 1)
    assert p.to_text() == "t^3-3t^2+3t-1"
    assert p == P(-1, 1) * P(-1, 1) * P(-1, 1)
    assert (p - p) == zero
    assert -P(1, 1) == P(-1, -1)


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 0), (1, 0), (2, 2)]).coeffs == (0, -1, 1)
    assert lagrange_interpolate([(5, 1)]).coeffs == (1,)
    assert lagrange_interpolate([(1, 0), (3, 0), (5, 8)]).coeffs == (3, -4, 1)


def test_lagrange_errors():
    with pytest.raises(DomainError):
        lagrange_interpolate([(1, 2), (1, 3)])
    with pytest.raises(IntegralityError):
        lagrange_interpolate([(0, 0), (2, 1)])


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(st.integers(-50, 50), min_size=1, max_size=6),
    xs=st.lists(st.integers(-30, 30), min_size=8, max_size=8, unique=True),
)
def test_lagrange_recovers_integer_polynomials(coeffs, xs):
    p = Polynomial(tuple(coeffs))
    pts = [(x, p(x)) for x in xs[: max(p.degree + 1, 1)]]
    q = lagrange_interpolate(pts)
    assert q == p
    assert all(q(x) == p(x) for x in xs)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), max_size=5), st.lists(st.integers(-9, 9), max_size=5), st.integers(-20, 20))
def test_ring_operations_commute_with_evaluation(a, b, x):
    p, q = Polynomial(tuple(a)), Polynomial(tuple(b))
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
